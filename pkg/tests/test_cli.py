import json

import pytest

from tiltval.cli import main, parse_word, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--type", "A1")
    data = json.loads(out)
    assert code == 0
    assert data["coxeter_number"] == 2
    assert data["invariant_points"]["1"] == ["1"]
    code, out, _ = run(capsys, "info", "--type", "A2")
    assert json.loads(out)["N"] == 3


def test_bad_type(capsys):
    code, _, err = run(capsys, "info", "--type", "Q7")
    assert code == 2 and "Q7" in err


def test_cells(capsys):
    code, out, _ = run(capsys, "cells", "--type", "A2")
    rows = [r for r in json.loads(out) if r["s"] == 0]
    assert len(rows) == 3 and [r["a"] for r in rows] == [0, 1, 3]
    code, out, _ = run(capsys, "cells", "--type", "A2", "--s", "2")
    assert {r["s"] for r in json.loads(out)} == {2}
    code, _, _ = run(capsys, "cells", "--type", "A2", "--s", "5")
    assert code == 2


def test_kl(capsys):
    code, out, _ = run(capsys, "kl", "--type", "A2", "--x", "e", "--w", "e")
    assert json.loads(out)["P"] == "1"
    code, out, _ = run(capsys, "kl", "--type", "A3", "--x", "2", "--w", "2,1,3,2")
    assert json.loads(out)["P"] == "q + 1"
    code, _, _ = run(capsys, "kl", "--type", "A2", "--x", "1,1", "--w", "1")
    assert code == 2


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "--type", "A1", "--s", "1", "--w", "0")
    assert code == 0 and json.loads(out)["delta"] == "2*m1"
    code, _, _ = run(capsys, "delta", "--type", "A1", "--s", "1", "--w", "1")
    assert code == 2


def test_verify_a1(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A1", "--p", "5")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 4
    assert all(r["status"] == "verified" for r in reports)
    assert list(reports[0].keys())[:5] == ["type", "p", "s", "cell", "a"]


@pytest.mark.parametrize("p", ["2", "3", "9"])
def test_verify_rejects_bad_p(capsys, p):
    code, _, err = run(capsys, "verify", "--type", "A2", "--p", p)
    assert code == 2


def test_verify_needs_p(capsys):
    assert run(capsys, "verify", "--type", "A1")[0] == 2


def test_formats(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A1", "--p", "5", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("type,p,s,cell,a") and len(lines) == 5
    code, out, _ = run(capsys, "verify", "--type", "A1", "--p", "5", "--format", "text")
    assert out.count("status=verified") == 4


def test_cache_round_trip(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "b2.jsonl"
    code, cold, _ = run(capsys, "verify", "--type", "B2", "--p", "7", "--cache", str(cache))
    assert code == 0 and cache.exists()
    first = cache.read_text()
    header = json.loads(first.splitlines()[0])
    assert header == {"kind": "header", "type": "B2", "version": 1}
    code, warm, _ = run(capsys, "verify", "--type", "B2", "--p", "7", "--cache", str(cache))
    assert warm == cold
    assert cache.read_text() == first
    # env var overrides --cache
    other = tmp_path / "env.jsonl"
    monkeypatch.setenv("TILTVAL_CACHE", str(other))
    run(capsys, "info", "--type", "B2", "--cache", str(cache))
    assert other.exists()


def test_cache_type_mismatch(capsys, tmp_path):
    cache = tmp_path / "c.jsonl"
    run(capsys, "cells", "--type", "A2", "--cache", str(cache))
    code, _, err = run(capsys, "cells", "--type", "B2", "--cache", str(cache))
    assert code == 2 and "A2" in err


def test_parse_word():
    assert parse_word("e") == [] and parse_word("[2,0,2]") == [2, 0, 2] and parse_word("1,0") == [1, 0]
    with pytest.raises(UsageError):
        parse_word("a,b")
