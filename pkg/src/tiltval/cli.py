"""Command line front end: ``tiltval <info|cells|kl|delta|verify>``.

Exit codes: 0 success, 1 a report with a mathematical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass

import sympy

from .cache import CacheMismatch, load_cache, save_cache
from .engine import Engine
from .rootsys import UnsupportedType

CACHE_ENV = "TILTVAL_CACHE"
OK_STATUSES = ("verified", "weak")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    type_label: str
    p: int | None = None
    max_y_length: int = 20
    max_kl_length: int = 40
    cache_path: str | None = None
    output_format: str = "json"


def parse_word(text: str | None) -> list[int]:
    if text is None:
        raise UsageError("missing word")
    text = text.strip()
    if text in ("", "e", "[]"):
        return []
    if text.startswith("["):
        try:
            word = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad word {text!r}") from exc
    else:
        try:
            word = [int(t) for t in text.replace(" ", "").split(",") if t]
        except ValueError as exc:
            raise UsageError(f"bad word {text!r}") from exc
    if not all(isinstance(i, int) for i in word):
        raise UsageError(f"bad word {text!r}")
    return word


def _element(engine: Engine, text: str):
    word = parse_word(text)
    try:
        return engine.W.parse_word(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_info(engine: Engine, cfg: RunConfig, args) -> tuple[dict, int]:
    W = engine.W
    out = engine.R.to_json()
    out["simple_reflections"] = [
        {"index": i, "matrix": [list(r) for r in W.s(i).matrix], "translation": list(W.s(i).translation)}
        for i in W.S
    ]
    out["invariant_points"] = {str(s): [str(c) for c in W.invariant_point(s)] for s in W.S}
    return out, 0


def cmd_cells(engine: Engine, cfg: RunConfig, args) -> tuple[list, int]:
    if args.s is not None and args.s not in engine.W.S:
        raise UsageError(f"s must be one of {list(engine.W.S)}")
    out = []
    for s in engine.W.S if args.s is None else [args.s]:
        P = engine.parabolic(s)
        for cell in P.two_sided_cells():
            out.append({
                "s": s,
                "a": P.a_function(cell[0]),
                "size": len(cell),
                "cell": [list(engine.W.reduced_word(x)) for x in cell],
            })
    return out, 0


def cmd_kl(engine: Engine, cfg: RunConfig, args) -> tuple[dict, int]:
    x, w = _element(engine, args.x), _element(engine, args.w)
    if not engine.W.bruhat_leq(x, w):
        raise UsageError("kl requires x <= w in the Bruhat order")
    P = engine.kl.kl_polynomial(x, w)
    return {"x": list(engine.W.reduced_word(x)), "w": list(engine.W.reduced_word(w)),
            "P": P.format("q"), "coeffs": P.to_pairs()}, 0


def cmd_delta(engine: Engine, cfg: RunConfig, args) -> tuple[dict, int]:
    s = args.s
    if s not in engine.W.S:
        raise UsageError(f"s must be one of {list(engine.W.S)}")
    w = _element(engine, args.w)
    if w not in engine.parabolic(s):
        raise UsageError("w must lie in the parabolic subgroup W_s")
    y = _element(engine, args.y or "e")
    if any(y.translation):
        raise UsageError("y must be a finite Weyl group element")
    poly = engine.delta_sum(y.finite_part, s, w)
    r = engine.rank
    names = [f"m{i + 1}" for i in range(r)] + [f"l{i + 1}" for i in range(r)]
    return {"s": s, "w": list(engine.W.reduced_word(w)), "y": list(engine.W.reduced_word(y)),
            "delta": poly.format(names)}, 0


def cmd_verify(engine: Engine, cfg: RunConfig, args) -> tuple[list, int]:
    reports = engine.verify_main_theorem(cfg.p)
    code = 0 if all(r.status in OK_STATUSES for r in reports) else 1
    return [r.to_json() for r in reports], code


COMMANDS = {"info": cmd_info, "cells": cmd_cells, "kl": cmd_kl, "delta": cmd_delta, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiltval", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--type", dest="type_label", required=True, help="root system, e.g. A2, B2, G2")
    parser.add_argument("--p", type=int, help="prime larger than the Coxeter number")
    parser.add_argument("--max-y-length", type=int, default=20)
    parser.add_argument("--max-kl-length", type=int, default=40)
    parser.add_argument("--cache", help="JSON-lines table cache (env TILTVAL_CACHE overrides)")
    parser.add_argument("--format", dest="output_format", choices=["json", "csv", "text"], default="json")
    parser.add_argument("--x", help="reduced word, e.g. 2,0,2 (0 is s_a)")
    parser.add_argument("--w", help="reduced word")
    parser.add_argument("--y", help="finite Weyl group word for delta")
    parser.add_argument("--s", type=int, help="index of the omitted simple reflection")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def make_config(args) -> RunConfig:
    cfg = RunConfig(
        type_label=args.type_label,
        p=args.p,
        max_y_length=args.max_y_length,
        max_kl_length=args.max_kl_length,
        cache_path=os.environ.get(CACHE_ENV) or args.cache,
        output_format=args.output_format,
    )
    if args.command == "verify" and cfg.p is None:
        raise UsageError("verify needs --p")
    return cfg


def _flatten(row: dict) -> dict:
    return {k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()}


def render(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2)
    rows = result if isinstance(result, list) else [result]
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(rows[0].keys()) if rows else []
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(_flatten(row))
        return buf.getvalue().rstrip("\n")
    lines = []
    for row in rows:
        lines.append("  ".join(f"{k}={json.dumps(v) if isinstance(v, (list, dict)) else v}"
                               for k, v in row.items() if k != "scan"))
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = make_config(args)
        engine = Engine(cfg.type_label, max_kl_length=cfg.max_kl_length, max_y_length=cfg.max_y_length)
        if cfg.p is not None:
            h = engine.R.coxeter_number
            if not sympy.isprime(cfg.p) or cfg.p <= h:
                raise UsageError(f"--p must be a prime larger than the Coxeter number {h}")
        if cfg.cache_path:
            load_cache(cfg.cache_path, engine)
        result, code = COMMANDS[args.command](engine, cfg, args)
        if cfg.cache_path:
            save_cache(cfg.cache_path, engine)
    except (UsageError, UnsupportedType, CacheMismatch) as exc:
        print(f"tiltval: error: {exc}", file=sys.stderr)
        return 2
    print(render(result, cfg.output_format))
    if code:
        bad = [r for r in result if r.get("status") not in OK_STATUSES]
        print(f"tiltval: {len(bad)} report(s) failed", file=sys.stderr)
        for r in bad:
            print(json.dumps({k: v for k, v in r.items() if k != "scan"}), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
