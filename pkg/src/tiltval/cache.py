"""JSON-lines persistence for the KL and antispherical tables.

First line is a header ``{"kind": "header", "type": ..., "version": 1}``; every
other line is ``{"kind": "kl"|"pkl", "x": [...], "w": [...], "coeffs": [[exp, c], ...]}``
with reduced words as index arrays (0 = s_a) and coefficients of the
v-normalized polynomials h_{x,w} and n_{x,w}.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

FORMAT_VERSION = 1


class CacheMismatch(ValueError):
    pass


def load_cache(path, engine) -> int:
    """Fill the engine's tables from ``path``; returns the number of records read."""
    path = Path(path)
    if not path.exists():
        return 0
    kl, pkl = [], []
    with path.open() as fh:
        lines = [ln for ln in fh if ln.strip()]
    if not lines:
        return 0
    header = json.loads(lines[0])
    if header.get("kind") != "header" or header.get("version") != FORMAT_VERSION:
        raise CacheMismatch(f"{path}: missing or unsupported header")
    if header.get("type") != engine.type_label:
        raise CacheMismatch(f"{path} holds type {header.get('type')}, not {engine.type_label}")
    for ln in lines[1:]:
        rec = json.loads(ln)
        if rec["kind"] == "kl":
            kl.append(rec)
        elif rec["kind"] == "pkl":
            pkl.append(rec)
        else:
            raise CacheMismatch(f"unknown record kind {rec['kind']!r}")
    engine.kl.load_records(kl)
    engine.pkl.load_records(pkl)
    return len(kl) + len(pkl)


def save_cache(path, engine) -> None:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w") as fh:
        fh.write(json.dumps({"kind": "header", "type": engine.type_label, "version": FORMAT_VERSION}) + "\n")
        for rec in engine.kl.records():
            fh.write(json.dumps(rec) + "\n")
        for rec in engine.pkl.records():
            fh.write(json.dumps(rec) + "\n")
    os.replace(tmp, path)
