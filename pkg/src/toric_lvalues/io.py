"""JSON records for matrices, groups, sequences, cyclic modules and places.

    matrix    {"rows": r, "cols": c, "entries": [row-major ints]}
    group     {"rank": n, "invariants": [e1, e2, ...]}
    sequence  {"groups": [group, ...], "maps": [matrix, ...]}
    module    {"group": group, "sigma": matrix, "order": n}
    place     {"q": n, "f": n, "module": module}

Every loader raises :class:`InputError` on malformed input.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .cyclic import CyclicModule
from .errors import InputError
from .lattice import AbHom, FgAbGroup, IntMatrix
from .local import LocalPlaceData
from .sequences import LatticeExactSequence


def _need(rec: Any, keys: tuple[str, ...], what: str) -> dict:
    if not isinstance(rec, dict):
        raise InputError(f"{what} record must be an object")
    missing = [k for k in keys if k not in rec]
    if missing:
        raise InputError(f"{what} record is missing {', '.join(missing)}")
    return rec


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def matrix_from_record(rec: Any) -> IntMatrix:
    rec = _need(rec, ("rows", "cols", "entries"), "matrix")
    entries = rec["entries"]
    if not isinstance(entries, list):
        raise InputError("matrix entries must be a list")
    return IntMatrix(
        _int(rec["rows"], "rows"),
        _int(rec["cols"], "cols"),
        tuple(_int(x, "matrix entry") for x in entries),
    )


def matrix_to_record(m: IntMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": list(m.entries)}


def group_from_record(rec: Any) -> FgAbGroup:
    rec = _need(rec, ("rank",), "group")
    inv = rec.get("invariants", [])
    if not isinstance(inv, list):
        raise InputError("group invariants must be a list")
    return FgAbGroup(_int(rec["rank"], "rank"), tuple(_int(e, "invariant") for e in inv))


def group_to_record(g: FgAbGroup) -> dict:
    return {"rank": g.free_rank, "invariants": list(g.invariant_factors)}


def sequence_from_record(rec: Any) -> LatticeExactSequence:
    rec = _need(rec, ("groups", "maps"), "sequence")
    if not isinstance(rec["groups"], list) or not isinstance(rec["maps"], list):
        raise InputError("sequence groups and maps must be lists")
    groups = [group_from_record(g) for g in rec["groups"]]
    mats = [matrix_from_record(m) for m in rec["maps"]]
    if len(mats) != len(groups) - 1:
        raise InputError("need exactly one map between consecutive groups")
    maps = tuple(AbHom(groups[i], groups[i + 1], m) for i, m in enumerate(mats))
    return LatticeExactSequence(tuple(groups), maps)


def sequence_to_record(seq: LatticeExactSequence) -> dict:
    return {
        "groups": [group_to_record(g) for g in seq.groups],
        "maps": [matrix_to_record(f.matrix) for f in seq.maps],
    }


def module_from_record(rec: Any) -> CyclicModule:
    rec = _need(rec, ("group", "sigma", "order"), "module")
    return CyclicModule(group_from_record(rec["group"]), matrix_from_record(rec["sigma"]), _int(rec["order"], "order"))


def module_to_record(m: CyclicModule) -> dict:
    return {"group": group_to_record(m.group), "sigma": matrix_to_record(m.sigma), "order": m.order}


def place_from_record(rec: Any) -> LocalPlaceData:
    rec = _need(rec, ("q", "f", "module"), "place")
    return LocalPlaceData(_int(rec["q"], "q"), _int(rec["f"], "f"), module_from_record(rec["module"]))


def place_to_record(p: LocalPlaceData) -> dict:
    return {"q": p.q, "f": p.f, "module": module_to_record(p.module)}


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc
