"""JSON file formats for solutions, braces, maps, permutation braces and witnesses.

Keys are exact and lowercase.  With ``strict=True`` (the default) unknown keys
are rejected.  Parsing checks shape and ranges only; the axioms are checked
by the validators.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .braces import SkewBrace
from .errors import FormatError
from .morphisms import SolutionMap
from .permbrace import PermBrace
from .solutions import FiniteSolution
from .solubility import NotSoluble, Soluble, SolubilityWitness, Unknown, WitnessLevel

SOLUTION_KEYS = {"n", "lambda", "rho"}
BRACE_KEYS = {"n", "add", "mul", "identity"}
MAP_KEYS = {"source", "target", "table"}
PERMBRACE_KEYS = BRACE_KEYS | {"generators", "witnesses"}
WITNESS_KEYS = {"t", "levels"}
LEVEL_KEYS = {"brace", "map", "i_kernel", "abelian_ideal"}


def _keys(d: Any, required: set[str], allowed: set[str], strict: bool, what: str) -> None:
    if not isinstance(d, dict):
        raise FormatError(f"{what}: expected a JSON object")
    missing = required - d.keys()
    if missing:
        raise FormatError(f"{what}: missing key(s) {sorted(missing)}")
    extra = d.keys() - allowed
    if strict and extra:
        raise FormatError(f"{what}: unknown key(s) {sorted(extra)}")


def _int(v: Any, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what}: expected an integer, got {v!r}")
    return v


def _int_list(v: Any, what: str) -> list[int]:
    if not isinstance(v, list):
        raise FormatError(f"{what}: expected a list")
    return [_int(x, what) for x in v]


def _table(v: Any, what: str) -> list[list[int]]:
    if not isinstance(v, list):
        raise FormatError(f"{what}: expected a list of rows")
    return [_int_list(row, what) for row in v]


def _rows(table) -> list[list[int]]:
    return [list(row) for row in table]


# --- solutions and braces ----------------------------------------------------


def solution_to_dict(S: FiniteSolution) -> dict:
    return {"n": S.n, "lambda": _rows(S.lam), "rho": _rows(S.rho)}


def solution_from_dict(d: Any, strict: bool = True) -> FiniteSolution:
    _keys(d, SOLUTION_KEYS, SOLUTION_KEYS, strict, "solution")
    n = _int(d["n"], "n")
    return FiniteSolution(n, _table(d["lambda"], "lambda"), _table(d["rho"], "rho"))


def brace_to_dict(B: SkewBrace) -> dict:
    return {"n": B.n, "add": _rows(B.add), "mul": _rows(B.mul), "identity": B.identity}


def brace_from_dict(d: Any, strict: bool = True, allowed: set[str] = BRACE_KEYS) -> SkewBrace:
    _keys(d, BRACE_KEYS, allowed, strict, "brace")
    return SkewBrace(
        _int(d["n"], "n"),
        _table(d["add"], "add"),
        _table(d["mul"], "mul"),
        _int(d["identity"], "identity"),
    )


def map_to_dict(f: SolutionMap) -> dict:
    return {
        "source": solution_to_dict(f.source),
        "target": solution_to_dict(f.target),
        "table": list(f.table),
    }


def map_from_dict(d: Any, strict: bool = True, base: Path | None = None) -> SolutionMap:
    """``source`` and ``target`` are inline solutions or paths to solution files."""
    _keys(d, MAP_KEYS, MAP_KEYS, strict, "map")

    def side(v):
        if isinstance(v, str):
            path = Path(v) if base is None else base / v
            return solution_from_dict(read_json(path), strict)
        return solution_from_dict(v, strict)

    try:
        return SolutionMap(side(d["source"]), side(d["target"]), tuple(_int_list(d["table"], "table")))
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"map: {exc}") from exc


def permbrace_to_dict(PB: PermBrace) -> dict:
    out = brace_to_dict(PB.brace)
    out["generators"] = list(PB.generators)
    out["witnesses"] = [list(w) for w in PB.group.witnesses]
    return out


# --- witnesses and verdicts --------------------------------------------------


def _opt_list(v):
    return None if v is None else list(v)


def witness_to_dict(W: SolubilityWitness) -> dict:
    return {
        "t": W.t,
        "levels": [
            {
                "brace": brace_to_dict(lvl.brace),
                "map": list(lvl.map),
                "i_kernel": _opt_list(lvl.i_kernel),
                "abelian_ideal": _opt_list(lvl.abelian_ideal),
            }
            for lvl in W.levels
        ],
    }


def witness_from_dict(d: Any, source: FiniteSolution, strict: bool = True) -> SolubilityWitness:
    """The witness format omits the source solution, so it is passed in."""
    _keys(d, WITNESS_KEYS, WITNESS_KEYS, strict, "witness")
    t = _int(d["t"], "t")
    if not isinstance(d["levels"], list) or len(d["levels"]) != t + 1:
        raise FormatError("witness: 'levels' must be a list of t + 1 levels")
    levels = []
    for k, lv in enumerate(d["levels"]):
        _keys(lv, LEVEL_KEYS, LEVEL_KEYS, strict, f"level {k}")
        levels.append(
            WitnessLevel(
                brace=brace_from_dict(lv["brace"], strict),
                map=tuple(_int_list(lv["map"], "map")),
                i_kernel=None if lv["i_kernel"] is None else tuple(_int_list(lv["i_kernel"], "i_kernel")),
                abelian_ideal=None
                if lv["abelian_ideal"] is None
                else tuple(_int_list(lv["abelian_ideal"], "abelian_ideal")),
            )
        )
    return SolubilityWitness(source, tuple(levels))


def verdict_to_dict(v: Soluble | NotSoluble | Unknown) -> dict:
    if isinstance(v, Soluble):
        return {"verdict": v.kind, "witness": witness_to_dict(v.witness)}
    if isinstance(v, NotSoluble):
        return {"verdict": v.kind, "reason": v.reason, "detail": v.detail}
    return {"verdict": v.kind, "bounds": dict(v.bounds), "notes": list(v.notes)}


# --- files -------------------------------------------------------------------


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_hash(obj: dict) -> str:
    return hashlib.sha256(dumps(obj).encode("utf-8")).hexdigest()[:16]


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def write_json(path: str | Path, obj: dict) -> None:
    Path(path).write_text(json.dumps(obj, indent=None, sort_keys=True) + "\n", encoding="utf-8")


def detect_kind(d: Any) -> str:
    """``solution``, ``brace`` or ``map`` from the keys present."""
    if not isinstance(d, dict):
        raise FormatError("expected a JSON object")
    keys = set(d)
    if "lambda" in keys:
        return "solution"
    if "add" in keys:
        return "brace"
    if "table" in keys:
        return "map"
    if "levels" in keys:
        return "witness"
    raise FormatError(f"cannot tell the object kind from keys {sorted(keys)}")


def load_object(path: str | Path, strict: bool = True):
    """Returns ``(kind, object)``."""
    d = read_json(path)
    kind = detect_kind(d)
    if kind == "solution":
        return kind, solution_from_dict(d, strict)
    if kind == "brace":
        return kind, brace_from_dict(d, strict)
    if kind == "map":
        return kind, map_from_dict(d, strict, Path(path).parent)
    raise FormatError("witness files need their source solution; use the soluble command")
