"""Command-line front end.

Exit codes: 0 success, 1 validation failure or counterexample, 2 capacity
bound exceeded, 3 I/O or parse error.  Inputs are JSON files or the names of
built-in catalog entries.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from . import io
from .braces import associated_solution, enumerate_braces, validate_brace
from .errors import CapacityError, FormatError, PreconditionError
from .harness import HARNESSES, run_harness
from .morphisms import SolutionMap, is_homomorphism
from .permbrace import DEFAULT_MAX_ORDER, build_perm_brace
from .reports import analyze
from .solubility import Soluble, search_witness, verify_witness
from .solutions import FiniteSolution, enumerate_solutions, validate_ybe

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY, EXIT_IO = 0, 1, 2, 3


def _load(source: str, strict: bool):
    """``(name, kind, object)`` from a file path or a catalog name."""
    path = Path(source)
    if not path.exists() and source in cat.catalog():
        entry = cat.get(source)
        return entry.name, entry.kind, entry.payload
    kind, obj = io.load_object(path, strict)
    return str(path), kind, obj


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if args.json else text)


def _as_solution(kind: str, obj) -> FiniteSolution:
    if kind == "solution":
        return obj
    if kind == "brace":
        if not validate_brace(obj).ok:
            raise PreconditionError("brace fails validation")
        return associated_solution(obj)
    raise PreconditionError(f"expected a solution or a brace, got a {kind}")


def cmd_validate(args) -> int:
    name, kind, obj = _load(args.input, args.strict)
    if kind == "solution":
        rep = validate_ybe(obj)
        ok, errors = rep.ok, rep.errors
    elif kind == "brace":
        rep = validate_brace(obj)
        ok, errors = rep.ok, rep.errors
    else:
        f: SolutionMap = obj
        errors = [f"{side}: {r.message}" for side, r in (("source", validate_ybe(f.source)), ("target", validate_ybe(f.target))) if not r.ok]
        if not errors and not is_homomorphism(f):
            errors.append("map is not a homomorphism of solutions")
        ok = not errors
    text = f"{name}: {kind} {'valid' if ok else 'INVALID: ' + errors[0]}"
    _emit(args, {"input": name, "kind": kind, "ok": ok, "errors": errors}, text)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_analyze(args) -> int:
    name, kind, obj = _load(args.input, args.strict)
    if kind == "map":
        raise FormatError("analyze takes a solution or a brace")
    rep = analyze(
        obj,
        name,
        simple=args.simple,
        decompose=args.decompose,
        retract=args.retract,
        permbrace=args.permbrace,
        soluble=args.soluble,
        max_order=args.max_order,
        max_depth=args.max_depth,
    )
    _emit(args, rep.to_dict(), rep.render())
    valid = (rep.solution is None or rep.solution.ybe_ok) and (rep.brace is None or rep.brace["ok"])
    return EXIT_OK if valid else EXIT_INVALID


def cmd_enumerate(args) -> int:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if args.kind == "solutions":
        objs = ((io.solution_to_dict(S), "solution") for S in enumerate_solutions(args.n, args.mode))
    else:
        objs = ((io.brace_to_dict(B), "brace") for B in enumerate_braces(args.n, args.additive))
    files = []
    for d, prefix in objs:
        path = out / f"{prefix}-n{args.n}-{io.content_hash(d)}.json"
        io.write_json(path, d)
        files.append(str(path))
    _emit(args, {"count": len(files), "files": files}, f"{len(files)} {args.kind} written to {out}")
    return EXIT_OK


def cmd_harness(args) -> int:
    kwargs = {"seed": args.seed} if args.name == "permbrace-selfcheck" else {}
    res = run_harness(args.name, **kwargs)
    if res.counterexamples and args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(json.dumps(res.counterexamples, indent=1) + "\n", encoding="utf-8")
    payload = {
        "name": res.name,
        "passed": res.passed,
        "checked": res.checked,
        "counterexamples": res.counterexamples,
        "warnings": res.warnings,
    }
    text = res.summary()
    if res.counterexamples:
        text += "\nfirst counterexample: " + io.dumps(res.counterexamples[0])
    _emit(args, payload, text)
    return EXIT_OK if res.passed else EXIT_INVALID


def cmd_catalog(args) -> int:
    if args.export:
        entry = cat.get(args.export)
        d = io.solution_to_dict(entry.payload) if entry.kind == "solution" else io.brace_to_dict(entry.payload)
        print(json.dumps(d))
        return EXIT_OK
    entries = list(cat.catalog().values())
    payload = [{"name": e.name, "kind": e.kind, "n": e.payload.n, "provenance": e.provenance} for e in entries]
    text = "\n".join(f"{e.name:24} {e.kind:9} n={e.payload.n:<3} {e.provenance}" for e in entries)
    _emit(args, {"entries": payload}, text)
    return EXIT_OK


def cmd_permbrace(args) -> int:
    name, kind, obj = _load(args.input, args.strict)
    S = _as_solution(kind, obj)
    if not validate_ybe(S).ok:
        print(f"{name}: not a valid solution", file=sys.stderr)
        return EXIT_INVALID
    PB = build_perm_brace(S, max_order=args.max_order)
    d = io.permbrace_to_dict(PB)
    if args.out:
        io.write_json(args.out, d)
    text = f"{name}: permutation brace of order {PB.order}" + (f", written to {args.out}" if args.out else "")
    _emit(args, d if not args.out else {"order": PB.order, "out": args.out}, text)
    return EXIT_OK


def cmd_soluble(args) -> int:
    name, kind, obj = _load(args.input, args.strict)
    S = _as_solution(kind, obj)
    if not validate_ybe(S).ok:
        print(f"{name}: not a valid solution", file=sys.stderr)
        return EXIT_INVALID
    if args.verify:
        W = io.witness_from_dict(io.read_json(args.verify), S, args.strict)
        check = verify_witness(S, W)
        ok = check.strict or (check.status == "conditional" and not args.strict)
        text = f"{name}: witness {check.status}" + (f" at ({check.condition}): {check.message}" if check.condition else "")
        _emit(args, {"status": check.status, "condition": check.condition, "level": check.level, "message": check.message}, text)
        return EXIT_OK if ok else EXIT_INVALID
    verdict = search_witness(S, max_depth=args.max_depth, max_target_order=args.max_order)
    d = io.verdict_to_dict(verdict)
    if isinstance(verdict, Soluble):
        text = f"{name}: soluble (witness with t = {verdict.witness.t})"
        if args.out:
            io.write_json(args.out, d["witness"])
            text += f", written to {args.out}"
    elif verdict.kind == "not_soluble":
        text = f"{name}: not soluble ({verdict.reason})"
    else:
        text = f"{name}: unknown within bounds {verdict.bounds}" + "".join(f"\n  {n}" for n in verdict.notes)
    _emit(args, d, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="reject unknown keys; conditional witnesses fail")

    p = argparse.ArgumentParser(prog="skewsol", description="Finite set-theoretic solutions and skew braces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a solution, brace or map file")
    s.add_argument("input", help="JSON file or catalog name")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", parents=[common], help="run selected analyses")
    s.add_argument("input")
    for flag in ("simple", "decompose", "retract", "permbrace", "soluble"):
        s.add_argument(f"--{flag}", action="store_true")
    s.add_argument("--max-order", type=int, default=6, help="largest brace order tried per level")
    s.add_argument("--max-depth", type=int, default=3, help="largest witness depth t")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("enumerate", parents=[common], help="write all objects of a given size")
    s.add_argument("kind", choices=["solutions", "braces"])
    s.add_argument("n", type=int)
    s.add_argument("out_dir")
    s.add_argument("--mode", choices=["all", "involutive"], default="all")
    s.add_argument("--additive", help="catalog group name fixing the additive group (braces)")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("harness", parents=[common], help="run a named property harness")
    s.add_argument("name", choices=sorted(HARNESSES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="write counterexamples here")
    s.set_defaults(func=cmd_harness)

    s = sub.add_parser("catalog", parents=[common], help="list built-in entries")
    s.add_argument("--export", metavar="NAME", help="print the JSON of one entry")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("permbrace", parents=[common], help="build and export the permutation brace")
    s.add_argument("input")
    s.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="largest group order built")
    s.add_argument("--out")
    s.set_defaults(func=cmd_permbrace)

    s = sub.add_parser("soluble", parents=[common], help="solubility verdict and witness")
    s.add_argument("input")
    s.add_argument("--max-order", type=int, default=6, help="largest brace order tried per level")
    s.add_argument("--max-depth", type=int, default=3, help="largest witness depth t")
    s.add_argument("--out", help="write the witness file here")
    s.add_argument("--verify", metavar="WITNESS", help="check a witness file instead of searching")
    s.set_defaults(func=cmd_soluble)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PreconditionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
