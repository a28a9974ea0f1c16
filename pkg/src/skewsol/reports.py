"""Aggregated analysis reports with matching text and JSON renderings."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Any

from .braces import SkewBrace, associated_solution, is_soluble_brace, validate_brace
from .errors import CapacityError
from .io import verdict_to_dict
from .morphisms import MAX_CONGRUENCE_N, is_i_simple, is_simple_solution
from .permbrace import build_perm_brace
from .solubility import Soluble, search_witness
from .solutions import (
    FiniteSolution,
    is_decomposable,
    is_involutive,
    is_twist,
    multipermutation_level,
    validate_ybe,
)


@dataclass
class SolutionReport:
    ybe_ok: bool
    nondegenerate: bool
    involutive: bool | None = None
    twist: bool | None = None
    decomposable: bool | None = None
    indecomposable: bool | None = None
    i_simple: bool | None = None
    simple: bool | None = None
    multipermutation_level: int | str | None = None
    decomposition: list[list[int]] | None = None
    errors: list[str] = field(default_factory=list)

    def consistency_errors(self) -> list[str]:
        out = []
        if self.twist and self.involutive is False:
            out.append("twist but not involutive")
        if self.decomposable is not None and self.indecomposable is not None:
            if self.decomposable == self.indecomposable:
                out.append("decomposable and indecomposable flags agree")
        if self.i_simple is not None and self.indecomposable is not None:
            if self.i_simple != self.indecomposable:
                out.append("i-simple and indecomposable disagree")
        return out


def solution_report(
    S: FiniteSolution,
    simple: bool = True,
    decompose: bool = True,
    retract: bool = True,
    max_level: int = 64,
    max_congruence_n: int = MAX_CONGRUENCE_N,
) -> SolutionReport:
    v = validate_ybe(S)
    nondeg = not any(e.startswith("non-degeneracy") for e in v.errors)
    rep = SolutionReport(ybe_ok=v.ok, nondegenerate=nondeg, errors=list(v.errors))
    if not v.ok:
        return rep
    rep.involutive = is_involutive(S)
    rep.twist = is_twist(S)
    if decompose:
        split = is_decomposable(S)
        rep.decomposable = split is not None
        rep.indecomposable = split is None
        if split is not None:
            rep.decomposition = [sorted(split[0]), sorted(split[1])]
    if simple and S.n > 1:
        try:
            rep.simple = is_simple_solution(S, max_congruence_n)
            rep.i_simple = is_i_simple(S, max_congruence_n)
        except CapacityError as exc:
            rep.errors.append(f"simplicity: {exc}")
    if retract:
        level = multipermutation_level(S, max_level)
        rep.multipermutation_level = "none within bound" if level is None else level
    return rep


@dataclass
class AnalysisReport:
    input: str
    kind: str
    solution: SolutionReport | None = None
    brace: dict[str, Any] | None = None
    permbrace: dict[str, Any] | None = None
    solubility: dict[str, Any] | None = None
    timings: dict[str, float] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def render(self) -> str:
        lines = [f"input: {self.input} ({self.kind})"]
        for section in ("solution", "brace", "permbrace", "solubility"):
            value = getattr(self, section)
            if value is None:
                continue
            items = asdict(value) if isinstance(value, SolutionReport) else value
            for key, val in items.items():
                if val is None or val == []:
                    continue
                lines.append(f"{section}.{key}: {val}")
        for key, val in self.timings.items():
            lines.append(f"time.{key}: {val:.3f}s")
        for err in self.errors:
            lines.append(f"error: {err}")
        return "\n".join(lines)


def _chain_lists(chain) -> list[list[int]] | None:
    return None if chain is None else chain.ascending()


def analyze(
    obj: FiniteSolution | SkewBrace,
    name: str,
    *,
    simple: bool = False,
    decompose: bool = False,
    retract: bool = False,
    permbrace: bool = False,
    soluble: bool = False,
    max_order: int = 6,
    max_depth: int = 3,
) -> AnalysisReport:
    """Run the requested analyses; capacity errors are recorded per section."""
    if isinstance(obj, SkewBrace):
        rep = AnalysisReport(name, "brace")
        t0 = time.perf_counter()
        br = validate_brace(obj)
        rep.brace = {"ok": br.ok, "errors": br.errors}
        if br.ok and soluble:
            rep.brace["soluble_chain"] = _chain_lists(is_soluble_brace(obj))
        rep.timings["brace"] = time.perf_counter() - t0
        if not br.ok:
            return rep
        S = associated_solution(obj)
    else:
        rep = AnalysisReport(name, "solution")
        S = obj
    t0 = time.perf_counter()
    rep.solution = solution_report(S, simple=simple, decompose=decompose, retract=retract)
    rep.timings["solution"] = time.perf_counter() - t0
    if not rep.solution.ybe_ok:
        return rep
    if permbrace:
        t0 = time.perf_counter()
        try:
            PB = build_perm_brace(S)
            rep.permbrace = {"order": PB.order, "soluble_chain": _chain_lists(is_soluble_brace(PB.brace))}
        except CapacityError as exc:
            rep.errors.append(f"permbrace: {exc}")
        rep.timings["permbrace"] = time.perf_counter() - t0
    if soluble:
        t0 = time.perf_counter()
        verdict = search_witness(S, max_depth=max_depth, max_target_order=max_order)
        d = verdict_to_dict(verdict)
        if isinstance(verdict, Soluble):
            d = {"verdict": d["verdict"], "t": verdict.witness.t}
        rep.solubility = d
        rep.timings["soluble"] = time.perf_counter() - t0
    return rep
