"""Named property harnesses run over generated corpora.

Each harness returns a :class:`HarnessResult`; counterexamples are stored in
serialized form so they can be written out by the CLI.
"""

from __future__ import annotations

import itertools
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .braces import (
    SkewBrace,
    associated_solution,
    enumerate_braces,
    enumerate_ideals,
    is_soluble_brace,
    quotient_brace,
)
from .errors import PreconditionError
from .io import brace_to_dict, map_to_dict, solution_to_dict, witness_to_dict
from .morphisms import (
    SolutionMap,
    brace_hom_to_i_hom,
    enumerate_congruences,
    i_kernel_blocks,
    is_i_simple,
    quotient_solution,
    strong_left_ideal_to_i_hom,
)
from .permbrace import build_perm_brace, i_kernel_ideal_check, random_witness_pairs
from .solubility import Soluble, brace_chain_to_witness, search_witness, verify_witness
from .solutions import FiniteSolution, enumerate_solutions, is_decomposable

DEFAULT_SEED = 0


@dataclass
class HarnessResult:
    name: str
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checked, {len(self.counterexamples)} counterexamples, {self.elapsed:.2f}s)"
        return "\n".join([line] + [f"warning: {w}" for w in self.warnings])


def _finish(res: HarnessResult, t0: float) -> HarnessResult:
    res.elapsed = time.perf_counter() - t0
    if res.checked == 0:
        msg = "empty corpus: vacuous pass"
        res.warnings.append(msg)
        warnings.warn(f"{res.name}: {msg}", stacklevel=3)
    return res


# --- corpora -------------------------------------------------------------------


def solution_corpus(max_n: int = 3, involutive_n: int | None = 4) -> Iterator[FiniteSolution]:
    for n in range(1, max_n + 1):
        yield from enumerate_solutions(n, "all")
    if involutive_n is not None and involutive_n > max_n:
        for n in range(max_n + 1, involutive_n + 1):
            yield from enumerate_solutions(n, "involutive")


def brace_corpus(order_bound: int = 6) -> Iterator[SkewBrace]:
    for n in range(1, order_bound + 1):
        yield from enumerate_braces(n)


def brace_i_epimorphisms(B: SkewBrace) -> Iterator[tuple[SolutionMap, tuple[int, ...], str]]:
    """i-epimorphisms out of (B, r_B) from quotient maps and strong left ideals."""
    for I in enumerate_ideals(B):
        Q, proj = quotient_brace(B, I.members)
        f, X0 = brace_hom_to_i_hom(proj, B, Q)
        yield f, X0, f"quotient by ideal {sorted(I.members)}"
    for L in enumerate_ideals(B, "strong_left_ideal"):
        if len(L) == B.n:
            continue
        f, X0 = strong_left_ideal_to_i_hom(B, L.members)
        yield f, X0, f"strong left ideal {sorted(L.members)}"


def solution_i_epimorphisms(S: FiniteSolution) -> Iterator[tuple[SolutionMap, tuple[int, ...], str]]:
    for P in enumerate_congruences(S):
        blocks = i_kernel_blocks(S, P)
        if not blocks:
            continue
        _, f = quotient_solution(S, P)
        for X0 in blocks:
            yield f, X0, f"quotient by {list(P.blocks)}"


# --- harnesses -----------------------------------------------------------------


def i_simple_equivalence(corpus: Iterable[FiniteSolution] | None = None) -> HarnessResult:
    t0 = time.perf_counter()
    res = HarnessResult("i-simple-equivalence")
    for S in solution_corpus() if corpus is None else corpus:
        if S.n < 2:
            continue
        res.checked += 1
        indecomposable = is_decomposable(S) is None
        if indecomposable != is_i_simple(S):
            res.counterexamples.append({"solution": solution_to_dict(S), "indecomposable": indecomposable})
    return _finish(res, t0)


def strong_left_invariance(corpus: Iterable[SkewBrace] | None = None) -> HarnessResult:
    t0 = time.perf_counter()
    res = HarnessResult("strong-left-invariance")
    for B in brace_corpus() if corpus is None else corpus:
        for L in enumerate_ideals(B, "strong_left_ideal"):
            res.checked += 1
            S = L.members
            for a in B.elements():
                if {B.lam[a][s] for s in S} != S or {B.rho[a][s] for s in S} != S:
                    res.counterexamples.append({"brace": brace_to_dict(B), "subset": sorted(S), "element": a})
                    break
    return _finish(res, t0)


def solubility_equivalence(corpus: Iterable[SkewBrace] | None = None, order_bound: int = 6) -> HarnessResult:
    """Brace solubility, a found witness, and perm-brace solubility agree."""
    if order_bound > 6:
        raise PreconditionError("the equivalence harness supports order_bound <= 6")
    t0 = time.perf_counter()
    res = HarnessResult("solubility-equivalence")
    for B in brace_corpus(order_bound) if corpus is None else corpus:
        res.checked += 1
        S = associated_solution(B)
        a = is_soluble_brace(B) is not None
        b = isinstance(search_witness(S, max_depth=3, max_target_order=max(B.n, 1)), Soluble)
        c = is_soluble_brace(build_perm_brace(S).brace) is not None
        if not a == b == c:
            res.counterexamples.append(
                {"brace": brace_to_dict(B), "brace_soluble": a, "witness_found": b, "perm_brace_soluble": c}
            )
    return _finish(res, t0)


def witness_roundtrip(corpus: Iterable[SkewBrace] | None = None) -> HarnessResult:
    t0 = time.perf_counter()
    res = HarnessResult("witness-roundtrip")
    for B in brace_corpus() if corpus is None else corpus:
        chain = is_soluble_brace(B)
        if chain is None:
            continue
        res.checked += 1
        W = brace_chain_to_witness(B, chain)
        check = verify_witness(associated_solution(B), W)
        if not check.strict:
            res.counterexamples.append({"brace": brace_to_dict(B), "witness": witness_to_dict(W), "check": check.message})
    return _finish(res, t0)


def i_kernel_ideal(corpus: Iterable[SkewBrace] | None = None) -> HarnessResult:
    t0 = time.perf_counter()
    res = HarnessResult("i-kernel-ideal")
    for B in brace_corpus() if corpus is None else corpus:
        S = associated_solution(B)
        PB_S = build_perm_brace(S)
        targets: dict[FiniteSolution, object] = {}
        for f, X0, how in brace_i_epimorphisms(B):
            if f.target not in targets:
                targets[f.target] = build_perm_brace(f.target)
            res.checked += 1
            rep = i_kernel_ideal_check(S, f, X0, PB_S, targets[f.target])
            if not rep.ok:
                res.counterexamples.append({"map": map_to_dict(f), "i_kernel": list(X0), "via": how, "notes": rep.notes})
    return _finish(res, t0)


def _fixed_point_errors(T: FiniteSolution, y0: int) -> list[str]:
    ident = tuple(range(T.n))
    errs = []
    if T.lam[y0] != ident or T.rho[y0] != ident:
        errs.append("lambda or rho of the image point is not the identity")
    if any(T.lam[y][y0] != y0 or T.rho[y][y0] != y0 for y in range(T.n)):
        errs.append("the image point is moved by some lambda_y or rho_y")
    return errs


def remark_fixed_point(
    braces: Iterable[SkewBrace] | None = None,
    solutions: Iterable[FiniteSolution] | None = None,
) -> HarnessResult:
    t0 = time.perf_counter()
    res = HarnessResult("remark-fixed-point")
    gens = [brace_i_epimorphisms(B) for B in (brace_corpus() if braces is None else braces)]
    gens += [solution_i_epimorphisms(S) for S in (solution_corpus() if solutions is None else solutions)]
    for f, X0, how in itertools.chain.from_iterable(gens):
        res.checked += 1
        errs = _fixed_point_errors(f.target, f.table[X0[0]])
        if errs:
            res.counterexamples.append({"map": map_to_dict(f), "i_kernel": list(X0), "via": how, "errors": errs})
    return _finish(res, t0)


def permbrace_selfcheck(
    corpus: Iterable[FiniteSolution] | None = None, seed: int = DEFAULT_SEED, pairs: int = 100
) -> HarnessResult:
    """Validation, closure agreement and word independence of lambda and rho."""
    t0 = time.perf_counter()
    res = HarnessResult("permbrace-selfcheck")
    if corpus is None:
        corpus = itertools.chain(solution_corpus(), (associated_solution(B) for B in brace_corpus()))
    for S in corpus:
        res.checked += 1
        try:
            PB = build_perm_brace(S, check=True)
        except Exception as exc:  # any self-check failure is a counterexample
            res.counterexamples.append({"solution": solution_to_dict(S), "error": str(exc)})
            continue
        for g, w, alt in random_witness_pairs(PB, pairs, seed):
            if PB.lam_index(g, w) != PB.lam_index(g, alt) or PB.evaluate(PB.rho_word(g, w)) != PB.evaluate(
                PB.rho_word(g, alt)
            ):
                res.counterexamples.append({"solution": solution_to_dict(S), "element": g, "words": [list(w), list(alt)]})
                break
    return _finish(res, t0)


HARNESSES: dict[str, Callable[[], HarnessResult]] = {
    "i-simple-equivalence": i_simple_equivalence,
    "strong-left-invariance": strong_left_invariance,
    "solubility-equivalence": solubility_equivalence,
    "corollary-4.4": solubility_equivalence,
    "witness-roundtrip": witness_roundtrip,
    "i-kernel-ideal": i_kernel_ideal,
    "remark-fixed-point": remark_fixed_point,
    "permbrace-selfcheck": permbrace_selfcheck,
}


def run_harness(name: str, **kwargs) -> HarnessResult:
    try:
        fn = HARNESSES[name]
    except KeyError:
        raise PreconditionError(f"unknown harness {name!r}; known: {', '.join(HARNESSES)}") from None
    return fn(**kwargs)
