"""Solubility witnesses for finite solutions.

A witness is a tower of maps ``f_k: X -> B_k`` onto solutions of skew braces
with refining kernels, a chosen i-kernel ``X_k`` per level below the top,
and an abelian ideal ``J_k`` of ``B_k`` absorbing ``f_k(X_{k-1})`` such that
``ker f_{k-1}``-related points land in the same ``J_k``-coset.

The last level must have kernel inside ``ker iota``.  That relation is not
decidable from the tables, so the verifier accepts it strictly only when
``f_t`` is injective, rejects it when ``ker f_t`` identifies points with
different ``(lambda_x, rho_x)`` (those are separated in the structure group),
and otherwise reports a conditional result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import groups
from .braces import (
    BraceChain,
    SkewBrace,
    associated_solution,
    check_chain,
    enumerate_ideals,
    is_abelian_brace,
    is_ideal,
    is_soluble_brace,
    quotient_brace,
    validate_brace,
)
from .errors import CapacityError, FormatError, PreconditionError
from .morphisms import (
    MAX_CONGRUENCE_N,
    Congruence,
    SolutionMap,
    enumerate_congruences,
    i_kernel_blocks,
    is_homomorphism,
    kernel_congruence,
    quotient_solution,
)
from .permbrace import build_perm_brace
from .solutions import FiniteSolution

MAX_TARGET_ORDER = 8


@dataclass(frozen=True)
class WitnessLevel:
    brace: SkewBrace
    map: tuple[int, ...]
    i_kernel: tuple[int, ...] | None = None
    abelian_ideal: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SolubilityWitness:
    source: FiniteSolution
    levels: tuple[WitnessLevel, ...]

    @property
    def t(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class WitnessCheck:
    """``status`` is ``"pass"``, ``"conditional"`` or ``"fail"``."""

    status: str
    condition: str | None = None
    level: int | None = None
    message: str = ""

    @property
    def strict(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.strict


def _fail(cond: str, k: int | None, msg: str) -> WitnessCheck:
    return WitnessCheck("fail", cond, k, msg)


def verify_witness(S: FiniteSolution, W: SolubilityWitness) -> WitnessCheck:
    """Check a witness level by level; returns the first failed condition.

    Conditions are tagged (i) i-epimorphism with the given i-kernel,
    (ii) top map is an epimorphism, (iii) kernel refinement, (iv) bottom
    kernel is one block, (v) top kernel inside ker iota, (vi) abelian ideal
    contains the previous i-kernel's image, (vii) coset condition.
    """
    if not W.levels:
        raise FormatError("a witness needs at least one level")
    if W.source != S:
        raise FormatError("witness was built for a different solution")
    for k, lvl in enumerate(W.levels):
        if len(lvl.map) != S.n or any(not 0 <= v < lvl.brace.n for v in lvl.map):
            raise FormatError(f"level {k}: map does not fit the carriers")
    t = W.t
    maps = []
    kernels = []
    for k, lvl in enumerate(W.levels):
        B = lvl.brace
        report = validate_brace(B)
        if not report.ok:
            return _fail("i" if k < t else "ii", k, f"B_{k} is not a skew brace: {report.message}")
        f = SolutionMap(S, associated_solution(B), lvl.map)
        if not f.is_surjective or not is_homomorphism(f):
            return _fail("i" if k < t else "ii", k, f"f_{k} is not an epimorphism of solutions")
        kernels.append(kernel_congruence(f))
        maps.append(f)
        if k < t:
            if lvl.i_kernel is None:
                return _fail("i", k, f"level {k} is missing its i-kernel")
            if tuple(sorted(lvl.i_kernel)) not in i_kernel_blocks(S, kernels[k]):
                return _fail("i", k, f"X_{k} is not an i-kernel of f_{k}")
    if len(kernels[0]) != 1:
        return _fail("iv", 0, "ker f_0 is not the one-block partition")
    for k in range(1, t + 1):
        if not kernels[k].refines(kernels[k - 1]):
            return _fail("iii", k, f"ker f_{k} is not contained in ker f_{k - 1}")
        B = W.levels[k].brace
        J = W.levels[k].abelian_ideal
        if J is None:
            return _fail("vi", k, f"level {k} is missing its abelian ideal")
        J = frozenset(J)
        if not is_ideal(B, J) or not is_abelian_brace(B, J):
            return _fail("vi", k, f"J_{k} is not an abelian ideal of B_{k}")
        f = maps[k].table
        prev_X = W.levels[k - 1].i_kernel
        if any(f[x] not in J for x in prev_X):
            return _fail("vi", k, f"f_{k}(X_{k - 1}) is not contained in J_{k}")
        for block in kernels[k - 1].blocks:
            a = f[block[0]]
            for y in block[1:]:
                if B.mul[B.inv[a]][f[y]] not in J:
                    return _fail("vii", k, f"points {block[0]} and {y} lie in different J_{k}-cosets")
    top = maps[t]
    if top.is_injective:
        return WitnessCheck("pass")
    for block in kernels[t].blocks:
        x = block[0]
        for y in block[1:]:
            if S.lam[x] != S.lam[y] or S.rho[x] != S.rho[y]:
                return _fail("v", t, f"f_t identifies {x} and {y}, which iota separates")
    return WitnessCheck("conditional", "v", t, "f_t is not injective; ker f_t within ker iota is undecided")


def brace_chain_to_witness(B: SkewBrace, chain: BraceChain) -> SolubilityWitness:
    """Witness for (B, r_B) from an abelian-factor ideal chain of B."""
    err = check_chain(B, chain)
    if err:
        raise PreconditionError(f"invalid chain: {err}")
    K = chain.ideals
    t = len(K) - 1
    levels = []
    for k in range(t + 1):
        Q, proj = quotient_brace(B, K[k])
        levels.append(
            WitnessLevel(
                brace=Q,
                map=proj,
                i_kernel=tuple(sorted(K[k])) if k < t else None,
                abelian_ideal=tuple(sorted({proj[a] for a in K[k - 1]})) if k >= 1 else None,
            )
        )
    return SolubilityWitness(associated_solution(B), tuple(levels))


# --- realising quotient solutions as brace solutions ------------------------


def _swap(n: int, e: int) -> tuple[int, ...]:
    sigma = list(range(n))
    sigma[0], sigma[e] = e, 0
    return tuple(sigma)


@lru_cache(maxsize=4096)
def brace_structures(Q: FiniteSolution, max_order: int = MAX_TARGET_ORDER) -> tuple[SkewBrace, ...]:
    """Every skew brace on Q's carrier whose associated solution is Q.

    Candidate identities are points with trivial actions that every action
    fixes; the multiplication runs over all labelled group tables of that
    order with the identity moved to the candidate, and the addition is
    forced by ``a + b = a * lambda_{a^{-1}}(b)``.
    """
    m = Q.n
    if m > max_order or m > MAX_TARGET_ORDER:
        raise CapacityError(f"brace matching supports orders <= {min(max_order, MAX_TARGET_ORDER)}")
    ident = tuple(range(m))
    candidates = [
        e for e in range(m)
        if Q.lam[e] == ident and Q.rho[e] == ident
        and all(Q.lam[a][e] == e and Q.rho[a][e] == e for a in range(m))
    ]
    found = []
    for e in candidates:
        sigma = _swap(m, e)
        for _, ref in groups.groups_of_order(m):
            for T in groups.labeled_tables(ref):
                mul = groups.relabel(T, sigma)
                inv = groups.inverses(mul, e)
                add = tuple(tuple(mul[a][Q.lam[inv[a]][b]] for b in range(m)) for a in range(m))
                if groups.group_table_error(add, e):
                    continue
                B = SkewBrace(m, add, mul, e)
                if B.lam != Q.lam or B.rho != Q.rho:
                    continue
                if validate_brace(B).ok:
                    found.append(B)
    return tuple(found)


# --- verdicts ----------------------------------------------------------------


@dataclass(frozen=True)
class Soluble:
    witness: SolubilityWitness
    kind: str = "soluble"


@dataclass(frozen=True)
class NotSoluble:
    reason: str
    detail: str = ""
    kind: str = "not_soluble"


@dataclass(frozen=True)
class Unknown:
    bounds: dict
    notes: tuple[str, ...] = ()
    kind: str = "unknown"


SolubilityVerdict = Soluble | NotSoluble | Unknown

PERM_INSOLUBLE = "permutation brace insoluble"
PERM_INSOLUBLE_DETAIL = (
    "a soluble solution has a soluble structure brace, and the permutation "
    "brace is a quotient of it; quotients of soluble braces are soluble"
)


@lru_cache(maxsize=1024)
def _abelian_ideals(B: SkewBrace) -> tuple[frozenset[int], ...]:
    return tuple(I.members for I in enumerate_ideals(B) if is_abelian_brace(B, I.members))


def _levels_search(
    S: FiniteSolution,
    cons: list[Congruence],
    realised: dict[Congruence, tuple[SkewBrace, ...]],
    t: int,
) -> list[WitnessLevel] | None:
    finest = cons[0]
    coarsest = cons[-1]
    i_blocks = {P: i_kernel_blocks(S, P) for P in cons}

    def extend(k: int, prev: Congruence, prev_X: tuple[int, ...], acc: list[WitnessLevel]):
        options = [finest] if k == t else cons
        for P in options:
            if not P.refines(prev) or P not in realised:
                continue
            if k < t and not i_blocks[P]:
                continue
            lab = P.labels()
            for B in realised[P]:
                img = {lab[x] for x in prev_X}
                for J in _abelian_ideals(B):
                    if not img <= J:
                        continue
                    if any(
                        B.mul[B.inv[lab[blk[0]]]][lab[y]] not in J
                        for blk in prev.blocks for y in blk[1:]
                    ):
                        continue
                    lvl_J = tuple(sorted(J))
                    if k == t:
                        return acc + [WitnessLevel(B, lab, None, lvl_J)]
                    for X in i_blocks[P]:
                        res = extend(k + 1, P, X, acc + [WitnessLevel(B, lab, X, lvl_J)])
                        if res is not None:
                            return res
        return None

    base = realised.get(coarsest)
    if not base:
        return None
    B0 = base[0]
    X0 = tuple(range(S.n))
    if t == 0:
        return [WitnessLevel(B0, coarsest.labels())] if S.n == 1 else None
    return extend(1, coarsest, X0, [WitnessLevel(B0, coarsest.labels(), X0, None)])


def search_witness(
    S: FiniteSolution,
    max_depth: int = 3,
    max_target_order: int = 6,
    max_congruence_n: int = MAX_CONGRUENCE_N,
) -> SolubilityVerdict:
    """Bounded, deterministic witness search with a sound insolubility test.

    Only towers whose top map is injective are searched, so ``Soluble`` is
    always a strict certificate.
    """
    bounds = {
        "max_depth": max_depth,
        "max_target_order": max_target_order,
        "max_congruence_n": max_congruence_n,
    }
    notes: list[str] = []
    witness = None
    try:
        cons = enumerate_congruences(S, max_congruence_n)
    except CapacityError as exc:
        cons = None
        notes.append(f"congruence bound: {exc}")
    if cons is not None:
        realised: dict[Congruence, tuple[SkewBrace, ...]] = {}
        for P in cons:
            if len(P) > max_target_order:
                continue
            Q, _ = quotient_solution(S, P)
            found = brace_structures(Q, max_target_order)
            if found:
                realised[P] = found
        if S.n > max_target_order:
            notes.append(f"target order bound: the injective top level needs order {S.n}")
        elif cons[0] not in realised:
            notes.append("no skew brace has this solution as its associated solution")
        else:
            for t in range(0, max_depth + 1):
                levels = _levels_search(S, cons, realised, t)
                if levels is not None:
                    witness = SolubilityWitness(S, tuple(levels))
                    break
            else:
                notes.append(f"no witness of depth <= {max_depth}")
    if witness is not None:
        check = verify_witness(S, witness)
        if not check.strict:
            raise AssertionError(f"search produced an invalid witness: {check}")
        return Soluble(witness)
    try:
        PB = build_perm_brace(S)
        if is_soluble_brace(PB.brace) is None:
            return NotSoluble(PERM_INSOLUBLE, PERM_INSOLUBLE_DETAIL)
    except CapacityError as exc:
        notes.append(f"permutation brace bound: {exc}")
    return Unknown(bounds, tuple(notes))


# --- constructive attempt through the permutation brace ----------------------


@dataclass
class AttemptResult:
    witness: SolubilityWitness | None
    route: str | None
    checks: dict[str, WitnessCheck | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.witness is not None


def _lift_chain(B: SkewBrace, I: frozenset[int], chain: BraceChain) -> BraceChain:
    _, proj = quotient_brace(B, I)
    lifted = [frozenset(a for a in B.elements() if proj[a] in K) for K in chain.ideals]
    tail = [frozenset([B.identity])] if len(I) > 1 else []
    return BraceChain(tuple(lifted + tail))


def _chain_through_generator(B: SkewBrace, gens: Sequence[int]) -> BraceChain | None:
    """Abelian-factor chain whose last nonzero term contains a generator."""
    for I in _abelian_ideals(B):
        if len(I) == 1 or not (set(gens) & I):
            continue
        Q, _ = quotient_brace(B, I)
        chain = is_soluble_brace(Q)
        if chain is not None:
            return _lift_chain(B, I, chain)
    return None


def attempt_witness_via_perm_brace(S: FiniteSolution, require_trivial_point: bool = False) -> AttemptResult:
    """Try f_k(x) = g_x I_k through a soluble chain of the permutation brace.

    If that tower does not verify strictly, fall back to reading S as the
    solution of a skew brace and transporting one of its chains.
    """
    result = AttemptResult(None, None)
    ident = tuple(range(S.n))
    if require_trivial_point and not any(S.lam[x] == ident and S.rho[x] == ident for x in range(S.n)):
        raise PreconditionError("no point with lambda_x = rho_x = id")
    PB = build_perm_brace(S)
    G = PB.brace
    chain = _chain_through_generator(G, PB.generators) or is_soluble_brace(G)
    if chain is None:
        result.notes.append("permutation brace is not soluble")
        result.checks["perm-brace"] = None
    else:
        I = chain.ideals
        t = len(I) - 1
        levels = []
        for k in range(t + 1):
            Q, proj = quotient_brace(G, I[k])
            levels.append(
                WitnessLevel(
                    brace=Q,
                    map=tuple(proj[g] for g in PB.generators),
                    i_kernel=tuple(x for x in range(S.n) if PB.generators[x] in I[k]) if k < t else None,
                    abelian_ideal=tuple(sorted({proj[a] for a in I[k - 1]})) if k >= 1 else None,
                )
            )
        W = SolubilityWitness(S, tuple(levels))
        check = verify_witness(S, W)
        result.checks["perm-brace"] = check
        if check.strict:
            result.witness, result.route = W, "perm-brace"
            return result
        result.notes.append(f"perm-brace tower fails at ({check.condition}): {check.message}")
    if S.n > MAX_TARGET_ORDER:
        result.notes.append("solution too large for brace matching")
        return result
    for B in brace_structures(S):
        bchain = is_soluble_brace(B)
        if bchain is None:
            continue
        W = brace_chain_to_witness(B, bchain)
        check = verify_witness(S, W)
        result.checks["brace-solution"] = check
        if check.strict:
            result.witness, result.route = W, "brace-solution"
            return result
    if "brace-solution" not in result.checks:
        result.checks["brace-solution"] = None
        result.notes.append("S is not the solution of a soluble skew brace")
    return result
