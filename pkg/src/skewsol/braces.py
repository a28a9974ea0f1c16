"""Finite skew braces stored as an additive and a multiplicative Cayley table.

Conventions: ``lambda_a(b) = -a + a*b`` and ``rho_b(a) = lambda_a(b)^{-1} * a * b``,
so that ``a*b = lambda_a(b) * rho_b(a)`` and ``a + b = a * lambda_{a^{-1}}(b)``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import groups
from .errors import CapacityError, FormatError, PreconditionError, SelfCheckError
from .solutions import FiniteSolution

Table = tuple[tuple[int, ...], ...]

SUBSET_KINDS = ("subbrace", "left_ideal", "strong_left_ideal", "ideal")


def _as_table(rows, n, name) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{name}: entries must be integers") from exc
    if len(table) != n or any(len(row) != n for row in table):
        raise FormatError(f"{name}: expected an {n}x{n} table")
    if any(not 0 <= v < n for row in table for v in row):
        raise FormatError(f"{name}: entry out of range")
    return table


@dataclass(frozen=True)
class SkewBrace:
    n: int
    add: Table
    mul: Table
    identity: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise FormatError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "add", _as_table(self.add, self.n, "add"))
        object.__setattr__(self, "mul", _as_table(self.mul, self.n, "mul"))
        if not 0 <= self.identity < self.n:
            raise FormatError(f"identity {self.identity} out of range")

    @classmethod
    def checked(cls, n, add, mul, identity=0) -> "SkewBrace":
        B = cls(n, add, mul, identity)
        report = validate_brace(B)
        if not report.ok:
            raise FormatError(report.message)
        return B

    @classmethod
    def trivial(cls, table: Table, identity: int = 0) -> "SkewBrace":
        """Trivial brace: both operations equal the given group law."""
        return cls(len(table), table, table, identity)

    # derived tables; only meaningful once the brace validates

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return groups.inverses(self.add, self.identity)

    @cached_property
    def inv(self) -> tuple[int, ...]:
        return groups.inverses(self.mul, self.identity)

    @cached_property
    def lam(self) -> Table:
        add, mul, neg = self.add, self.mul, self.neg
        rng = range(self.n)
        return tuple(tuple(add[neg[a]][mul[a][b]] for b in rng) for a in rng)

    @cached_property
    def rho(self) -> Table:
        """``rho[b][a] = rho_b(a)``."""
        mul, inv, lam = self.mul, self.inv, self.lam
        rng = range(self.n)
        return tuple(tuple(mul[mul[inv[lam[a][b]]][a]][b] for a in rng) for b in rng)

    def elements(self) -> range:
        return range(self.n)


@dataclass
class BraceReport:
    ok: bool
    errors: list[str] = field(default_factory=list)

    @property
    def message(self) -> str:
        return "ok" if self.ok else self.errors[0]

    def __bool__(self) -> bool:
        return self.ok


def validate_brace(B: SkewBrace) -> BraceReport:
    """Check every skew brace axiom; the report carries the first failure."""
    e = B.identity
    for name, table in (("additive", B.add), ("multiplicative", B.mul)):
        err = groups.group_table_error(table, e)
        if err:
            return BraceReport(False, [f"{name} group: {err}"])
    add, mul, neg = B.add, B.mul, B.neg
    rng = range(B.n)
    # a(b + c) = ab - a + ac
    for a, b, c in itertools.product(rng, rng, rng):
        if mul[a][add[b][c]] != add[add[mul[a][b]][neg[a]]][mul[a][c]]:
            return BraceReport(False, [f"brace compatibility fails at ({a}, {b}, {c})"])
    lam, rho, inv = B.lam, B.rho, B.inv
    for a in rng:
        for b in rng:
            if add[a][b] != mul[a][lam[inv[a]][b]]:
                return BraceReport(False, [f"sum law a+b = a*lambda_(a^-1)(b) fails at ({a}, {b})"])
            if mul[a][b] != mul[lam[a][b]][rho[b][a]]:
                return BraceReport(False, [f"ab = lambda_a(b) rho_b(a) fails at ({a}, {b})"])
            # second closed form for rho
            alt = mul[inv[add[inv[a]][b]]][b]
            if alt != rho[b][a]:
                return BraceReport(False, [f"rho closed forms disagree at ({a}, {b})"])
    for a in rng:
        for b in rng:
            ab = mul[a][b]
            for c in rng:
                if lam[ab][c] != lam[a][lam[b][c]]:
                    return BraceReport(False, [f"lambda is not a homomorphism at ({a}, {b})"])
                if rho[ab][c] != rho[b][rho[a][c]]:
                    return BraceReport(False, [f"rho is not an antihomomorphism at ({a}, {b})"])
    return BraceReport(True)


def lambda_of(B: SkewBrace, a: int) -> tuple[int, ...]:
    return B.lam[a]


def rho_of(B: SkewBrace, b: int) -> tuple[int, ...]:
    """rho_b as a permutation; cross-checked against (a^{-1} + b)^{-1} b."""
    row = B.rho[b]
    for a in B.elements():
        if B.mul[B.inv[B.add[B.inv[a]][b]]][b] != row[a]:
            raise SelfCheckError(f"rho formulas disagree at ({a}, {b})")
    return row


def associated_solution(B: SkewBrace) -> FiniteSolution:
    return FiniteSolution(B.n, B.lam, B.rho)


# --- subsets ----------------------------------------------------------------


def _is_additive_subgroup(B: SkewBrace, S: frozenset[int]) -> bool:
    if B.identity not in S:
        return False
    return all(B.add[a][B.neg[b]] in S for a in S for b in S)


def _is_lambda_invariant(B: SkewBrace, S: frozenset[int]) -> bool:
    return all(B.lam[a][s] in S for a in B.elements() for s in S)


def is_left_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return _is_additive_subgroup(B, S) and _is_lambda_invariant(B, S)


def is_strong_left_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_left_ideal(B, S) and groups.is_normal(B.add, S, B.identity)


def is_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_strong_left_ideal(B, S) and groups.is_normal(B.mul, S, B.identity)


def is_subbrace(B: SkewBrace, S: Iterable[int]) -> bool:
    S = frozenset(S)
    if not _is_additive_subgroup(B, S):
        return False
    return all(B.mul[a][B.inv[b]] in S for a in S for b in S)


_PREDICATES = {
    "subbrace": is_subbrace,
    "left_ideal": is_left_ideal,
    "strong_left_ideal": is_strong_left_ideal,
    "ideal": is_ideal,
}


@dataclass(frozen=True)
class BraceSubset:
    """A subset of a brace whose ``kind`` was verified when it was built."""

    parent: SkewBrace = field(repr=False, compare=False)
    members: frozenset[int]
    kind: str

    @classmethod
    def make(cls, B: SkewBrace, members: Iterable[int], kind: str) -> "BraceSubset":
        if kind not in _PREDICATES:
            raise ValueError(f"unknown subset kind {kind!r}")
        members = frozenset(members)
        if not _PREDICATES[kind](B, members):
            raise PreconditionError(f"{sorted(members)} is not a {kind}")
        return cls(B, members, kind)

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def _normal_closure(table: Table, S: set[int], e: int) -> set[int]:
    inv = groups.inverses(table, e)
    S = set(groups.closure(table, S, e))
    while True:
        conj = {table[table[g][s]][inv[g]] for g in range(len(table)) for s in S}
        if conj <= S:
            return S
        S = set(groups.closure(table, S | conj, e))


def generated_subset(B: SkewBrace, seed: Iterable[int], kind: str = "ideal") -> frozenset[int]:
    """Smallest left ideal / strong left ideal / ideal containing ``seed``."""
    e = B.identity
    S = set(seed) | {e}
    while True:
        before = len(S)
        S |= {B.lam[a][s] for a in B.elements() for s in S}
        S = set(groups.closure(B.add, S, e))
        if kind in ("strong_left_ideal", "ideal"):
            S = _normal_closure(B.add, S, e)
        if kind == "ideal":
            S = _normal_closure(B.mul, S, e)
        if len(S) == before:
            return frozenset(S)


def ideal_closure(B: SkewBrace, seed: Iterable[int]) -> BraceSubset:
    """Least ideal containing ``seed``."""
    return BraceSubset.make(B, generated_subset(B, seed, "ideal"), "ideal")


def _sort_key(S: frozenset[int]):
    return (len(S), sorted(S))


def enumerate_ideals(B: SkewBrace, kind: str = "ideal") -> list[BraceSubset]:
    """All subsets of the given kind, sorted by size then members.

    Each family is closed under intersection and every member is the join of
    the principal closures of its elements, so joining principal closures
    until a fixpoint reaches them all.
    """
    if kind not in ("left_ideal", "strong_left_ideal", "ideal"):
        raise ValueError(f"unknown kind {kind!r}")
    principal = {generated_subset(B, [a], kind) for a in B.elements()}
    found = set(principal)
    frontier = set(principal)
    while frontier:
        new = set()
        for S in frontier:
            for P in principal:
                if P <= S:
                    continue
                T = generated_subset(B, S | P, kind)
                if T not in found:
                    new.add(T)
        found |= new
        frontier = new
    return [BraceSubset(B, S, kind) for S in sorted(found, key=_sort_key)]


def socle(B: SkewBrace) -> BraceSubset:
    """Ker(lambda) intersected with the centre of (B, +)."""
    ident = tuple(B.elements())
    members = {
        a for a in B.elements()
        if B.lam[a] == ident and all(B.add[a][b] == B.add[b][a] for b in B.elements())
    }
    return BraceSubset.make(B, members, "ideal")


def annihilator_like(B: SkewBrace) -> BraceSubset:
    """Elements acting trivially on both sides: lambda_a = rho_a = id."""
    ident = tuple(B.elements())
    members = {a for a in B.elements() if B.lam[a] == ident and B.rho[a] == ident}
    soc = socle(B)
    if not members <= soc.members:
        raise SelfCheckError("{lambda_a = rho_a = id} is not contained in the socle")
    return BraceSubset(B, frozenset(members), "subbrace")


def is_abelian_brace(B: SkewBrace, subset: Iterable[int] | None = None) -> bool:
    """Both operations agree and commute (on ``subset`` if given)."""
    S = list(B.elements()) if subset is None else sorted(set(subset))
    for a in S:
        for b in S:
            if B.add[a][b] != B.mul[a][b] or B.add[a][b] != B.add[b][a]:
                return False
    return True


def quotient_brace(B: SkewBrace, I: Iterable[int]) -> tuple[SkewBrace, tuple[int, ...]]:
    """B/I on additive cosets, labelled in order of least representative."""
    I = frozenset(I)
    if not is_ideal(B, I):
        raise PreconditionError(f"{sorted(I)} is not an ideal")
    label = [-1] * B.n
    reps = []
    for a in B.elements():
        if label[a] < 0:
            for i in I:
                label[B.add[a][i]] = len(reps)
            reps.append(a)
    m = len(reps)
    add = [[label[B.add[a][b]] for b in reps] for a in reps]
    mul = [[label[B.mul[a][b]] for b in reps] for a in reps]
    Q = SkewBrace(m, add, mul, label[B.identity])
    proj = tuple(label)
    if m * len(I) != B.n or not is_brace_hom(proj, B, Q):
        raise SelfCheckError("quotient projection is not a brace homomorphism")
    return Q, proj


def is_brace_hom(f: Sequence[int], B1: SkewBrace, B2: SkewBrace) -> bool:
    if len(f) != B1.n or any(not 0 <= v < B2.n for v in f):
        return False
    for a in B1.elements():
        for b in B1.elements():
            if f[B1.add[a][b]] != B2.add[f[a]][f[b]] or f[B1.mul[a][b]] != B2.mul[f[a]][f[b]]:
                return False
    return True


def brace_hom_kernel(f: Sequence[int], B1: SkewBrace, B2: SkewBrace) -> BraceSubset:
    members = {a for a in B1.elements() if f[a] == B2.identity}
    return BraceSubset.make(B1, members, "ideal")


def is_simple_brace(B: SkewBrace) -> bool:
    if B.n == 1:
        return False
    return len(enumerate_ideals(B)) == 2


@dataclass(frozen=True)
class BraceChain:
    """Ideals ``B = K_0 ⊋ K_1 ⊋ ... ⊋ K_t = {0}`` with abelian factors."""

    ideals: tuple[frozenset[int], ...]

    @property
    def length(self) -> int:
        return len(self.ideals) - 1

    def ascending(self) -> list[list[int]]:
        return [sorted(K) for K in reversed(self.ideals)]


def _abelian_factor(B: SkewBrace, upper: frozenset[int], lower: frozenset[int]) -> bool:
    """``upper/lower`` is an abelian brace inside ``B/lower``."""
    Q, proj = quotient_brace(B, lower)
    return is_abelian_brace(Q, {proj[a] for a in upper})


def is_soluble_brace(B: SkewBrace) -> BraceChain | None:
    """Shortest descending ideal chain with abelian factors, or ``None``.

    Breadth-first over the ideal lattice from B down to {0}; neighbours are
    tried in (size, members) order, so the first chain found is canonical.
    """
    ideals = [S.members for S in enumerate_ideals(B)]
    top = frozenset(B.elements())
    bottom = frozenset([B.identity])
    if top == bottom:
        return BraceChain((top,))
    parent: dict[frozenset[int], frozenset[int] | None] = {top: None}
    queue = deque([top])
    while queue:
        K = queue.popleft()
        for L in ideals:
            if L in parent or not (L < K):
                continue
            if _abelian_factor(B, K, L):
                parent[L] = K
                if L == bottom:
                    chain = [L]
                    while parent[chain[-1]] is not None:
                        chain.append(parent[chain[-1]])
                    return BraceChain(tuple(reversed(chain)))
                queue.append(L)
    return None


def check_chain(B: SkewBrace, chain: BraceChain) -> str | None:
    """Diagnostic if ``chain`` is not a valid abelian-factor ideal chain."""
    K = chain.ideals
    if not K or K[0] != frozenset(B.elements()):
        return "chain must start at B"
    if K[-1] != frozenset([B.identity]):
        return "chain must end at {0}"
    for k, S in enumerate(K):
        if not is_ideal(B, S):
            return f"K_{k} is not an ideal"
    for k in range(1, len(K)):
        if not K[k] <= K[k - 1]:
            return f"K_{k} is not contained in K_{k - 1}"
        if not _abelian_factor(B, K[k - 1], K[k]):
            return f"K_{k - 1}/K_{k} is not abelian"
    return None


# --- enumeration ------------------------------------------------------------

MAX_BRACE_ORDER = 7


def enumerate_braces(n: int, additive: str | Table | None = None) -> Iterator[SkewBrace]:
    """Braces of order n with a reference additive group and any labelled mul.

    Every skew brace is isomorphic to one whose additive table is the
    catalog's reference table, so this covers all braces up to isomorphism
    while keeping each additive group in one fixed labelling.  Orders up to 7
    run over every additive group; order 8 needs ``additive``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if additive is None:
        if n > MAX_BRACE_ORDER:
            raise CapacityError(f"enumerate_braces needs a fixed additive group for n > {MAX_BRACE_ORDER}")
        adds = [t for _, t in groups.groups_of_order(n)]
    else:
        table = groups.group_catalog()[additive] if isinstance(additive, str) else tuple(map(tuple, additive))
        if len(table) != n:
            raise ValueError("additive group has the wrong order")
        if n > 8:
            raise CapacityError("enumerate_braces supports n <= 8")
        adds = [table]
    muls = [t for _, ref in groups.groups_of_order(n) for t in groups.labeled_tables(ref)]
    for add in adds:
        for mul in muls:
            B = SkewBrace(n, add, mul, 0)
            if validate_brace(B).ok:
                yield B
