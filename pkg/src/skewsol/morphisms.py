"""Homomorphisms of solutions, congruences, quotients and i-homomorphisms.

Epimorphic images of a finite solution are identified with its quotients by
congruences whose quotient is again non-degenerate, so simplicity and
i-simplicity are decided over :func:`enumerate_congruences`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braces import SkewBrace, associated_solution, brace_hom_kernel, is_brace_hom, is_strong_left_ideal
from .errors import CapacityError, PreconditionError
from .groups import cyclic_table
from .solutions import FiniteSolution, validate_ybe

MAX_CONGRUENCE_N = 10

Block = tuple[int, ...]


@dataclass(frozen=True)
class SolutionMap:
    source: FiniteSolution
    target: FiniteSolution
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        if len(table) != self.source.n:
            raise PreconditionError("map table must have one entry per source point")
        if any(not 0 <= v < self.target.n for v in table):
            raise PreconditionError("map table points outside the target")
        object.__setattr__(self, "table", table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    @property
    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.n

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)


@dataclass(frozen=True)
class Congruence:
    """Partition of the carrier; blocks are sorted tuples in order of least element."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(set(b))) for b in self.blocks))
        if any(len(b) == 0 for b in blocks):
            raise PreconditionError("empty block in partition")
        seen = [x for b in blocks for x in b]
        if len(seen) != len(set(seen)) or sorted(seen) != list(range(len(seen))):
            raise PreconditionError("blocks must be disjoint and cover 0..n-1")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        groups: dict[int, list[int]] = {}
        for x, c in enumerate(labels):
            groups.setdefault(c, []).append(x)
        return cls(tuple(tuple(b) for b in groups.values()))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def labels(self) -> tuple[int, ...]:
        lab = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                lab[x] = i
        return tuple(lab)

    def refines(self, other: "Congruence") -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        lab = other.labels()
        return all(len({lab[x] for x in b}) == 1 for b in self.blocks)

    def block_of(self, x: int) -> Block:
        for b in self.blocks:
            if x in b:
                return b
        raise IndexError(x)

    def __len__(self) -> int:
        return len(self.blocks)


def identity_map(S: FiniteSolution) -> SolutionMap:
    return SolutionMap(S, S, tuple(range(S.n)))


def is_homomorphism(f: SolutionMap) -> bool:
    S, T, t = f.source, f.target, f.table
    for x in range(S.n):
        for y in range(S.n):
            if t[S.lam[x][y]] != T.lam[t[x]][t[y]]:
                return False
            if t[S.rho[y][x]] != T.rho[t[y]][t[x]]:
                return False
    # the image must itself be a solution
    image = sorted(set(t))
    pos = {v: i for i, v in enumerate(image)}
    sub = FiniteSolution(
        len(image),
        [[pos[T.lam[u][v]] for v in image] for u in image],
        [[pos[T.rho[v][u]] for u in image] for v in image],
    )
    return validate_ybe(sub).ok


def is_epimorphism(f: SolutionMap) -> bool:
    return f.is_surjective and is_homomorphism(f)


def kernel_congruence(f: SolutionMap) -> Congruence:
    return Congruence.from_labels(f.table)


def quotient_solution(S: FiniteSolution, P: Congruence) -> tuple[FiniteSolution, SolutionMap] | None:
    """Quotient tables if well defined, non-degenerate and YBE-valid; else None."""
    if P.n != S.n:
        raise PreconditionError("partition is over a different carrier")
    lab = P.labels()
    m = len(P)
    lam = [[-1] * m for _ in range(m)]
    rho = [[-1] * m for _ in range(m)]
    for x in range(S.n):
        for y in range(S.n):
            cx, cy = lab[x], lab[y]
            u, v = lab[S.lam[x][y]], lab[S.rho[y][x]]
            if lam[cx][cy] < 0:
                lam[cx][cy] = u
            elif lam[cx][cy] != u:
                return None
            if rho[cy][cx] < 0:
                rho[cy][cx] = v
            elif rho[cy][cx] != v:
                return None
    Q = FiniteSolution(m, lam, rho)
    if not validate_ybe(Q).ok:
        return None
    return Q, SolutionMap(S, Q, lab)


def _generate(S: FiniteSolution, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Least partition containing ``pairs`` and compatible with both operations."""
    parent = list(range(S.n))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    pending = list(pairs)
    while pending:
        u, v = pending.pop()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        for z in range(S.n):
            pending.append((S.lam[u][z], S.lam[v][z]))
            pending.append((S.lam[z][u], S.lam[z][v]))
            pending.append((S.rho[u][z], S.rho[v][z]))
            pending.append((S.rho[z][u], S.rho[z][v]))
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(find(x), len(relabel)) for x in range(S.n))


def _label_pairs(labels: Sequence[int]) -> list[tuple[int, int]]:
    first: dict[int, int] = {}
    pairs = []
    for x, c in enumerate(labels):
        if c in first:
            pairs.append((first[c], x))
        else:
            first[c] = x
    return pairs


def compatible_partitions(S: FiniteSolution, max_n: int = MAX_CONGRUENCE_N) -> list[Congruence]:
    """Every partition compatible with both binary operations.

    Built by joining principal congruences to a fixpoint, which reaches the
    whole lattice because each congruence is the join of its principal ones.
    """
    if S.n > max_n:
        raise CapacityError(f"congruence enumeration supports n <= {max_n}, got {S.n}")
    bottom = tuple(range(S.n))
    principal = {_generate(S, [(a, b)]) for a in range(S.n) for b in range(a + 1, S.n)}
    found = {bottom} | principal
    frontier = set(principal)
    while frontier:
        new = set()
        for p in frontier:
            for q in principal:
                j = _generate(S, _label_pairs(p) + _label_pairs(q))
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    cons = [Congruence.from_labels(lab) for lab in found]
    return sorted(cons, key=lambda c: (-len(c), c.blocks))


def enumerate_congruences(S: FiniteSolution, max_n: int = MAX_CONGRUENCE_N) -> list[Congruence]:
    """Partitions whose quotient is a non-degenerate solution.

    Ordered from finest (the singletons) to coarsest (one block).
    """
    return [P for P in compatible_partitions(S, max_n) if quotient_solution(S, P) is not None]


def _is_trivial_partition(P: Congruence) -> bool:
    return len(P) == 1 or all(len(b) == 1 for b in P.blocks)


def is_simple_solution(S: FiniteSolution, max_n: int = MAX_CONGRUENCE_N) -> bool:
    """Every epimorphic image is bijective or constant (n >= 2).

    For twist(2) this holds vacuously, although twist(2) is decomposable.
    """
    if S.n < 2:
        raise PreconditionError("simplicity is defined for non-singleton solutions")
    return all(_is_trivial_partition(P) for P in enumerate_congruences(S, max_n))


def i_kernel_blocks(S: FiniteSolution, P: Congruence) -> list[Block]:
    """Blocks X0 with r(X0, Z) = Z x X0 and r(Z, X0) = X0 x Z for every block Z."""
    out = []
    for X0 in P.blocks:
        good = True
        for Z in P.blocks:
            img = {(S.lam[x][z], S.rho[z][x]) for x in X0 for z in Z}
            if img != {(z, x) for z in Z for x in X0}:
                good = False
                break
            img = {(S.lam[z][x], S.rho[x][z]) for z in Z for x in X0}
            if img != {(x, z) for x in X0 for z in Z}:
                good = False
                break
        if good:
            out.append(X0)
    return out


def i_kernels(f: SolutionMap) -> list[Block]:
    return i_kernel_blocks(f.source, kernel_congruence(f))


def is_i_homomorphism(f: SolutionMap) -> bool:
    return is_homomorphism(f) and bool(i_kernels(f))


def is_i_epimorphism(f: SolutionMap) -> bool:
    return f.is_surjective and is_i_homomorphism(f)


def is_i_simple(S: FiniteSolution, max_n: int = MAX_CONGRUENCE_N) -> bool:
    """X is the only i-kernel of every i-homomorphism out of S (n >= 2)."""
    if S.n < 2:
        raise PreconditionError("i-simplicity is defined for non-singleton solutions")
    for P in enumerate_congruences(S, max_n):
        if len(P) == 1:
            continue
        if i_kernel_blocks(S, P):
            return False
    return True


def brace_hom_to_i_hom(f: Sequence[int], B1: SkewBrace, B2: SkewBrace) -> tuple[SolutionMap, tuple[int, ...]]:
    """A brace homomorphism read as a map of associated solutions.

    Returns the solution map and the kernel block, which is checked to be an
    i-kernel.
    """
    if not is_brace_hom(f, B1, B2):
        raise PreconditionError("map is not a brace homomorphism")
    g = SolutionMap(associated_solution(B1), associated_solution(B2), tuple(f))
    if not is_homomorphism(g):
        raise PreconditionError("brace homomorphism is not a solution homomorphism")
    kernel = tuple(sorted(brace_hom_kernel(f, B1, B2).members))
    if kernel not in i_kernels(g):
        raise AssertionError(f"kernel {kernel} is not an i-kernel")
    return g, kernel


def trivial_brace_c2() -> SkewBrace:
    return SkewBrace.trivial(cyclic_table(2))


def strong_left_ideal_to_i_hom(B: SkewBrace, S: Iterable[int]) -> tuple[SolutionMap, tuple[int, ...]]:
    """Map S -> 0 and its complement -> 1 in the order-2 trivial brace's solution."""
    S = frozenset(S)
    if not is_strong_left_ideal(B, S):
        raise PreconditionError(f"{sorted(S)} is not a strong left ideal")
    if len(S) == B.n:
        raise PreconditionError("the strong left ideal must be proper")
    target = associated_solution(trivial_brace_c2())
    table = tuple(0 if a in S else 1 for a in B.elements())
    g = SolutionMap(associated_solution(B), target, table)
    if not is_homomorphism(g):
        raise AssertionError("strong left ideal map is not a homomorphism")
    kernel = tuple(sorted(S))
    if kernel not in i_kernels(g):
        raise AssertionError(f"{kernel} is not an i-kernel")
    return g, kernel
