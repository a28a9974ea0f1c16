"""Finite non-degenerate set-theoretic solutions of the Yang-Baxter equation.

A solution on the carrier ``{0, ..., n-1}`` is stored as two ``n x n`` tables:
``lam[x][y]`` is the image of ``y`` under the left action of ``x`` and
``rho[y][x]`` is the image of ``x`` under the right action of ``y``, so that

    r(x, y) = (lam[x][y], rho[y][x]).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError, FormatError, SelfCheckError

Table = tuple[tuple[int, ...], ...]

# enumeration bounds; beyond these the raw table space is too large
MAX_ALL_N = 3
MAX_INVOLUTIVE_N = 4


def _as_table(rows: Sequence[Sequence[int]], n: int, name: str) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{name}: entries must be integers") from exc
    if len(table) != n or any(len(row) != n for row in table):
        raise FormatError(f"{name}: expected an {n}x{n} table")
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise FormatError(f"{name}: entry {v} out of range 0..{n - 1}")
    return table


def is_permutation(row: Sequence[int]) -> bool:
    return sorted(row) == list(range(len(row)))


def invert_permutation(row: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(row)
    for i, v in enumerate(row):
        inv[v] = i
    return tuple(inv)


@dataclass(frozen=True)
class FiniteSolution:
    """Tables of a finite solution; only shape and range are checked here.

    Use :func:`validate_ybe` (or :meth:`checked`) to verify the axioms.
    """

    n: int
    lam: Table
    rho: Table

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise FormatError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "lam", _as_table(self.lam, self.n, "lambda"))
        object.__setattr__(self, "rho", _as_table(self.rho, self.n, "rho"))

    @classmethod
    def checked(cls, n: int, lam, rho) -> "FiniteSolution":
        """Build a solution and raise :class:`FormatError` if it is invalid."""
        sol = cls(n, lam, rho)
        report = validate_ybe(sol)
        if not report.ok:
            raise FormatError(report.message)
        return sol

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.lam[x][y], self.rho[y][x]

    @cached_property
    def lam_inv(self) -> Table:
        return tuple(invert_permutation(row) for row in self.lam)

    @cached_property
    def rho_inv(self) -> Table:
        return tuple(invert_permutation(row) for row in self.rho)

    def __repr__(self) -> str:
        return f"FiniteSolution(n={self.n}, lam={self.lam}, rho={self.rho})"


@dataclass
class ValidationReport:
    ok: bool
    errors: list[str] = field(default_factory=list)
    failing_triples: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def message(self) -> str:
        return "ok" if self.ok else "; ".join(self.errors)

    def __bool__(self) -> bool:
        return self.ok


def _braid_sides(S: FiniteSolution, x: int, y: int, z: int):
    lam, rho = S.lam, S.rho

    def r(a, b):
        return lam[a][b], rho[b][a]

    # (r x id)(id x r)(r x id)
    a, b = r(x, y)
    b, c = r(b, z)
    a, b = r(a, b)
    left = (a, b, c)
    # (id x r)(r x id)(id x r)
    b, c = r(y, z)
    a, b = r(x, b)
    b, c = r(b, c)
    return left, (a, b, c)


def validate_ybe(S: FiniteSolution, max_failures: int = 10) -> ValidationReport:
    """Check non-degeneracy and the braid relation on all ``n**3`` triples."""
    report = ValidationReport(ok=True)
    for x, row in enumerate(S.lam):
        if not is_permutation(row):
            report.errors.append(f"non-degeneracy violated: lambda_{x} is not a permutation")
    for y, row in enumerate(S.rho):
        if not is_permutation(row):
            report.errors.append(f"non-degeneracy violated: rho_{y} is not a permutation")
    rng = range(S.n)
    for x, y, z in itertools.product(rng, rng, rng):
        left, right = _braid_sides(S, x, y, z)
        if left != right:
            report.failing_triples.append((x, y, z))
            if len(report.failing_triples) >= max_failures:
                break
    if report.failing_triples:
        report.errors.append(
            f"braid relation fails on {len(report.failing_triples)}"
            f"{'+' if len(report.failing_triples) >= max_failures else ''} triple(s), "
            f"first {report.failing_triples[0]}"
        )
    report.ok = not report.errors
    return report


def apply_r(S: FiniteSolution, x: int, y: int) -> tuple[int, int]:
    if not (0 <= x < S.n and 0 <= y < S.n):
        raise IndexError(f"({x}, {y}) out of range for n={S.n}")
    return S.lam[x][y], S.rho[y][x]


def inverse_r_table(S: FiniteSolution) -> dict[tuple[int, int], tuple[int, int]]:
    """Tabulate r^{-1}; raises if r is not a bijection of X x X."""
    inv: dict[tuple[int, int], tuple[int, int]] = {}
    for x in range(S.n):
        for y in range(S.n):
            img = apply_r(S, x, y)
            if img in inv:
                raise FormatError(f"r is not injective: {inv[img]} and {(x, y)} -> {img}")
            inv[img] = (x, y)
    return inv


def is_involutive(S: FiniteSolution) -> bool:
    for x in range(S.n):
        for y in range(S.n):
            if apply_r(S, *apply_r(S, x, y)) != (x, y):
                return False
    return True


def is_twist(S: FiniteSolution) -> bool:
    ident = tuple(range(S.n))
    return all(row == ident for row in S.lam) and all(row == ident for row in S.rho)


def is_singleton(S: FiniteSolution) -> bool:
    return S.n == 1


def is_subsolution(S: FiniteSolution, Z: Iterable[int]) -> bool:
    members = set(Z)
    for z in members:
        for w in members:
            if S.lam[z][w] not in members or S.rho[w][z] not in members:
                return False
    return True


def action_orbit(S: FiniteSolution, start: int) -> frozenset[int]:
    """Orbit of ``start`` under the group generated by all lambda_x and rho_x."""
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for x in range(S.n):
            for v in (S.lam[x][u], S.rho[x][u]):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return frozenset(seen)


def is_decomposable(S: FiniteSolution) -> tuple[frozenset[int], frozenset[int]] | None:
    """Return ``(Y, Z)`` with both parts closed under r, or ``None``.

    ``Y`` is the smallest closed subset containing 0.  For a non-degenerate
    solution a subset and its complement are both closed exactly when the
    subset is a union of orbits of the actions, so ``Y`` is the orbit of 0.
    """
    Y = action_orbit(S, 0)
    if len(Y) == S.n:
        return None
    Z = frozenset(range(S.n)) - Y
    return Y, Z


def retraction(S: FiniteSolution) -> tuple[FiniteSolution, tuple[int, ...]]:
    """Quotient by x ~ y iff lambda_x == lambda_y and rho_x == rho_y."""
    labels: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    cls = []
    reps = []
    for x in range(S.n):
        key = (S.lam[x], S.rho[x])
        if key not in labels:
            labels[key] = len(labels)
            reps.append(x)
        cls.append(labels[key])
    m = len(reps)
    lam = [[cls[S.lam[a][b]] for b in reps] for a in reps]
    rho = [[cls[S.rho[b][a]] for a in reps] for b in reps]
    ret = FiniteSolution(m, lam, rho)
    # well-definedness: every representative must give the same class
    for x in range(S.n):
        for y in range(S.n):
            if cls[S.lam[x][y]] != ret.lam[cls[x]][cls[y]] or cls[S.rho[y][x]] != ret.rho[cls[y]][cls[x]]:
                raise SelfCheckError(f"retraction not well defined at ({x}, {y})")
    report = validate_ybe(ret)
    if not report.ok:
        raise SelfCheckError(f"retraction is not a valid solution: {report.message}")
    return ret, tuple(cls)


def multipermutation_level(S: FiniteSolution, max_iter: int = 64) -> int | None:
    """Least m <= max_iter with Ret^m(S) a singleton, or ``None``."""
    current = S
    for level in range(max_iter + 1):
        if current.n == 1:
            return level
        if level == max_iter:
            break
        nxt, _ = retraction(current)
        if nxt.n == current.n:
            return None
        current = nxt
    return None


# --- constructors -----------------------------------------------------------


def twist(n: int) -> FiniteSolution:
    ident = tuple(range(n))
    return FiniteSolution(n, [ident] * n, [ident] * n)


def lyubashenko(sigma: Sequence[int], tau: Sequence[int]) -> FiniteSolution:
    """r(x, y) = (sigma(y), tau(x)); a solution when sigma and tau commute."""
    n = len(sigma)
    return FiniteSolution(n, [tuple(sigma)] * n, [tuple(tau)] * n)


def lyubashenko3() -> FiniteSolution:
    """Three-point solution with sigma: y -> y+1 and tau = sigma^{-1}."""
    sigma = tuple((y + 1) % 3 for y in range(3))
    return lyubashenko(sigma, invert_permutation(sigma))


def disjoint_union(S: FiniteSolution, T: FiniteSolution) -> FiniteSolution:
    """Union with the blocks acting trivially on each other.

    Points of ``T`` are shifted by ``S.n``; cross terms are the flip.
    """
    n = S.n + T.n
    lam = [list(range(n)) for _ in range(n)]
    rho = [list(range(n)) for _ in range(n)]
    for x in range(S.n):
        for y in range(S.n):
            lam[x][y] = S.lam[x][y]
            rho[x][y] = S.rho[x][y]
    for x in range(T.n):
        for y in range(T.n):
            lam[S.n + x][S.n + y] = S.n + T.lam[x][y]
            rho[S.n + x][S.n + y] = S.n + T.rho[x][y]
    return FiniteSolution(n, lam, rho)


# --- enumeration ------------------------------------------------------------


def _all_perm_tables(n: int) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int16)
    idx = np.array(list(itertools.product(range(len(perms)), repeat=n)), dtype=np.int64)
    return perms[idx]  # shape (k, n, n)


def _braid_mask(lam: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Vectorised braid check; ``lam``/``rho`` have shape (k, n, n)."""
    k, n, _ = lam.shape
    ar = np.arange(k)[:, None]
    ok = np.ones(k, dtype=bool)

    def r(a, b):
        return lam[ar[:, 0], a, b], rho[ar[:, 0], b, a]

    for x, y, z in itertools.product(range(n), repeat=3):
        X = np.full(k, x)
        Y = np.full(k, y)
        Z = np.full(k, z)
        a, b = r(X, Y)
        b, c = r(b, Z)
        a, b = r(a, b)
        b2, c2 = r(Y, Z)
        a2, b2 = r(X, b2)
        b2, c2 = r(b2, c2)
        ok &= (a == a2) & (b == b2) & (c == c2)
    return ok


def enumerate_solutions(n: int, mode: str = "all") -> Iterator[FiniteSolution]:
    """Yield every labelled solution on n points (not up to isomorphism).

    ``mode="all"`` needs n <= 3; ``mode="involutive"`` needs n <= 4 and uses
    rho_y(x) = lambda^{-1}_{lambda_x(y)}(x).
    """
    if mode not in ("all", "involutive"):
        raise ValueError(f"unknown mode {mode!r}")
    limit = MAX_ALL_N if mode == "all" else MAX_INVOLUTIVE_N
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise CapacityError(f"enumerate_solutions(mode={mode!r}) supports n <= {limit}, got {n}")
    tables = _all_perm_tables(n)
    k = len(tables)
    if mode == "all":
        li, ri = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
        lam = tables[li.ravel()]
        rho = tables[ri.ravel()]
    else:
        lam = tables
        inv = np.argsort(lam, axis=2).astype(np.int16)
        ar = np.arange(k)
        rho = np.empty_like(lam)
        for x in range(n):
            for y in range(n):
                rho[:, y, x] = inv[ar, lam[:, x, y], x]
        sorted_rows = np.sort(rho, axis=2)
        perm_ok = (sorted_rows == np.arange(n, dtype=np.int16)).all(axis=(1, 2))
        lam, rho = lam[perm_ok], rho[perm_ok]
    mask = _braid_mask(lam, rho)
    lam, rho = lam[mask], rho[mask]
    if mode == "involutive":
        # second coordinate of r∘r must also be the identity
        ar = np.arange(len(lam))
        keep = np.ones(len(lam), dtype=bool)
        for x in range(n):
            for y in range(n):
                u = lam[:, x, y]
                v = rho[:, y, x]
                keep &= (lam[ar, u, v] == x) & (rho[ar, v, u] == y)
        lam, rho = lam[keep], rho[keep]
    for L, R in zip(lam.tolist(), rho.tolist()):
        yield FiniteSolution(n, L, R)
