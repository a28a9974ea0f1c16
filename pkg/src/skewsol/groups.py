"""Finite groups as Cayley tables on ``{0, ..., n-1}``.

Holds the reference catalog of all groups of order at most 8 (plus A5 for
insolubility examples), identity-fixing relabelings, and subgroup closures.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

Table = tuple[tuple[int, ...], ...]


def group_table_error(table: Sequence[Sequence[int]], e: int) -> str | None:
    """Return a diagnostic if ``table`` is not a group with identity ``e``."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        return "table is not square"
    rng = range(n)
    if not 0 <= e < n:
        return f"identity {e} out of range"
    for a in rng:
        if table[e][a] != a or table[a][e] != a:
            return f"{e} is not an identity (fails at {a})"
        if sorted(table[a]) != list(rng):
            return f"row {a} is not a permutation"
        if sorted(table[b][a] for b in rng) != list(rng):
            return f"column {a} is not a permutation"
    for a in rng:
        ta = table[a]
        for b in rng:
            tab = ta[b]
            tb = table[b]
            for c in rng:
                if table[tab][c] != ta[tb[c]]:
                    return f"not associative at ({a}, {b}, {c})"
    return None


def inverses(table: Table, e: int) -> tuple[int, ...]:
    n = len(table)
    inv = [0] * n
    for a in range(n):
        inv[a] = table[a].index(e)
    return tuple(inv)


def is_commutative(table: Table) -> bool:
    n = len(table)
    return all(table[a][b] == table[b][a] for a in range(n) for b in range(a + 1, n))


def closure(table: Table, seed: Iterable[int], e: int) -> frozenset[int]:
    """Subgroup generated by ``seed`` (finite, so product-closure suffices)."""
    elems = {e}
    gens = set(seed) - {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = table[a][g]
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(elems)


def all_subgroups(table: Table, e: int) -> list[frozenset[int]]:
    """Every subgroup, by joining cyclic subgroups until a fixpoint."""
    n = len(table)
    cyclic = {closure(table, [a], e) for a in range(n)}
    subs = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                K = closure(table, H | C, e)
                if K not in subs:
                    new.add(K)
        subs |= new
        frontier = new
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def is_normal(table: Table, H: Iterable[int], e: int) -> bool:
    members = set(H)
    inv = inverses(table, e)
    n = len(table)
    return all(table[table[g][h]][inv[g]] in members for g in range(n) for h in members)


def relabel(table: Table, sigma: Sequence[int]) -> Table:
    """Transport a table along the bijection ``sigma`` (old label -> new label)."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[sigma[a]][sigma[b]] = sigma[table[a][b]]
    return tuple(tuple(row) for row in out)


@lru_cache(maxsize=None)
def labeled_tables(table: Table) -> tuple[Table, ...]:
    """All distinct relabelings of ``table`` fixing the identity 0, sorted."""
    n = len(table)
    out = set()
    for rest in itertools.permutations(range(1, n)):
        out.add(relabel(table, (0,) + rest))
    return tuple(sorted(out))


# --- reference catalog ------------------------------------------------------


def _table_from_elements(elements: list, mul) -> Table:
    index = {x: i for i, x in enumerate(elements)}
    return tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)


def _compose(p, q):
    """(p*q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def permutation_group_table(gens: Sequence[Sequence[int]]) -> Table:
    """Cayley table of the group generated by ``gens``; identity at index 0."""
    degree = len(gens[0])
    ident = tuple(range(degree))
    elements = [ident]
    seen = {ident}
    i = 0
    while i < len(elements):
        for g in gens:
            h = _compose(elements[i], tuple(g))
            if h not in seen:
                seen.add(h)
                elements.append(h)
        i += 1
    return _table_from_elements(elements, _compose)


def cyclic_table(n: int) -> Table:
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def direct_product_table(*orders: int) -> Table:
    elements = list(itertools.product(*[range(k) for k in orders]))
    return _table_from_elements(
        elements, lambda a, b: tuple((x + y) % k for x, y, k in zip(a, b, orders))
    )


def _quaternion_table() -> Table:
    # units 1, i, j, k as 0..3; element (sign, unit)
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(a, b):
        s, u = unit_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elements = [(s, u) for s in (1, -1) for u in range(4)]
    return _table_from_elements(elements, mul)


@lru_cache(maxsize=None)
def group_catalog() -> dict[str, Table]:
    """Reference Cayley tables (identity 0) of all groups of order <= 8, and A5."""
    return {
        "C1": cyclic_table(1),
        "C2": cyclic_table(2),
        "C3": cyclic_table(3),
        "C4": cyclic_table(4),
        "C2xC2": direct_product_table(2, 2),
        "C5": cyclic_table(5),
        "C6": cyclic_table(6),
        "S3": permutation_group_table([(1, 0, 2), (1, 2, 0)]),
        "C7": cyclic_table(7),
        "C8": cyclic_table(8),
        "C4xC2": direct_product_table(4, 2),
        "C2xC2xC2": direct_product_table(2, 2, 2),
        "D4": permutation_group_table([(1, 2, 3, 0), (3, 2, 1, 0)]),
        "Q8": _quaternion_table(),
        "A5": permutation_group_table([(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)]),
    }


def groups_of_order(n: int) -> list[tuple[str, Table]]:
    if n > 8:
        raise ValueError("the catalog holds every group only up to order 8")
    return [(name, t) for name, t in group_catalog().items() if len(t) == n]
