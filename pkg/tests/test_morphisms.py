import itertools

import pytest

from skewsol.braces import SkewBrace, associated_solution, enumerate_ideals, quotient_brace
from skewsol.errors import CapacityError, PreconditionError
from skewsol.groups import group_catalog
from skewsol.morphisms import (
    Congruence,
    SolutionMap,
    brace_hom_to_i_hom,
    compatible_partitions,
    enumerate_congruences,
    i_kernel_blocks,
    i_kernels,
    identity_map,
    is_epimorphism,
    is_homomorphism,
    is_i_epimorphism,
    is_i_simple,
    is_simple_solution,
    kernel_congruence,
    quotient_solution,
    strong_left_ideal_to_i_hom,
)
from skewsol.solutions import (
    FiniteSolution,
    disjoint_union,
    is_decomposable,
    lyubashenko3,
    twist,
    validate_ybe,
)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def brute_force_congruences(S):
    """Partitions on which both tables descend to a valid solution."""
    out = set()
    for part in set_partitions(list(range(S.n))):
        lab = {x: i for i, b in enumerate(part) for x in b}
        m = len(part)
        lam, rho, ok = {}, {}, True
        for x, y in itertools.product(range(S.n), repeat=2):
            for table, key, val in (
                (lam, (lab[x], lab[y]), lab[S.lam[x][y]]),
                (rho, (lab[y], lab[x]), lab[S.rho[y][x]]),
            ):
                if table.setdefault(key, val) != val:
                    ok = False
        if not ok:
            continue
        Q = FiniteSolution(
            m,
            [[lam[(i, j)] for j in range(m)] for i in range(m)],
            [[rho[(i, j)] for j in range(m)] for i in range(m)],
        )
        if validate_ybe(Q).ok:
            out.add(tuple(sorted(tuple(sorted(b)) for b in part)))
    return out


def test_congruences_match_brute_force(solution_corpus):
    extra = [disjoint_union(twist(1), lyubashenko3()), twist(5)]
    for S in list(solution_corpus) + extra:
        assert {P.blocks for P in enumerate_congruences(S)} == brute_force_congruences(S)


def test_congruence_order_and_bounds():
    cons = enumerate_congruences(twist(3))
    assert all(len(b) == 1 for b in cons[0].blocks)
    assert len(cons[-1]) == 1
    assert len(cons) == 5
    with pytest.raises(CapacityError):
        compatible_partitions(twist(11))


def test_congruence_type():
    P = Congruence.from_labels([0, 1, 0])
    assert P.blocks == ((0, 2), (1,))
    assert P.labels() == (0, 1, 0)
    assert Congruence(((0,), (1,), (2,))).refines(P)
    assert not P.refines(Congruence(((0,), (1,), (2,))))
    with pytest.raises(PreconditionError):
        Congruence(((0, 1), (1, 2)))


def test_lyubashenko3_simple_and_i_simple():
    cons = enumerate_congruences(lyubashenko3())
    assert [len(P) for P in cons] == [3, 1]
    assert is_simple_solution(lyubashenko3())
    assert is_i_simple(lyubashenko3())
    assert quotient_solution(lyubashenko3(), Congruence(((0, 1), (2,)))) is None


def test_twists():
    # literal criterion: every quotient of twist(2) is bijective or constant
    assert is_simple_solution(twist(2))
    assert not is_i_simple(twist(2))
    assert not is_simple_solution(twist(3))
    with pytest.raises(PreconditionError):
        is_i_simple(twist(1))


def test_identity_map_i_kernels():
    f = identity_map(twist(3))
    assert i_kernels(f) == [(0,), (1,), (2,)]
    assert is_i_epimorphism(f)
    g = identity_map(lyubashenko3())
    assert i_kernels(g) == []
    assert not is_i_epimorphism(g)


def test_homomorphism_checks():
    S = lyubashenko3()
    const = SolutionMap(S, twist(1), (0, 0, 0))
    assert is_epimorphism(const)
    assert kernel_congruence(const).blocks == ((0, 1, 2),)
    assert i_kernels(const) == [(0, 1, 2)]
    bad = SolutionMap(twist(2), lyubashenko3(), (0, 1))
    assert not is_homomorphism(bad)
    with pytest.raises(PreconditionError):
        SolutionMap(twist(2), twist(1), (0, 1))


def test_i_simple_iff_indecomposable(solution_corpus):
    for S in solution_corpus:
        if S.n > 1:
            assert is_i_simple(S) == (is_decomposable(S) is None)


def test_i_kernel_blocks_fixed_point(solution_corpus):
    for S in solution_corpus:
        for P in enumerate_congruences(S):
            for X0 in i_kernel_blocks(S, P):
                Q, f = quotient_solution(S, P)
                y0 = f.table[X0[0]]
                assert Q.lam[y0] == tuple(range(Q.n)) and Q.rho[y0] == tuple(range(Q.n))


def test_brace_constructions(brace_corpus):
    for B in brace_corpus:
        for I in enumerate_ideals(B):
            Q, proj = quotient_brace(B, I.members)
            f, X0 = brace_hom_to_i_hom(proj, B, Q)
            assert X0 == tuple(sorted(I.members))
            assert is_i_epimorphism(f)
        for L in enumerate_ideals(B, "strong_left_ideal"):
            if len(L) < B.n:
                g, X0 = strong_left_ideal_to_i_hom(B, L.members)
                assert X0 in i_kernels(g)


def test_brace_construction_errors():
    B = SkewBrace.trivial(group_catalog()["S3"])
    with pytest.raises(PreconditionError):
        strong_left_ideal_to_i_hom(B, [0, 1])
    with pytest.raises(PreconditionError):
        strong_left_ideal_to_i_hom(B, range(6))
    with pytest.raises(PreconditionError):
        brace_hom_to_i_hom((0, 1, 0, 1, 0, 1), B, SkewBrace.trivial(group_catalog()["C2"]))
    S = associated_solution(B)
    assert S.n == 6
