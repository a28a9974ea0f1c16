import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewsol import groups
from skewsol.braces import (
    BraceChain,
    BraceSubset,
    SkewBrace,
    annihilator_like,
    associated_solution,
    brace_hom_kernel,
    check_chain,
    enumerate_braces,
    enumerate_ideals,
    ideal_closure,
    is_abelian_brace,
    is_brace_hom,
    is_ideal,
    is_left_ideal,
    is_simple_brace,
    is_soluble_brace,
    is_strong_left_ideal,
    quotient_brace,
    socle,
    validate_brace,
)
from skewsol.errors import CapacityError, PreconditionError
from skewsol.solutions import validate_ybe

CAT = groups.group_catalog()


def automorphism_count(table):
    n = len(table)
    count = 0
    for rest in itertools.permutations(range(1, n)):
        sigma = (0,) + rest
        if groups.relabel(table, sigma) == table:
            count += 1
    return count


def test_catalog_groups_are_groups():
    for name, table in CAT.items():
        assert groups.group_table_error(table, 0) is None, name
    assert len([k for k in CAT if len(CAT[k]) <= 8]) == 14
    assert [len(groups.groups_of_order(n)) for n in range(1, 9)] == [1, 1, 1, 2, 1, 2, 1, 5]


def test_catalog_groups_pairwise_non_isomorphic():
    for n in range(1, 9):
        tables = [t for _, t in groups.groups_of_order(n)]
        for a, b in itertools.combinations(tables, 2):
            assert b not in groups.labeled_tables(a)


@pytest.mark.parametrize("name", ["C3", "C4", "C2xC2", "S3", "C6"])
def test_labeled_tables_orbit_size(name):
    t = CAT[name]
    n = len(t)
    assert len(groups.labeled_tables(t)) == math.factorial(n - 1) // automorphism_count(t)


def test_subgroups():
    assert len(groups.all_subgroups(CAT["S3"], 0)) == 6
    assert len(groups.all_subgroups(CAT["Q8"], 0)) == 6
    assert len(groups.all_subgroups(CAT["C2xC2xC2"], 0)) == 16


# --- braces ------------------------------------------------------------------


def test_trivial_braces_valid():
    for name, table in CAT.items():
        if len(table) <= 8:
            assert validate_brace(SkewBrace.trivial(table)).ok, name


def test_broken_brace_rejected():
    reports = [validate_brace(SkewBrace(6, CAT["C6"], mul, 0)) for mul in groups.labeled_tables(CAT["S3"])]
    assert any(r.ok for r in reports)
    failing = [r for r in reports if not r.ok]
    assert failing and all("compatibility" in r.message for r in failing)
    rep = validate_brace(SkewBrace(3, CAT["C3"], [[0, 1, 2], [1, 2, 0], [2, 1, 0]], 0))
    assert not rep.ok and "multiplicative group" in rep.message


def canonical(B):
    """Least relabelled (add, mul) pair over identity-fixing relabellings."""
    best = None
    for rest in itertools.permutations(range(1, B.n)):
        s = (0,) + rest
        key = (groups.relabel(B.add, s), groups.relabel(B.mul, s))
        if best is None or key < best:
            best = key
    return best


def brute_force_iso_classes(n):
    tables = [t for _, ref in groups.groups_of_order(n) for t in groups.labeled_tables(ref)]
    classes = set()
    for add in tables:
        for mul in tables:
            B = SkewBrace(n, add, mul, 0)
            if validate_brace(B).ok:
                classes.add(canonical(B))
    return classes


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumerate_braces_complete_up_to_isomorphism(n):
    found = {canonical(B) for B in enumerate_braces(n)}
    assert found == brute_force_iso_classes(n)


def test_enumerate_braces_counts():
    # labelled counts frozen from the run above; iso counts from the oracle
    assert [sum(1 for _ in enumerate_braces(n)) for n in range(1, 8)] == [1, 1, 1, 6, 1, 10, 1]
    assert [len({canonical(B) for B in enumerate_braces(n)}) for n in range(1, 7)] == [1, 1, 1, 4, 1, 6]
    assert len(list(enumerate_braces(8, "C2xC2xC2"))) > 0
    with pytest.raises(CapacityError):
        list(enumerate_braces(8))


def test_brace_solutions_are_solutions(brace_corpus):
    for B in brace_corpus:
        assert validate_ybe(associated_solution(B)).ok


def subgroup_filter(B, pred):
    """Oracle: additive subgroups filtered by the predicate."""
    return {H for H in groups.all_subgroups(B.add, B.identity) if pred(B, H)}


@pytest.mark.parametrize(
    "kind,pred",
    [("left_ideal", is_left_ideal), ("strong_left_ideal", is_strong_left_ideal), ("ideal", is_ideal)],
)
def test_enumerate_ideals_matches_subgroup_filter(brace_corpus, kind, pred):
    extra = [SkewBrace.trivial(CAT[k]) for k in ("D4", "Q8", "C4xC2")]
    for B in list(brace_corpus) + extra:
        got = {S.members for S in enumerate_ideals(B, kind)}
        assert got == subgroup_filter(B, pred)


def test_trivial_s3_subsets():
    B = SkewBrace.trivial(CAT["S3"])
    ideals = [sorted(S.members) for S in enumerate_ideals(B)]
    assert ideals == [[0], [0, 2, 5], [0, 1, 2, 3, 4, 5]]
    lefts = [sorted(S.members) for S in enumerate_ideals(B, "left_ideal")]
    assert [0, 1] in lefts and [0, 3] in lefts and [0, 4] in lefts
    assert sorted(ideal_closure(B, [2]).members) == [0, 2, 5]
    with pytest.raises(PreconditionError):
        BraceSubset.make(B, [0, 1], "ideal")


def test_socle_and_annihilator(brace_corpus):
    for B in brace_corpus:
        soc = socle(B)
        assert is_ideal(B, soc.members)
        assert annihilator_like(B).members <= soc.members
    B = SkewBrace.trivial(CAT["S3"])
    assert socle(B).members == {0}
    assert socle(SkewBrace.trivial(CAT["C6"])).members == frozenset(range(6))


def test_quotients_are_braces_and_projections_homs(brace_corpus):
    for B in brace_corpus:
        for I in enumerate_ideals(B):
            Q, proj = quotient_brace(B, I.members)
            assert validate_brace(Q).ok
            assert is_brace_hom(proj, B, Q)
            assert brace_hom_kernel(proj, B, Q).members == I.members
    with pytest.raises(PreconditionError):
        quotient_brace(SkewBrace.trivial(CAT["S3"]), [0, 1])


def test_solubility_examples():
    c6 = SkewBrace.trivial(CAT["C6"])
    chain = is_soluble_brace(c6)
    assert chain.ascending() == [[0], list(range(6))]
    s3 = SkewBrace.trivial(CAT["S3"])
    assert is_soluble_brace(s3).ascending() == [[0], [0, 2, 5], [0, 1, 2, 3, 4, 5]]
    assert is_abelian_brace(c6) and not is_abelian_brace(s3)
    assert is_soluble_brace(SkewBrace.trivial(CAT["C1"])).length == 0


def test_a5_trivial_brace_insoluble_and_simple():
    B = SkewBrace.trivial(CAT["A5"])
    assert [len(S) for S in enumerate_ideals(B)] == [1, 60]
    assert is_simple_brace(B)
    assert is_soluble_brace(B) is None


def test_check_chain_errors():
    B = SkewBrace.trivial(CAT["S3"])
    assert check_chain(B, BraceChain((frozenset({0, 2, 5}), frozenset({0})))) is not None
    assert check_chain(B, BraceChain((frozenset(range(6)), frozenset({0})))) is not None
    assert check_chain(B, is_soluble_brace(B)) is None


BRACES = [B for n in range(1, 7) for B in enumerate_braces(n)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BRACES), st.data())
def test_lambda_rho_identities(B, data):
    a, b, c = (data.draw(st.integers(0, B.n - 1)) for _ in range(3))
    lam, rho, mul, add = B.lam, B.rho, B.mul, B.add
    assert lam[mul[a][b]][c] == lam[a][lam[b][c]]
    assert lam[a][add[b][c]] == add[lam[a][b]][lam[a][c]]
    assert mul[a][b] == mul[lam[a][b]][rho[b][a]]
    assert add[a][b] == mul[a][lam[B.inv[a]][b]]
