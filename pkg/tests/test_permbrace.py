import random

import pytest

from skewsol import groups
from skewsol.braces import SkewBrace, associated_solution, enumerate_ideals, is_soluble_brace, quotient_brace, validate_brace
from skewsol.errors import CapacityError, PreconditionError
from skewsol.morphisms import brace_hom_to_i_hom, identity_map, is_homomorphism, strong_left_ideal_to_i_hom
from skewsol.permbrace import (
    build_perm_brace,
    generate_perm_group,
    h_map,
    i_kernel_ideal_check,
    induced_perm_epi,
    random_witness_pairs,
)
from skewsol.solutions import disjoint_union, lyubashenko3, twist


def oracle_group(S):
    """Set of (p, q) pairs generated by (lambda_x, rho_x^{-1}) under composition."""

    def inv(p):
        out = [0] * len(p)
        for i, v in enumerate(p):
            out[v] = i
        return tuple(out)

    def comp(a, b):
        return tuple(a[0][i] for i in b[0]), tuple(a[1][i] for i in b[1])

    gens = [(S.lam[x], inv(S.rho[x])) for x in range(S.n)]
    ident = (tuple(range(S.n)), tuple(range(S.n)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = comp(g, h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return seen


def test_group_matches_oracle(solution_corpus):
    for S in solution_corpus:
        G = generate_perm_group(S)
        assert set(G.elements) == oracle_group(S)
        assert G.elements[0] == (tuple(range(S.n)), tuple(range(S.n)))
        for idx, w in enumerate(G.witnesses):
            assert build_perm_brace(S, check=False).evaluate(w) == idx


def test_lyubashenko3_perm_brace():
    PB = build_perm_brace(lyubashenko3())
    B = PB.brace
    assert PB.order == 3
    assert validate_brace(B).ok
    assert B.add == B.mul
    assert len(set(PB.generators)) == 1  # all generators coincide


def test_twist_and_s3_perm_braces():
    assert build_perm_brace(twist(3)).order == 1
    S = associated_solution(SkewBrace.trivial(groups.group_catalog()["S3"]))
    PB = build_perm_brace(S)
    assert PB.order == 6
    assert is_soluble_brace(PB.brace) is not None


def test_a5_perm_brace_insoluble():
    S = associated_solution(SkewBrace.trivial(groups.group_catalog()["A5"]))
    PB = build_perm_brace(S)
    assert PB.order == 60
    assert is_soluble_brace(PB.brace) is None


def test_self_checks_on_corpus(solution_corpus, brace_corpus):
    for S in list(solution_corpus) + [associated_solution(B) for B in brace_corpus]:
        PB = build_perm_brace(S)  # raises on any self-check failure
        assert is_homomorphism(h_map(S, PB))


def test_rho_word_matches_group_formula(solution_corpus):
    # rho_g(b) = lambda_b(g)^{-1} b g, evaluated with group arithmetic only
    rng = random.Random(1)
    for S in rng.sample(solution_corpus, 40):
        PB = build_perm_brace(S)
        G = PB.group
        for _ in range(20):
            g, b = rng.randrange(PB.order), rng.randrange(PB.order)
            lam_bg = PB.lam_index(b, G.witnesses[g])
            expected = G.mul[G.mul[G.inv[lam_bg]][b]][g]
            assert PB.evaluate(PB.rho_word(g, G.witnesses[b])) == expected
            assert PB.brace.rho[g][b] == expected


def test_word_lengths_and_identity():
    PB = build_perm_brace(disjoint_union(twist(1), lyubashenko3()))
    for g in range(PB.order):
        for w in PB.group.witnesses:
            assert len(PB.lam_word(g, w)) == len(w)
            assert len(PB.rho_word(g, w)) == len(w)
        assert PB.lam_index(g, ()) == 0
    with pytest.raises(IndexError):
        PB.lam_word(0, (9,))


def test_witness_independence(solution_corpus):
    for S in solution_corpus[:80]:
        PB = build_perm_brace(S)
        for g, w, alt in random_witness_pairs(PB, 30, seed=3):
            assert PB.lam_index(g, w) == PB.lam_index(g, alt)
            assert PB.lam_eval(g, w).index == PB.lam_eval(g, alt).index


def test_capacity_errors():
    S = associated_solution(SkewBrace.trivial(groups.group_catalog()["S3"]))
    with pytest.raises(CapacityError):
        generate_perm_group(S, max_order=3)
    PB = build_perm_brace(S, add_budget=10, check=False)
    assert PB.add(1, 2) >= 0
    with pytest.raises(CapacityError):
        PB.brace


def test_induced_epi_and_i_kernel_check(brace_corpus):
    for B in brace_corpus:
        S = associated_solution(B)
        PB_S = build_perm_brace(S)
        for I in enumerate_ideals(B):
            Q, proj = quotient_brace(B, I.members)
            f, X0 = brace_hom_to_i_hom(proj, B, Q)
            PB_T = build_perm_brace(f.target)
            phi, K = induced_perm_epi(f, PB_S, PB_T)
            assert set(phi) == set(range(PB_T.order))
            rep = i_kernel_ideal_check(S, f, X0, PB_S, PB_T)
            assert rep.ok, rep.notes
            assert rep.closure <= rep.ideal_members
        for L in enumerate_ideals(B, "strong_left_ideal"):
            if len(L) < B.n:
                f, X0 = strong_left_ideal_to_i_hom(B, L.members)
                assert i_kernel_ideal_check(S, f, X0, PB_S).ok


def test_i_kernel_check_precondition():
    S = lyubashenko3()
    with pytest.raises(PreconditionError):
        i_kernel_ideal_check(S, identity_map(S), [0])
