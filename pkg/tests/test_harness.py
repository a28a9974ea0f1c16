import pytest

from skewsol.braces import enumerate_braces
from skewsol.errors import PreconditionError
from skewsol.harness import (
    HARNESSES,
    solubility_equivalence,
    i_simple_equivalence,
    permbrace_selfcheck,
    remark_fixed_point,
    run_harness,
    strong_left_invariance,
)
from skewsol.solutions import enumerate_solutions, lyubashenko3, twist


def test_small_harnesses_pass():
    assert i_simple_equivalence(list(enumerate_solutions(3))).passed
    assert solubility_equivalence(order_bound=2).passed
    assert permbrace_selfcheck([lyubashenko3(), twist(3)], seed=5).passed
    assert remark_fixed_point(braces=list(enumerate_braces(4)), solutions=[twist(3)]).passed


def test_order_one_corpus_is_the_singleton_brace():
    res = solubility_equivalence(order_bound=1)
    assert res.passed and res.checked == 1


def test_empty_corpus_warns():
    with pytest.warns(UserWarning, match="vacuous"):
        res = strong_left_invariance([])
    assert res.passed and res.checked == 0 and res.warnings


def test_counterexample_is_serialized(monkeypatch):
    import skewsol.harness as h

    monkeypatch.setattr(h, "is_i_simple", lambda S: True)
    res = i_simple_equivalence([twist(2), lyubashenko3()])
    assert not res.passed and res.checked == 2
    assert res.counterexamples == [{"solution": {"n": 2, "lambda": [[0, 1], [0, 1]], "rho": [[0, 1], [0, 1]]}, "indecomposable": False}]


def test_unknown_harness():
    with pytest.raises(PreconditionError):
        run_harness("nope")
    with pytest.raises(PreconditionError):
        solubility_equivalence(order_bound=7)
    assert "corollary-4.4" in HARNESSES
