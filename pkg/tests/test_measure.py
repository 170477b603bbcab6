from fractions import Fraction as F

import pytest

from measdecomp import (
    FiniteSpace,
    PreconditionError,
    SignedMeasure,
    SpaceMismatchError,
    evaluate,
    find_positive_subset,
    hahn_jordan,
    is_null_set,
    lattice_inf,
    lattice_sup,
    positive_subset_steps,
    relation,
    variation,
)
from measdecomp.oracle import brute_hahn, brute_relation, brute_sup, brute_sup_values, is_positive_set

S3 = FiniteSpace.of_size(3)
S2 = FiniteSpace.of_size(2)
S4 = FiniteSpace.of_size(4)


def m(space, *vals):
    return SignedMeasure.of(space, vals)


def test_values_must_be_exact():
    with pytest.raises(TypeError):
        m(S2, 0.5, 1)
    with pytest.raises(TypeError):
        m(S2, True, 1)
    assert m(S2, "1/3", F(2, 3)).values == (F(1, 3), F(2, 3))


def test_evaluate():
    mu = m(S3, 3, -1, 2)
    assert evaluate(mu, S3.set("a1", "a3")) == 5
    assert evaluate(mu, S3.empty()) == 0
    assert evaluate(mu, S3.full()) == 4


def test_evaluate_space_mismatch():
    with pytest.raises(SpaceMismatchError):
        evaluate(m(S3, 1, 2, 3), S2.full())


def test_variation():
    var, total = variation(m(S3, 3, -1, 2))
    assert var.values == (3, 1, 2) and total == 6
    # sup over B <= F of mu(B) - mu(F - B), for every F
    mu = m(S3, 3, -1, 2)
    sup = brute_sup_values(mu, -mu)
    assert all(sup[f.bits] == evaluate(var, f) for f in S3.subsets())
    pos = m(S3, 1, 0, 2)
    assert variation(pos)[0] == pos
    assert variation(SignedMeasure.zero(S3)) == (SignedMeasure.zero(S3), 0)


def test_lattice_sup_and_inf():
    nu1, nu2 = m(S2, 1, -2), m(S2, 0, 3)
    assert lattice_sup(nu1, nu2).values == (1, 3)
    assert brute_sup(nu1, nu2).values == (1, 3)
    assert lattice_inf(nu1, nu2).values == (0, -2)
    assert lattice_sup(nu1, nu1) == nu1
    assert lattice_sup(m(S2, 2, 5), SignedMeasure.zero(S2)) == m(S2, 2, 5)


def test_null_sets_are_hereditary():
    mu = m(S3, 1, 0, 2)
    assert is_null_set(mu, S3.set("a2"))
    assert not is_null_set(mu, S3.set("a1", "a2"))
    nu = m(S2, 1, -1)
    assert evaluate(nu, S2.full()) == 0
    assert not is_null_set(nu, S2.full())


def test_relation():
    assert tuple(relation(m(S3, 0, 2, 0), m(S3, 1, 3, 0))) == (True, False)
    assert brute_relation(m(S3, 0, 2, 0), m(S3, 1, 3, 0)) == (True, False)
    assert tuple(relation(m(S2, 1, 0), m(S2, 0, 1))) == (False, True)
    assert tuple(relation(SignedMeasure.zero(S2), m(S2, 4, 1))) == (True, True)


def test_positive_subset_trace_three_blocks():
    mu = m(S3, 5, -3, 1)
    bar, steps = positive_subset_steps(mu, S3.full())
    assert bar.labels == ("a1", "a3")
    assert [(s.n, s.removed.labels) for s in steps] == [(1, ("a2",))]
    assert is_positive_set(mu, bar) and evaluate(mu, bar) > evaluate(mu, S3.full())


def test_positive_subset_threshold_index():
    # -1 < -1/2 but not -1 < -1/1, so the first admissible index is 2
    mu = m(S2, 2, -1)
    bar, steps = positive_subset_steps(mu, S2.full())
    assert bar.labels == ("a1",)
    assert [(s.n, s.removed.labels) for s in steps] == [(2, ("a2",))]


def test_positive_subset_on_positive_set_is_identity():
    mu = m(S3, 1, 2, 0)
    a = S3.set("a1", "a3")
    assert find_positive_subset(mu, a) == a
    assert positive_subset_steps(mu, a)[1] == []


def test_positive_subset_precondition():
    with pytest.raises(PreconditionError):
        find_positive_subset(m(S2, -1, 1), S2.full())


def test_positive_subset_indices_never_decrease():
    mu = m(S4, 10, F(-1, 3), -2, F(-1, 7))
    _, steps = positive_subset_steps(mu, S4.full())
    ns = [s.n for s in steps]
    assert ns == sorted(ns) and len(steps) >= 1


def test_hahn_jordan_example():
    mu = m(S4, 3, -1, 2, 0)
    hj = hahn_jordan(mu)
    assert hj.g_bar.labels == ("a1", "a3", "a4")
    assert hj.g_bar == brute_hahn(mu)
    assert hj.mu_plus.values == (3, 0, 2, 0)
    assert hj.mu_minus.values == (0, 1, 0, 0)


def test_hahn_jordan_trivial_cases():
    pos = m(S3, 1, 0, 2)
    hj = hahn_jordan(pos)
    assert hj.g_bar == S3.full() and hj.mu_minus.is_zero()
    z = hahn_jordan(SignedMeasure.zero(S3))
    assert z.g_bar == S3.full() and z.mu_plus.is_zero() and z.mu_minus.is_zero()
    neg = m(S3, -1, 0, -2)
    assert brute_hahn(neg).labels == ("a2",) == hahn_jordan(neg).g_bar.labels
