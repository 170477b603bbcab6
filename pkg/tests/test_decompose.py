from fractions import Fraction as F

import pytest

from measdecomp import (
    EmptyFamilyError,
    FiniteSpace,
    PreconditionError,
    SetFamily,
    SignedMeasure,
    dellacherie_decompose,
    g_atomic_support,
    hahn_decompose_via_positive_sets,
    hahn_jordan,
    lebesgue_decompose,
    minimal_support,
    null_family,
    null_sets,
    polar_set,
    radon_nikodym_density,
    sigma_close,
)
from measdecomp.oracle import brute_g_support, brute_relation, brute_sigma_close

S3 = FiniteSpace.of_size(3)
S4 = FiniteSpace.of_size(4)


def m(space, *vals):
    return SignedMeasure.of(space, vals)


def closed(space, *label_lists):
    return sigma_close(SetFamily(space, tuple(space.set(*ls) for ls in label_lists)))


def test_support_example_matches_oracle():
    mu, g = m(S3, 1, 0, 2), closed(S3, ["a1"], ["a2"])
    support = g_atomic_support(mu, g)
    assert support.labels == ("a1", "a2")
    assert support == brute_g_support(mu, g)
    assert support in g.members


def test_support_trivial_families():
    mu = m(S3, 1, -2, 2)
    assert g_atomic_support(mu, closed(S3, ["a1"], ["a1", "a2", "a3"])) == S3.full()
    assert g_atomic_support(mu, SetFamily(S3, (S3.empty(),))) == S3.empty()
    with pytest.raises(EmptyFamilyError):
        g_atomic_support(mu, SetFamily(S3, ()))


def test_decompose_example():
    mu, g = m(S3, 1, 0, 2), closed(S3, ["a1"], ["a2"])
    dec = dellacherie_decompose(mu, g)
    assert dec.atomic.values == (1, 0, 0)
    assert dec.diffuse.values == (0, 0, 2)
    assert dec.minimal_support().labels == ("a1",)
    assert minimal_support(mu, g).labels == ("a1",)
    for G in brute_sigma_close(g):
        assert all(dec.diffuse.values[i] == 0 for i in G)


def test_decompose_trivial_families():
    mu = m(S3, 1, -2, 2)
    dec = dellacherie_decompose(mu, SetFamily(S3, (S3.full(),)))
    assert dec.atomic == mu and dec.diffuse.is_zero()
    dec = dellacherie_decompose(mu, SetFamily(S3, (S3.empty(),)))
    assert dec.atomic.is_zero() and dec.diffuse == mu


def test_null_family():
    assert null_family(m(S3, 0, 5, 0)).labels == ("a1", "a3")
    assert null_family(m(S3, 1, 5, 2)) == S3.empty()
    assert null_family(SignedMeasure.zero(S3)) == S3.full()
    assert len(null_sets(m(S3, 0, 5, 0))) == 4


def test_polar_set():
    assert polar_set([m(S3, 0, 5, 0), m(S3, 0, 0, 1)]).labels == ("a1",)
    with pytest.raises(EmptyFamilyError):
        polar_set([])


def test_lebesgue_example():
    mu, nu = m(S4, 1, 2, 0, 3), m(S4, 0, 5, 1, 0)
    ac, s = lebesgue_decompose(mu, nu)
    assert ac.values == (0, 2, 0, 0)
    assert s.values == (1, 0, 0, 3)
    assert brute_relation(ac, nu)[0] and brute_relation(s, nu)[1]
    # uniqueness against every split of the blocks
    for a in S4.subsets():
        alt_ac, alt_s = mu.restrict(a), mu.restrict(a.complement())
        if brute_relation(alt_ac, nu)[0] and brute_relation(alt_s, nu)[1]:
            assert alt_ac == ac


def test_lebesgue_trivial_cases():
    mu = m(S3, 1, -2, 3)
    assert lebesgue_decompose(mu, m(S3, 2, 1, 7)) == (mu, SignedMeasure.zero(S3))
    assert lebesgue_decompose(mu, SignedMeasure.zero(S3)) == (SignedMeasure.zero(S3), mu)


def test_radon_nikodym_density():
    nu = m(S4, 0, 5, 1, 0)
    assert radon_nikodym_density(m(S4, 0, 2, 0, 0), nu) == (0, F(2, 5), 0, 0)
    assert radon_nikodym_density(nu, nu) == (0, 1, 1, 0)
    assert radon_nikodym_density(SignedMeasure.zero(S4), nu) == (0, 0, 0, 0)
    with pytest.raises(PreconditionError):
        radon_nikodym_density(m(S4, 1, 0, 0, 0), nu)


def test_hahn_via_positive_sets_agrees():
    mu = m(S4, 3, -1, 2, 0)
    dec = hahn_decompose_via_positive_sets(mu)
    hj = hahn_jordan(mu)
    assert dec.support == hj.g_bar
    assert dec.atomic == hj.mu_plus
    assert dec.diffuse == -hj.mu_minus
