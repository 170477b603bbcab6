from fractions import Fraction as F

import pytest

from measdecomp import (
    FiniteSpace,
    SetFamily,
    SignedMeasure,
    VectorMeasure,
    control_measure,
    is_theta_null,
    sigma_close,
    variation,
    vector_decompose,
)
from measdecomp.oracle import brute_g_support, brute_sigma_close

S3 = FiniteSpace.of_size(3)
THETA = VectorMeasure.of(S3, [(1, 0), (0, -1), (0, 0)])


def test_theta_null():
    assert is_theta_null(THETA, S3.set("a3"))
    assert not is_theta_null(THETA, S3.set("a1"))
    assert is_theta_null(THETA, S3.empty())


def test_control_measure():
    theta = control_measure(THETA)
    assert theta.values == (1, 1, 0)
    for f in S3.subsets():
        assert (theta.restrict(f).is_zero()) == is_theta_null(THETA, f)
    zero = VectorMeasure.of(S3, [(0, 0)] * 3)
    assert control_measure(zero).is_zero()


def test_control_in_one_dimension_is_variation():
    mu = SignedMeasure.of(S3, [2, F(-1, 2), 0])
    theta = VectorMeasure.from_components([mu])
    assert control_measure(theta) == variation(mu)[0]


def test_vector_decompose_example():
    g = sigma_close(SetFamily(S3, (S3.set("a2", "a3"),)))
    dec = vector_decompose(THETA, g)
    assert dec.support.labels == ("a2", "a3")
    assert dec.support == brute_g_support(control_measure(THETA), g)
    assert dec.atomic.values == ((0, 0), (0, -1), (0, 0))
    for G in brute_sigma_close(g):
        assert is_theta_null(dec.diffuse, G)


def test_vector_trivial_families():
    full = vector_decompose(THETA, SetFamily(S3, (S3.full(),)))
    assert full.atomic == THETA
    empty = vector_decompose(THETA, SetFamily(S3, (S3.empty(),)))
    assert empty.diffuse == THETA


def test_vector_shape_validation():
    with pytest.raises(ValueError):
        VectorMeasure.of(S3, [(1, 0), (0,), (0, 0)])
