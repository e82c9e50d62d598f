import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from se2up.group import (
    IDENTITY,
    X,
    Y1,
    Y2,
    AlgebraElement,
    GroupElement,
    bracket,
    exp,
    expm_series,
    inverse,
    multiply,
    pair,
)

import oracles

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)
groups = st.builds(GroupElement, finite, complexes)
algebras = st.builds(AlgebraElement, finite, complexes)


def test_pair():
    assert pair(1 + 2j, 3 - 1j) == 1 * 3 + 2 * (-1)
    assert pair(3 + 4j, 3 + 4j) == 25


@settings(max_examples=100)
@given(complexes, complexes, complexes, finite)
def test_pair_symmetric_bilinear(x, y, w, a):
    assert pair(x, y) == pytest.approx(pair(y, x))
    assert pair(a * x + w, y) == pytest.approx(a * pair(x, y) + pair(w, y), abs=1e-9)


def test_multiply_examples():
    g = multiply(GroupElement(math.pi / 2, 0), GroupElement(0, 1))
    assert g.r == math.pi / 2 and g.z == pytest.approx(1j, abs=1e-16)
    assert multiply(GroupElement(0, 2 + 1j), GroupElement(0, -1 + 3j)) == GroupElement(0, 1 + 4j)


def test_multiply_matches_matrix_product():
    rng = np.random.default_rng(0)
    for _ in range(100):
        g = GroupElement(rng.uniform(-4, 4), complex(*rng.normal(size=2)))
        h = GroupElement(rng.uniform(-4, 4), complex(*rng.normal(size=2)))
        np.testing.assert_allclose(multiply(g, h).embed(), g.embed() @ h.embed(), atol=1e-14)


def test_inverse_examples():
    assert inverse(IDENTITY).isclose(IDENTITY, 0)
    assert inverse(GroupElement(0, 1 + 1j)) == GroupElement(0, -1 - 1j)


def test_inverse_random():
    rng = np.random.default_rng(1)
    for _ in range(100):
        g = GroupElement(rng.uniform(-4, 4), complex(*rng.normal(size=2)))
        assert multiply(g, inverse(g)).isclose(IDENTITY, 1e-14)
        np.testing.assert_allclose(inverse(g).embed(), np.linalg.inv(g.embed()), atol=1e-14)


def test_r_is_not_reduced():
    g = GroupElement(7.0, 0)
    assert g.r == 7.0
    assert g.isclose(GroupElement(7.0 - 2 * math.pi, 0))


@settings(max_examples=100)
@given(groups, groups, groups)
def test_associative(a, b, c):
    lhs, rhs = multiply(multiply(a, b), c), multiply(a, multiply(b, c))
    assert lhs.isclose(rhs, 1e-13 * (1 + abs(a.z) + abs(b.z) + abs(c.z)))


def test_bracket_table_exact():
    assert bracket(X, Y1) == Y2
    assert bracket(X, Y2) == -Y1
    assert bracket(Y1, Y2) == AlgebraElement(0, 0)


def test_bracket_matches_commutator_oracle():
    rng = np.random.default_rng(2)
    for _ in range(100):
        v = AlgebraElement(rng.normal(), complex(*rng.normal(size=2)))
        w = AlgebraElement(rng.normal(), complex(*rng.normal(size=2)))
        np.testing.assert_allclose(
            bracket(v, w).embed(), oracles.mat_commutator(v.embed(), w.embed()), atol=1e-14
        )


@settings(max_examples=100)
@given(algebras, algebras, finite, finite)
def test_bracket_bilinear_antisymmetric(v, w, a, b):
    u = a * v + b * w
    lhs = bracket(u, w)
    rhs = AlgebraElement(0, a * bracket(v, w).z)  # bracket(w, w) = 0
    assert abs(lhs.z - rhs.z) <= 1e-9
    assert bracket(v, w).z == pytest.approx(-bracket(w, v).z)


def _jacobi(u, v, w):
    return bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))


def test_jacobi_exact_rationals():
    # r values that are exact binary fractions keep every product exact
    vals = [Fraction(1, 2), Fraction(-3, 4), Fraction(5, 8)]
    u = AlgebraElement(float(vals[0]), 1 + 2j)
    v = AlgebraElement(float(vals[1]), -3 + 0.5j)
    w = AlgebraElement(float(vals[2]), 0.25 - 1j)
    assert _jacobi(u, v, w) == AlgebraElement(0, 0)


@settings(max_examples=100)
@given(algebras, algebras, algebras)
def test_jacobi_random(u, v, w):
    assert abs(_jacobi(u, v, w).z) <= 1e-13 * 1000


def test_exp_displays_exact():
    for t in (-1.3, 0.0, 0.7, 2.0):
        assert np.array_equal(exp(X, t).embed(), np.array([[cmath.exp(1j * t), 0], [0, 1]]))
        assert np.array_equal(exp(Y1, t).embed(), np.array([[1, t], [0, 1]]))
        assert np.array_equal(exp(Y2, t).embed(), np.array([[1, 1j * t], [0, 1]]))
    assert exp(X, 0.4) == GroupElement(0.4, 0)


def test_exp_worked_value():
    g = exp(AlgebraElement(1, 1), math.pi)
    assert g.r == math.pi
    assert g.z == pytest.approx(2j, abs=1e-15)
    np.testing.assert_allclose(
        g.embed(), expm_series(math.pi * AlgebraElement(1, 1).embed()), atol=1e-12
    )


def test_exp_small_rotation_branch_is_continuous():
    w = AlgebraElement(1e-13, 2 - 1j)
    np.testing.assert_allclose(exp(w, 2.0).embed(), expm_series(2.0 * w.embed()), atol=1e-15)
    w = AlgebraElement(1e-7, 2 - 1j)
    np.testing.assert_allclose(exp(w, 2.0).embed(), expm_series(2.0 * w.embed()), atol=1e-15)


def test_series_oracle_matches_scipy():
    linalg = pytest.importorskip("scipy.linalg")
    a = AlgebraElement(2.5, 1 - 3j).embed() * 1.7
    np.testing.assert_allclose(expm_series(a), linalg.expm(a), atol=1e-12)


def test_exp_against_series_100_random():
    rng = np.random.default_rng(3)
    for _ in range(100):
        w = AlgebraElement(rng.normal(), complex(*rng.normal(size=2)))
        t = rng.uniform(-3, 3)
        np.testing.assert_allclose(exp(w, t).embed(), expm_series(t * w.embed()), atol=1e-12)


@settings(max_examples=100)
@given(algebras, st.floats(-3, 3), st.floats(-3, 3))
def test_one_parameter_group(w, s, t):
    lhs = multiply(exp(w, s), exp(w, t))
    assert lhs.isclose(exp(w, s + t), 1e-13 * (1 + abs(w.z)) * 10)


def test_json_forms():
    g = GroupElement(0.5, 1 - 2j)
    assert g.to_json() == {"r": 0.5, "z": [1.0, -2.0]}
    assert GroupElement.from_json(g.to_json()) == g
    assert Y2.to_json()["type"] == "algebra"
    assert AlgebraElement.from_json(Y2.to_json()) == Y2
