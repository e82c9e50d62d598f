import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from se2up.checks import convergence_order
from se2up.circle import CircleFunction, random_function
from se2up.group import IDENTITY, X, Y1, Y2, AlgebraElement, GroupElement, multiply
from se2up.rep import RepConfig, act, derived, fd_generator, multiplier_coeffs

import oracles

ONE = CircleFunction(0, [1.0])


def random_group(rng, z_max):
    return GroupElement(
        rng.uniform(-np.pi, np.pi), cmath.rect(z_max * rng.uniform(), rng.uniform(0, 2 * np.pi))
    )


def test_config_validation():
    with pytest.raises(ValueError):
        RepConfig(a=0)
    assert RepConfig().margin(2.5j) == 3 + 24
    assert RepConfig(bandwidth_margin=5).margin(100) == 5


# -- multiplier ---------------------------------------------------------------


def test_multiplier_zero():
    m = multiplier_coeffs(0, -3, 3)
    assert np.array_equal(m, [0, 0, 0, 1, 0, 0, 0])


def test_multiplier_j0_power_series():
    m = multiplier_coeffs(1, 0, 0)
    assert m[0] == pytest.approx(oracles.bessel_j_series(0, 1.0), abs=1e-12)


def test_multiplier_jacobi_anger():
    zeta = 1.5 * cmath.exp(0.7j)
    m = multiplier_coeffs(zeta, -6, 6)
    for k in range(-6, 7):
        jk = oracles.bessel_j_series(abs(k), 1.5, terms=30) * (-1) ** (k if k < 0 else 0)
        want = 1j**k * jk * cmath.exp(-1j * k * 0.7)
        assert m[k + 6] == pytest.approx(want, abs=1e-13)


def test_multiplier_even_for_real_zeta():
    m = multiplier_coeffs(2, -8, 8)
    np.testing.assert_allclose(m, m[::-1], atol=1e-12)
    for k in range(1, 9):
        want = oracles.fourier_coeff(lambda th: np.exp(2j * np.cos(th)), -k)
        assert m[8 - k] == pytest.approx(want, abs=1e-12)


# -- action -------------------------------------------------------------------


def test_rotation_twists_phase():
    r = 0.9
    out = act(GroupElement(r, 0), CircleFunction.mode(3))
    assert out.max_abs_diff(CircleFunction.mode(3, cmath.exp(-3j * r))) <= 1e-16


def test_identity_action():
    f = random_function(4, seed=0)
    assert act(IDENTITY, f) == f


def test_translation_of_constant():
    out = act(GroupElement(0, 1), ONE)
    for k in range(-10, 11):
        want = oracles.fourier_coeff(lambda th: np.exp(1j * np.cos(th)), k)
        assert out.coeff(k) == pytest.approx(want, abs=1e-10)
    special = pytest.importorskip("scipy.special")
    assert out.coeff(3) == pytest.approx(1j**3 * special.jv(3, 1.0), abs=1e-14)


def test_action_against_sampled_formula():
    f = random_function(3, seed=4)
    g = GroupElement(0.6, 1.2 - 0.8j)
    out = act(g, f, RepConfig(a=0.5 + 1j))
    th = oracles.grid(128)
    s = np.exp(1j * th)
    a = 0.5 + 1j
    want = np.exp(1j * (g.z * np.conj(s * a)).real) * oracles.evaluate(f, th - g.r)
    np.testing.assert_allclose(oracles.evaluate(out, th), want, atol=1e-12)


def test_action_band_margin():
    f = random_function(2, seed=1)
    out = act(GroupElement(0, 2.2), f)
    assert (out.n_min, out.n_max) == (f.n_min - 27, f.n_max + 27)


def test_unitarity_50_random():
    rng = np.random.default_rng(5)
    for _ in range(50):
        f = random_function(int(rng.integers(0, 17)), int(rng.integers(2**31)))
        g = random_group(rng, 4.0)
        assert act(g, f).norm() == pytest.approx(f.norm(), rel=1e-10)


def test_homomorphism_50_random():
    rng = np.random.default_rng(6)
    for _ in range(50):
        f = random_function(int(rng.integers(0, 17)), int(rng.integers(2**31)))
        g, h = random_group(rng, 3.0), random_group(rng, 3.0)
        defect = act(g, act(h, f)) - act(multiply(g, h), f)
        assert defect.norm() <= 1e-9 * f.norm()


# -- derived representation ---------------------------------------------------


def test_derived_basis_examples():
    for n in (-2, 0, 3):
        assert derived(X, CircleFunction.mode(n)) == CircleFunction.mode(n, -1j * n)
    assert derived(Y1, ONE) == CircleFunction(-1, [0.5j, 0, 0.5j])
    assert derived(Y2, ONE) == CircleFunction(-1, [-0.5, 0, 0.5])


def test_derived_against_samples():
    f = random_function(4, seed=8)
    th = oracles.grid(64)
    h = 1e-5
    fv = oracles.evaluate(f, th)
    fprime = (oracles.evaluate(f, th + h) - oracles.evaluate(f, th - h)) / (2 * h)
    np.testing.assert_allclose(oracles.evaluate(derived(X, f), th), -fprime, atol=1e-8)
    np.testing.assert_allclose(oracles.evaluate(derived(Y1, f), th), 1j * np.cos(th) * fv, atol=1e-13)
    np.testing.assert_allclose(oracles.evaluate(derived(Y2, f), th), 1j * np.sin(th) * fv, atol=1e-13)


@settings(max_examples=50, deadline=None)
@given(
    st.floats(-3, 3), st.floats(-3, 3), st.integers(0, 2**31), st.integers(0, 2**31),
)
def test_derived_linear_in_algebra(a, b, s1, s2):
    rng = np.random.default_rng(s1)
    w1 = AlgebraElement(rng.normal(), complex(*rng.normal(size=2)))
    w2 = AlgebraElement(rng.normal(), complex(*rng.normal(size=2)))
    f = random_function(5, seed=s2)
    lhs = derived(a * w1 + b * w2, f)
    rhs = a * derived(w1, f) + b * derived(w2, f)
    assert lhs.max_abs_diff(rhs) <= 1e-13 * max(1.0, f.norm()) * 10


def test_derived_with_general_a():
    f = random_function(3, seed=2)
    cfg = RepConfig(a=2 - 1j)
    w = AlgebraElement(0, 1j)
    # zeta = i * (2 + i) = -1 + 2i
    want = derived(AlgebraElement(0, -1 + 2j), f)
    assert derived(w, f, cfg).max_abs_diff(want) <= 1e-15


def test_derived_commutators():
    for seed in range(20):
        f = random_function(8, seed=seed)
        c1 = derived(X, derived(Y1, f)) - derived(Y1, derived(X, f))
        c2 = derived(X, derived(Y2, f)) - derived(Y2, derived(X, f))
        assert c1.max_abs_diff(derived(Y2, f)) <= 1e-12
        assert c2.max_abs_diff(-derived(Y1, f)) <= 1e-12


# -- finite-difference generator ----------------------------------------------


def test_fd_rotation_closed_form():
    t = 1e-4
    fd = fd_generator(X, CircleFunction.mode(1), t)
    quotient = (cmath.exp(-1j * t) - 1) / t
    assert fd.coeff(1) == pytest.approx(quotient, abs=1e-12)
    err = (fd - derived(X, CircleFunction.mode(1))).norm()
    assert err == pytest.approx(t / 2, rel=1e-3)


def test_fd_zero_element():
    f = random_function(3, seed=0)
    for t in (1.0, 1e-3):
        assert fd_generator(AlgebraElement(0, 0), f, t).norm() == 0


def test_fd_rejects_zero_step():
    with pytest.raises(ValueError):
        fd_generator(X, ONE, 0.0)


@pytest.mark.parametrize("w", [X, Y1, Y2], ids=["X", "Y1", "Y2"])
def test_fd_first_order(w):
    f = ONE if w is not X else CircleFunction(-1, [0.5, 1, -0.25j])
    steps = (1e-2, 1e-3, 1e-4)
    errs = [(fd_generator(w, f, t) - derived(w, f)).norm() for t in steps]
    assert errs[1] <= 1e-3 * 2
    assert 0.9 <= convergence_order(steps, errs) <= 1.1
