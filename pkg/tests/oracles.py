"""Independent reference computations for the tests.

Nothing here goes through FFTs or the package's coefficient stencils:
functions are evaluated by direct summation and integrated by explicit
trapezoid sums.
"""

import math

import numpy as np


def evaluate(f, theta):
    """Direct sum ``sum_n c_n exp(i n theta)``."""
    theta = np.asarray(theta, dtype=float)
    out = np.zeros(theta.shape, dtype=complex)
    for n, c in zip(range(f.n_min, f.n_max + 1), f.coeffs):
        out += c * np.exp(1j * n * theta)
    return out


def grid(M):
    return 2 * math.pi * np.arange(M) / M


def trapezoid_mean(values):
    """``(1/2pi) int g dtheta`` from samples on a uniform periodic grid."""
    return complex(sum(values) / len(values))


def quad_pairing(weight, f, M=256):
    """``(1/2pi) int weight(theta) |f|^2 dtheta``."""
    th = grid(M)
    return trapezoid_mean(weight(th) * np.abs(evaluate(f, th)) ** 2)


def quad_norm2(values_fn, M=256):
    th = grid(M)
    return trapezoid_mean(np.abs(values_fn(th)) ** 2).real


def fourier_coeff(func, k, M=512):
    """``(1/2pi) int func(theta) exp(-i k theta)`` by an explicit trapezoid sum."""
    th = grid(M)
    return trapezoid_mean(func(th) * np.exp(-1j * k * th))


def bessel_j_series(k, x, terms=12):
    """Power series ``sum_m (-1)^m (x/2)^(2m+k) / (m! (m+k)!)`` for ``k >= 0``."""
    return sum(
        (-1) ** m * (x / 2) ** (2 * m + k) / (math.factorial(m) * math.factorial(m + k))
        for m in range(terms)
    )


def mat_commutator(a, b):
    return a @ b - b @ a
