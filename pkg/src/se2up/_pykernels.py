"""Numpy implementations of the hot kernels.

These are the reference versions; ``_ckernels.pyx`` mirrors them loop for
loop and must agree to rounding.
"""

import numpy as np


def convolve(a, b):
    """Full linear convolution of two complex coefficient sequences."""
    return np.convolve(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def ratio_terms(c, n_min):
    """Return ``(sum |c_n|^2, sum n^2 |c_n|^2, sum c_n conj(c_{n+1}))``."""
    c = np.asarray(c, dtype=complex)
    n = np.arange(n_min, n_min + c.size, dtype=float)
    power = c.real**2 + c.imag**2
    pairing = complex(np.vdot(c[1:], c[:-1])) if c.size > 1 else 0j
    return float(power.sum()), float((n * n * power).sum()), pairing


def ratio_and_gradient(c, n_min):
    """Ratio |P|^2 / (4 B C) and its real-linear gradient.

    The gradient is returned as a complex vector whose real part holds the
    partial derivatives in Re(c_n) and whose imaginary part those in Im(c_n).
    Callers guarantee B > 0 and C > 0.
    """
    c = np.asarray(c, dtype=complex)
    n = np.arange(n_min, n_min + c.size, dtype=float)
    b, cc, p = ratio_terms(c, n_min)
    denom = 4.0 * b * cc
    rho = (p.real**2 + p.imag**2) / denom
    lower = np.zeros_like(c)
    upper = np.zeros_like(c)
    lower[1:] = c[:-1]
    upper[:-1] = c[1:]
    grad_a = 2.0 * (np.conj(p) * lower + p * upper)
    grad = grad_a / denom - rho * (2.0 * c / b + 2.0 * n * n * c / cc)
    return float(rho), grad
