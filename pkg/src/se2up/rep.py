"""The unitary representation of the motion group on L2 of the circle.

``act`` realizes ``(pi_a(r, z) f)(s) = exp(i Re(z conj(a) conj(s))) f(exp(-i r) s)``
on Fourier coefficients: the rotation twists each mode's phase and the phase
factor is a convolution with its (Jacobi-Anger) Fourier coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .circle import CircleFunction, GridSamples, analyze, cos_stencil, sin_stencil
from .group import AlgebraElement, GroupElement, exp

__all__ = ["RepConfig", "act", "multiplier_coeffs", "derived", "fd_generator", "DEFAULT"]


@dataclass(frozen=True)
class RepConfig:
    """Representation parameter ``a`` and the band margin used by :func:`act`.

    ``bandwidth_margin=None`` means ``ceil(|z conj(a)|) + 24`` per action.
    """

    a: complex = 1 + 0j
    bandwidth_margin: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if self.a == 0:
            raise ValueError("representation parameter a must be non-zero")
        if self.bandwidth_margin is not None and self.bandwidth_margin < 0:
            raise ValueError("bandwidth_margin must be non-negative")

    def zeta(self, z: complex) -> complex:
        return complex(z) * self.a.conjugate()

    def margin(self, z: complex) -> int:
        if self.bandwidth_margin is not None:
            return int(self.bandwidth_margin)
        return math.ceil(abs(self.zeta(z))) + 24


DEFAULT = RepConfig()


def _grid_size(minimum: int) -> int:
    return 1 << max(4, (minimum - 1).bit_length())


def multiplier_coeffs(zeta: complex, k_min: int, k_max: int) -> np.ndarray:
    """Fourier coefficients on ``[k_min, k_max]`` of ``theta -> exp(i Re(zeta e^{-i theta}))``.

    These are ``i^k J_k(|zeta|) exp(-i k arg zeta)``, obtained here by
    oversampled FFT analysis rather than a Bessel routine.
    """
    zeta = complex(zeta)
    out = np.zeros(k_max - k_min + 1, dtype=complex)
    if zeta == 0:
        if k_min <= 0 <= k_max:
            out[-k_min] = 1.0
        return out
    width = k_max - k_min + 1
    M = _grid_size(4 * (width + math.ceil(abs(zeta)) + 16))
    samples = GridSamples.from_callable(
        lambda th: np.exp(1j * (zeta * np.exp(-1j * th)).real), M
    )
    return analyze(samples, k_min, k_max).coeffs.copy()


def act(g: GroupElement, f: CircleFunction, cfg: RepConfig = DEFAULT) -> CircleFunction:
    """Apply ``pi_a(g)``; the band grows by ``cfg.margin(g.z)`` on each side."""
    rotated = f.coeffs * np.exp(-1j * f.indices * g.r)
    zeta = cfg.zeta(g.z)
    K = cfg.margin(g.z)
    if zeta == 0:
        padded = np.zeros(f.size + 2 * K, dtype=complex)
        padded[K : K + f.size] = rotated
        return CircleFunction(f.n_min - K, padded)
    m = multiplier_coeffs(zeta, -K, K)
    return CircleFunction(f.n_min - K, kernels.convolve(rotated, m))


def derived(w: AlgebraElement, f: CircleFunction, cfg: RepConfig = DEFAULT) -> CircleFunction:
    """Derived representation ``pi(W) f = -r f' + i Re(zeta conj(s)) f`` with ``zeta = z conj(a)``.

    The output band is the input band grown by one on each side.
    """
    zeta = cfg.zeta(w.z)
    rotation = CircleFunction(f.n_min, (-1j * w.r) * f.indices * f.coeffs)
    phase = zeta.real * cos_stencil(f) + zeta.imag * sin_stencil(f)
    return rotation + 1j * phase


def fd_generator(
    w: AlgebraElement, f: CircleFunction, t: float, cfg: RepConfig = DEFAULT
) -> CircleFunction:
    """Forward difference ``(pi(exp(t W)) f - f) / t``."""
    if t == 0:
        raise ValueError("fd_generator: step t must be non-zero")
    return (act(exp(w, t), f, cfg) - f) / t
