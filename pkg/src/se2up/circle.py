"""Band-limited model of L2 on the unit circle.

A function is stored by its Fourier coefficients on a contiguous index
window ``[n_min, n_max]``. The inner product is normalized,
``<f, g> = (1/2pi) int f conj(g) dtheta``, so the exponentials are
orthonormal and Parseval holds exactly on coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BandError

__all__ = [
    "CircleFunction",
    "GridSamples",
    "inner",
    "norm",
    "quad_inner",
    "synthesize",
    "analyze",
    "apply_T",
    "apply_S1",
    "apply_S2",
    "apply_S",
    "von_mises",
    "dirichlet",
    "shifted_packet",
    "random_function",
    "make_family",
]


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class CircleFunction:
    """Fourier coefficients ``coeffs[k]`` of ``exp(i (n_min + k) theta)``."""

    n_min: int
    coeffs: np.ndarray

    def __post_init__(self):
        if isinstance(self.n_min, bool) or int(self.n_min) != self.n_min:
            raise BandError(f"n_min must be an integer, got {self.n_min!r}")
        object.__setattr__(self, "n_min", int(self.n_min))
        coeffs = _frozen(self.coeffs)
        if coeffs.size == 0:
            raise BandError("coeffs must be non-empty")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def mode(cls, n: int, amplitude: complex = 1.0) -> CircleFunction:
        return cls(n, [amplitude])

    @classmethod
    def from_dict(cls, mapping: dict[int, complex]) -> CircleFunction:
        """Build from ``{index: coefficient}``; gaps are zero-filled."""
        if not mapping:
            raise BandError("coefficient mapping is empty")
        lo, hi = min(mapping), max(mapping)
        coeffs = np.zeros(hi - lo + 1, dtype=complex)
        for n, c in mapping.items():
            coeffs[n - lo] = c
        return cls(lo, coeffs)

    @property
    def n_max(self) -> int:
        return self.n_min + self.coeffs.size - 1

    @property
    def size(self) -> int:
        """Number of stored coefficients, ``n_max - n_min + 1``."""
        return self.coeffs.size

    @property
    def bandwidth(self) -> int:
        """Largest ``|n|`` in the stored window."""
        return max(abs(self.n_min), abs(self.n_max))

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_max + 1)

    def coeff(self, n: int) -> complex:
        if self.n_min <= n <= self.n_max:
            return complex(self.coeffs[n - self.n_min])
        return 0j

    def padded(self, n_min: int, n_max: int) -> np.ndarray:
        """Coefficients on ``[n_min, n_max]``, which must contain the band."""
        if n_min > self.n_min or n_max < self.n_max:
            raise BandError(
                f"window [{n_min}, {n_max}] does not contain [{self.n_min}, {self.n_max}]"
            )
        out = np.zeros(n_max - n_min + 1, dtype=complex)
        out[self.n_min - n_min : self.n_max - n_min + 1] = self.coeffs
        return out

    def truncate(self, n_min: int, n_max: int) -> CircleFunction:
        """Restrict to ``[n_min, n_max]``, zero-filling outside the stored band."""
        if n_max < n_min:
            raise BandError(f"empty window [{n_min}, {n_max}]")
        lo, hi = min(n_min, self.n_min), max(n_max, self.n_max)
        full = self.padded(lo, hi)
        return CircleFunction(n_min, full[n_min - lo : n_max - lo + 1])

    def trimmed(self, rtol: float = 0.0) -> CircleFunction:
        """Drop leading and trailing coefficients with ``|c| <= rtol * max|c|``."""
        mags = np.abs(self.coeffs)
        keep = np.nonzero(mags > rtol * mags.max())[0]
        if keep.size == 0:
            return CircleFunction(0, [0.0])
        return CircleFunction(self.n_min + keep[0], self.coeffs[keep[0] : keep[-1] + 1])

    def norm(self) -> float:
        return math.sqrt(float(np.vdot(self.coeffs, self.coeffs).real))

    def _binary(self, other: CircleFunction, op) -> CircleFunction:
        lo = min(self.n_min, other.n_min)
        hi = max(self.n_max, other.n_max)
        return CircleFunction(lo, op(self.padded(lo, hi), other.padded(lo, hi)))

    def __add__(self, other):
        if not isinstance(other, CircleFunction):
            return NotImplemented
        return self._binary(other, np.add)

    def __sub__(self, other):
        if not isinstance(other, CircleFunction):
            return NotImplemented
        return self._binary(other, np.subtract)

    def __mul__(self, scalar):
        if isinstance(scalar, CircleFunction):
            return NotImplemented
        return CircleFunction(self.n_min, self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return CircleFunction(self.n_min, self.coeffs / complex(scalar))

    def __neg__(self):
        return CircleFunction(self.n_min, -self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CircleFunction):
            return NotImplemented
        lo = min(self.n_min, other.n_min)
        hi = max(self.n_max, other.n_max)
        return bool(np.array_equal(self.padded(lo, hi), other.padded(lo, hi)))

    __hash__ = None  # type: ignore[assignment]

    def max_abs_diff(self, other: CircleFunction) -> float:
        """Sup-norm of the coefficient difference after zero-padding."""
        return float(np.abs((self - other).coeffs).max())

    def __repr__(self):
        return f"CircleFunction(n_min={self.n_min}, coeffs={self.coeffs.tolist()!r})"

    def to_json(self) -> dict:
        return {
            "n_min": self.n_min,
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> CircleFunction:
        """Parse ``{"n_min": int, "coeffs": [[re, im], ...]}``.

        Real numbers are accepted in place of ``[re, im]`` pairs. Errors name
        the offending field.
        """
        if not isinstance(data, dict):
            raise ValueError("circle function: expected a JSON object")
        if "n_min" not in data:
            raise ValueError("n_min: missing field")
        n_min = data["n_min"]
        if isinstance(n_min, bool) or not isinstance(n_min, int):
            raise ValueError(f"n_min: expected an integer, got {n_min!r}")
        raw = data.get("coeffs")
        if not isinstance(raw, list) or not raw:
            raise ValueError("coeffs: expected a non-empty list of [re, im] pairs")
        coeffs = []
        for k, item in enumerate(raw):
            if isinstance(item, (int, float)) and not isinstance(item, bool):
                coeffs.append(complex(item))
            elif (
                isinstance(item, list)
                and len(item) == 2
                and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
            ):
                coeffs.append(complex(item[0], item[1]))
            else:
                raise ValueError(f"coeffs[{k}]: expected [re, im], got {item!r}")
        return cls(n_min, coeffs)


@dataclass(frozen=True, eq=False)
class GridSamples:
    """Samples ``f(exp(i theta_j))`` at ``theta_j = 2 pi j / M``."""

    values: np.ndarray

    def __post_init__(self):
        values = _frozen(self.values)
        if values.size == 0:
            raise BandError("grid must have at least one point")
        object.__setattr__(self, "values", values)

    @property
    def M(self) -> int:
        return self.values.size

    @classmethod
    def from_callable(cls, func, M: int) -> GridSamples:
        theta = 2.0 * np.pi * np.arange(M) / M
        return cls(np.asarray(func(theta), dtype=complex) * np.ones(M))


def inner(f: CircleFunction, g: CircleFunction) -> complex:
    """``sum_n c_n(f) conj(c_n(g))``; conjugate-linear in ``g``."""
    lo = max(f.n_min, g.n_min)
    hi = min(f.n_max, g.n_max)
    if lo > hi:
        return 0j
    a = f.coeffs[lo - f.n_min : hi - f.n_min + 1]
    b = g.coeffs[lo - g.n_min : hi - g.n_min + 1]
    return complex(np.vdot(b, a))


def norm(f: CircleFunction) -> float:
    return f.norm()


def quad_inner(F: GridSamples, G: GridSamples) -> complex:
    """Trapezoid rule for ``(1/2pi) int F conj(G)``."""
    if F.M != G.M:
        raise BandError(f"grid size mismatch: {F.M} vs {G.M}")
    return complex(np.vdot(G.values, F.values) / F.M)


def synthesize(f: CircleFunction, M: int) -> GridSamples:
    if M < f.size:
        raise BandError(f"grid of {M} points cannot carry {f.size} coefficients")
    slots = np.zeros(M, dtype=complex)
    # indices are distinct mod M because M >= size
    slots[f.indices % M] = f.coeffs
    return GridSamples(M * np.fft.ifft(slots))


def analyze(F: GridSamples, n_min: int, n_max: int) -> CircleFunction:
    if n_max < n_min:
        raise BandError(f"empty band [{n_min}, {n_max}]")
    if F.M < n_max - n_min + 1:
        raise BandError(f"grid of {F.M} points cannot resolve band [{n_min}, {n_max}]")
    spectrum = np.fft.fft(F.values) / F.M
    return CircleFunction(n_min, spectrum[np.arange(n_min, n_max + 1) % F.M])


def apply_T(f: CircleFunction) -> CircleFunction:
    """``-i f'``: multiplies ``c_n`` by ``n``."""
    return CircleFunction(f.n_min, f.indices * f.coeffs)


def _neighbours(f: CircleFunction):
    """Coefficients ``c_{n-1}`` and ``c_{n+1}`` on the band grown by one each side."""
    lower = np.zeros(f.size + 2, dtype=complex)
    upper = np.zeros(f.size + 2, dtype=complex)
    lower[2:] = f.coeffs
    upper[:-2] = f.coeffs
    return lower, upper


def cos_stencil(f: CircleFunction) -> CircleFunction:
    """``cos(theta) f`` on ``[n_min - 1, n_max + 1]``."""
    lower, upper = _neighbours(f)
    return CircleFunction(f.n_min - 1, (lower + upper) / 2)


def sin_stencil(f: CircleFunction) -> CircleFunction:
    """``sin(theta) f`` on ``[n_min - 1, n_max + 1]``."""
    lower, upper = _neighbours(f)
    return CircleFunction(f.n_min - 1, -0.5j * (lower - upper))


def apply_S1(f: CircleFunction) -> CircleFunction:
    """``-cos(theta) f``."""
    return -cos_stencil(f)


def apply_S2(f: CircleFunction) -> CircleFunction:
    """``-sin(theta) f``."""
    return -sin_stencil(f)


def apply_S(f: CircleFunction) -> CircleFunction:
    """``-exp(i theta) f``, a unitary shift of the band up by one."""
    return CircleFunction(f.n_min + 1, -f.coeffs)


# -- test-function families --------------------------------------------------


def von_mises(lam: float) -> CircleFunction:
    """Coefficients of ``exp(lam cos theta)``, trimmed at 1e-16 of the peak."""
    if not lam > 0:
        raise ValueError(f"von_mises: lam must be positive, got {lam!r}")
    M = 8 * math.ceil(lam) + 64
    samples = GridSamples.from_callable(lambda th: np.exp(lam * np.cos(th)), M)
    half = (M - 1) // 2
    full = analyze(samples, -half, half)
    mags = np.abs(full.coeffs)
    keep = np.nonzero(mags >= 1e-16 * mags.max())[0]
    k = max(abs(int(full.indices[keep[0]])), abs(int(full.indices[keep[-1]])))
    # the expansion is real and even
    return full.truncate(-k, k)


def dirichlet(K: int) -> CircleFunction:
    if isinstance(K, bool) or int(K) != K or K < 0:
        raise ValueError(f"dirichlet: K must be a non-negative integer, got {K!r}")
    K = int(K)
    return CircleFunction(-K, np.ones(2 * K + 1))


def shifted_packet(M0: int, sigma: float) -> CircleFunction:
    """Gaussian coefficient packet ``exp(-(n - M0)^2 / (2 sigma^2))``."""
    if isinstance(M0, bool) or int(M0) != M0:
        raise ValueError(f"shifted_packet: M0 must be an integer, got {M0!r}")
    if not sigma > 0:
        raise ValueError(f"shifted_packet: sigma must be positive, got {sigma!r}")
    M0 = int(M0)
    # exp(-x^2/2) < 1e-16 once x > 8.6
    half = math.ceil(9 * sigma)
    n = np.arange(M0 - half, M0 + half + 1)
    return CircleFunction(M0 - half, np.exp(-((n - M0) ** 2) / (2 * sigma**2)))


def random_function(N: int, seed: int) -> CircleFunction:
    """Standard complex Gaussian coefficients on ``[-N, N]`` from PCG64(seed)."""
    if isinstance(N, bool) or int(N) != N or N < 0:
        raise ValueError(f"random: N must be a non-negative integer, got {N!r}")
    N = int(N)
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((2 * N + 1, 2))
    return CircleFunction(-N, (z[:, 0] + 1j * z[:, 1]) / math.sqrt(2))


FAMILIES = {
    "von_mises": (von_mises, ("lam",)),
    "dirichlet": (dirichlet, ("K",)),
    "shifted_packet": (shifted_packet, ("M0", "sigma")),
    "random": (random_function, ("N", "seed")),
}


def make_family(kind: str, **params) -> CircleFunction:
    """Dispatch to a named family: ``make_family("dirichlet", K=2)``."""
    try:
        builder, names = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}") from None
    missing = [p for p in names if p not in params]
    extra = sorted(set(params) - set(names))
    if missing or extra:
        raise ValueError(f"{kind}: expected parameters {list(names)}, got {sorted(params)}")
    return builder(**{p: params[p] for p in names})
