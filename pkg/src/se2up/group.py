"""The Euclidean motion group of the plane and its Lie algebra.

A group element ``(r, z)`` is the matrix ``[[exp(i r), z], [0, 1]]`` acting
on the plane by ``w -> exp(i r) w + z``. An algebra element ``(r, z)`` is
the matrix ``[[i r, z], [0, 0]]``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GroupElement",
    "AlgebraElement",
    "pair",
    "multiply",
    "inverse",
    "bracket",
    "exp",
    "expm_series",
    "IDENTITY",
    "X",
    "Y1",
    "Y2",
    "BASIS",
]


def pair(x: complex, y: complex) -> float:
    """Real inner product on C = R^2, ``Re(x conj(y))``."""
    return (complex(x) * complex(y).conjugate()).real


@dataclass(frozen=True)
class GroupElement:
    r: float
    z: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "z", complex(self.z))

    def embed(self) -> np.ndarray:
        return np.array([[cmath.exp(1j * self.r), self.z], [0, 1]], dtype=complex)

    @classmethod
    def from_matrix(cls, m, r_hint: float = 0.0) -> GroupElement:
        """Recover ``(r, z)``; ``r`` is the lift of ``arg m[0,0]`` nearest ``r_hint``."""
        m = np.asarray(m, dtype=complex)
        angle = cmath.phase(m[0, 0])
        angle += 2 * math.pi * round((r_hint - angle) / (2 * math.pi))
        return cls(angle, complex(m[0, 1]))

    def isclose(self, other: GroupElement, tol: float = 1e-14) -> bool:
        """Equality up to ``tol``, comparing ``exp(i r)`` rather than ``r``."""
        return (
            abs(cmath.exp(1j * self.r) - cmath.exp(1j * other.r)) <= tol
            and abs(self.z - other.z) <= tol
        )

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def to_json(self) -> dict:
        return {"r": self.r, "z": [self.z.real, self.z.imag]}

    @classmethod
    def from_json(cls, data: dict) -> GroupElement:
        return cls(float(data["r"]), complex(*data["z"]))


@dataclass(frozen=True)
class AlgebraElement:
    r: float
    z: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "z", complex(self.z))

    def embed(self) -> np.ndarray:
        return np.array([[1j * self.r, self.z], [0, 0]], dtype=complex)

    @classmethod
    def from_matrix(cls, m) -> AlgebraElement:
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0].imag, complex(m[0, 1]))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement(self.r + other.r, self.z + other.z)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement(self.r - other.r, self.z - other.z)

    def __neg__(self):
        return AlgebraElement(-self.r, -self.z)

    def __mul__(self, scalar):
        # the algebra is a real vector space
        s = float(scalar)
        return AlgebraElement(s * self.r, s * self.z)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"type": "algebra", "r": self.r, "z": [self.z.real, self.z.imag]}

    @classmethod
    def from_json(cls, data: dict) -> AlgebraElement:
        if data.get("type", "algebra") != "algebra":
            raise ValueError(f"type: expected 'algebra', got {data['type']!r}")
        return cls(float(data["r"]), complex(*data["z"]))


IDENTITY = GroupElement(0.0, 0j)
X = AlgebraElement(1.0, 0j)
Y1 = AlgebraElement(0.0, 1 + 0j)
Y2 = AlgebraElement(0.0, 1j)
BASIS = {"X": X, "Y1": Y1, "Y2": Y2}


def multiply(g1: GroupElement, g2: GroupElement) -> GroupElement:
    return GroupElement(g1.r + g2.r, g1.z + cmath.exp(1j * g1.r) * g2.z)


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-g.r, -cmath.exp(-1j * g.r) * g.z)


def bracket(w1: AlgebraElement, w2: AlgebraElement) -> AlgebraElement:
    """Matrix commutator ``[W1, W2] = (0, i r1 z2 - i r2 z1)``."""
    return AlgebraElement(0.0, 1j * w1.r * w2.z - 1j * w2.r * w1.z)


def _phase_integral(x: float) -> complex:
    """``(exp(i x) - 1) / (i x)``, accurate for small ``x``."""
    if abs(x) < 1e-12:
        return 1 + 1j * x / 2 - x * x / 6
    # exp(ix) - 1 = -2 sin^2(x/2) + i sin x, no cancellation
    num = complex(-2.0 * math.sin(x / 2) ** 2, math.sin(x))
    return num / (1j * x)


def exp(w: AlgebraElement, t: float = 1.0) -> GroupElement:
    """Group exponential of ``t W`` in closed form."""
    t = float(t)
    if w.r == 0.0:
        return GroupElement(0.0, t * w.z)
    return GroupElement(t * w.r, t * w.z * _phase_integral(t * w.r))


def expm_series(a: np.ndarray, terms: int = 20) -> np.ndarray:
    """Matrix exponential by truncated Taylor series with scaling and squaring.

    Kept free of the closed form in :func:`exp` so it can check it.
    """
    a = np.asarray(a, dtype=complex)
    size = np.linalg.norm(a, 2)
    s = max(0, math.ceil(math.log2(size))) if size > 0 else 0
    b = a / 2**s
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ b / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out
