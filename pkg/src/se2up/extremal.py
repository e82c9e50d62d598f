"""Search for near-extremal functions of the combined circle inequality.

The ratio

    rho(c) = |sum_n c_n conj(c_{n+1})|^2 / (4 sum |c_n|^2 sum n^2 |c_n|^2)

lies in [0, 1] by the inequality. :func:`maximize` runs projected gradient
ascent on the unit sphere of a fixed band ``[-N, N]``, subject to a floor on
``||Tf||`` that keeps it away from the constant function, where the ratio
degenerates to 0/0.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .circle import CircleFunction
from .errors import InfeasibleError

__all__ = [
    "OptProblem",
    "IterRecord",
    "OptTrace",
    "objective",
    "gradient",
    "maximize",
    "tent_ratio",
    "tent_boundary",
]

ARMIJO = 1e-4
MAX_HALVINGS = 40
START_ATTEMPTS = 100
ACTIVE_RTOL = 1e-10
ROUNDING_GAIN = 64 * float(np.finfo(float).eps)


@dataclass(frozen=True)
class OptProblem:
    N: int = 1
    min_T_norm: float = 0.3
    max_iters: int = 10_000
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N: band half-width must be at least 1, got {self.N}")
        if not self.min_T_norm > 0:
            raise ValueError(f"min_T_norm: must be positive, got {self.min_T_norm}")
        if self.max_iters < 0:
            raise ValueError(f"max_iters: must be non-negative, got {self.max_iters}")
        if not self.tol > 0:
            raise ValueError(f"tol: must be positive, got {self.tol}")

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "min_T_norm": self.min_T_norm,
            "max_iters": self.max_iters,
            "tol": self.tol,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> OptProblem:
        known = {"N": int, "min_T_norm": float, "max_iters": int, "tol": float, "seed": int}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ValueError(f"{unknown[0]}: unknown problem field")
        kwargs = {}
        for key, kind in known.items():
            if key in data:
                value = data[key]
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise ValueError(f"{key}: expected a number, got {value!r}")
                if kind is int and int(value) != value:
                    raise ValueError(f"{key}: expected an integer, got {value!r}")
                kwargs[key] = kind(value)
        return cls(**kwargs)


@dataclass(frozen=True)
class IterRecord:
    iteration: int
    objective: float
    grad_norm: float
    step: float
    feasible: bool
    active: bool


@dataclass
class OptTrace:
    problem: OptProblem
    records: list[IterRecord] = field(default_factory=list)
    final: CircleFunction | None = None
    final_ratio: float = float("nan")
    converged: bool = False
    stop_reason: str = ""

    def to_json(self) -> dict:
        return {
            "problem": self.problem.to_json(),
            "final": self.final.to_json() if self.final is not None else None,
            "final_ratio": self.final_ratio,
            "converged": self.converged,
            "stop_reason": self.stop_reason,
            "records": [
                {
                    "iter": r.iteration,
                    "objective": r.objective,
                    "grad_norm": r.grad_norm,
                    "step": r.step,
                    "feasible": r.feasible,
                    "active": r.active,
                }
                for r in self.records
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["iter", "objective", "grad_norm", "step"])
        for r in self.records:
            writer.writerow([r.iteration, repr(r.objective), repr(r.grad_norm), repr(r.step)])
        return buf.getvalue()


def _as_coeffs(c, n_min):
    if isinstance(c, CircleFunction):
        return c.coeffs, c.n_min
    c = np.asarray(c, dtype=complex).reshape(-1)
    if n_min is None:
        if c.size % 2 == 0:
            raise ValueError("give n_min for a band of even length")
        n_min = -(c.size // 2)
    return c, int(n_min)


def _check_floor(c, n_min, min_T_norm):
    b, cc, _ = kernels.ratio_terms(c, n_min)
    if b == 0 or cc == 0:
        raise InfeasibleError("ratio undefined: ||f|| or ||Tf|| vanishes")
    if min_T_norm is not None and math.sqrt(cc / b) < min_T_norm:
        raise InfeasibleError(
            f"||Tf||/||f|| = {math.sqrt(cc / b):.6g} is below the floor {min_T_norm}"
        )


def objective(c, n_min: int | None = None, min_T_norm: float | None = None) -> float:
    """The ratio ``rho``; ``c`` is a coefficient vector or a :class:`CircleFunction`.

    A bare vector of odd length is taken to sit on ``[-N, N]``.
    """
    c, n_min = _as_coeffs(c, n_min)
    _check_floor(c, n_min, min_T_norm)
    b, cc, p = kernels.ratio_terms(c, n_min)
    return (p.real**2 + p.imag**2) / (4.0 * b * cc)


def gradient(c, n_min: int | None = None, min_T_norm: float | None = None) -> np.ndarray:
    """Gradient of ``rho`` as ``d/dRe(c_n) + i d/dIm(c_n)``."""
    c, n_min = _as_coeffs(c, n_min)
    _check_floor(c, n_min, min_T_norm)
    return kernels.ratio_and_gradient(c, n_min)[1]


def tent_ratio(t: float) -> float:
    """Closed form of ``rho`` for coefficients ``(t, 1, t)`` on ``[-1, 1]``."""
    return 1.0 / (2.0 * (1.0 + 2.0 * t * t))


def tent_boundary(min_T_norm: float) -> float:
    """The ``t`` at which ``(t, 1, t)``, normalized, has ``||Tf|| = min_T_norm``."""
    tau = min_T_norm**2
    if not 0 < tau < 1:
        raise ValueError("boundary exists only for 0 < min_T_norm < 1")
    return math.sqrt(tau / (2.0 * (1.0 - tau)))


def _rdot(a, b) -> float:
    return float(np.vdot(a, b).real)


class _Ascent:
    def __init__(self, problem: OptProblem):
        self.N = problem.N
        self.n_min = -problem.N
        self.weights = np.arange(-problem.N, problem.N + 1, dtype=float) ** 2
        self.tau = problem.min_T_norm**2

    def spread(self, c) -> float:
        return _rdot(c, self.weights * c)

    def is_active(self, c) -> bool:
        return self.spread(c) - self.tau <= ACTIVE_RTOL * max(1.0, self.tau)

    def direction(self, c, grad):
        """Projected gradient: tangent to the sphere, and to the floor when it binds."""
        d = grad - _rdot(c, grad) * c
        active = self.is_active(c)
        if active:
            normal = self.weights * c - self.spread(c) * c
            nn = _rdot(normal, normal)
            push = _rdot(normal, d)
            if nn > 0 and push < 0:
                d = d - (push / nn) * normal
        return d, active

    def retract(self, c):
        """Map a unit vector onto the feasible set; ``None`` when impossible."""
        c = c / math.sqrt(_rdot(c, c))
        spread = self.spread(c)
        if spread >= self.tau:
            return c
        centre = self.N
        rest = c.copy()
        rest[centre] = 0
        rest_norm2 = _rdot(rest, rest)
        if spread == 0 or abs(c[centre]) == 0:
            return None
        beta2 = self.tau / spread
        alpha2 = (1.0 - beta2 * rest_norm2) / abs(c[centre]) ** 2
        if alpha2 < 0:
            return None
        out = math.sqrt(beta2) * rest
        out[centre] = math.sqrt(alpha2) * c[centre]
        return out

    def feasible(self, c) -> bool:
        return self.spread(c) >= self.tau * (1.0 - ACTIVE_RTOL)


def maximize(problem: OptProblem, callback=None) -> OptTrace:
    """Projected gradient ascent with Armijo backtracking.

    ``callback(record, coeffs)`` is called for the start and for every
    accepted iterate.
    """
    ascent = _Ascent(problem)
    rng = np.random.default_rng(problem.seed)
    for _ in range(START_ATTEMPTS):
        z = rng.standard_normal((2 * problem.N + 1, 2))
        c = z[:, 0] + 1j * z[:, 1]
        c = c / math.sqrt(_rdot(c, c))
        if ascent.feasible(c):
            break
    else:
        raise InfeasibleError(
            f"no feasible start with ||Tf|| >= {problem.min_T_norm} on band "
            f"[-{problem.N}, {problem.N}] after {START_ATTEMPTS} draws"
        )

    trace = OptTrace(problem)
    value, grad = kernels.ratio_and_gradient(c, ascent.n_min)
    d, active = ascent.direction(c, grad)
    gnorm = math.sqrt(_rdot(d, d))
    trace.records.append(IterRecord(0, value, gnorm, 0.0, True, active))
    if callback is not None:
        callback(trace.records[-1], c)

    for it in range(1, problem.max_iters + 1):
        if gnorm < problem.tol:
            trace.converged, trace.stop_reason = True, "gradient tolerance"
            break
        step = 1.0
        accepted = None
        for _ in range(MAX_HALVINGS + 1):
            cand = ascent.retract(c + step * d)
            if cand is not None and ascent.feasible(cand):
                gain = _rdot(grad, cand - c)
                new_value, new_grad = kernels.ratio_and_gradient(cand, ascent.n_min)
                if gain > 0 and new_value >= value + ARMIJO * gain:
                    accepted = cand
                    break
            step *= 0.5
        if accepted is None:
            # predicted gain below the resolution of the objective
            trace.converged = bool(gnorm * gnorm <= ROUNDING_GAIN * max(1.0, value))
            trace.stop_reason = "line search exhausted"
            break
        c, value, grad = accepted, new_value, new_grad
        d, active = ascent.direction(c, grad)
        gnorm = math.sqrt(_rdot(d, d))
        trace.records.append(IterRecord(it, value, gnorm, step, True, active))
        if callback is not None:
            callback(trace.records[-1], c)
    else:
        if gnorm < problem.tol:
            trace.converged, trace.stop_reason = True, "gradient tolerance"
        else:
            trace.stop_reason = "max_iters"

    trace.final = CircleFunction(ascent.n_min, c)
    trace.final_ratio = value
    return trace
