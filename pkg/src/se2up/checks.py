"""Numerical property suites for the group and the representation.

Each suite returns a :class:`CheckResult`; ``se2up group-check`` runs them
all and tabulates the results.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .circle import CircleFunction, random_function
from .group import (
    BASIS,
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
)
from .rep import act, derived, fd_generator

FD_STEPS = (1e-2, 1e-3, 1e-4)


@dataclass(frozen=True)
class CheckResult:
    check: str
    value: float  # measured quantity: max error, or the slope for order checks
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


def _random_group(rng, z_max: float) -> GroupElement:
    radius = z_max * rng.uniform()
    return GroupElement(rng.uniform(-np.pi, np.pi), cmath.rect(radius, rng.uniform(0, 2 * np.pi)))


def _random_algebra(rng, scale: float = 1.0) -> AlgebraElement:
    r, a, b = rng.normal(scale=scale, size=3)
    return AlgebraElement(r, complex(a, b))


def _random_circle(rng, max_half_width: int = 16, min_half_width: int = 0) -> CircleFunction:
    width = int(rng.integers(min_half_width, max_half_width + 1))
    return random_function(width, int(rng.integers(2**31)))


def _group_err(g: GroupElement, h: GroupElement) -> float:
    return max(abs(cmath.exp(1j * g.r) - cmath.exp(1j * h.r)), abs(g.z - h.z))


def _alg_err(v: AlgebraElement, w: AlgebraElement) -> float:
    return max(abs(v.r - w.r), abs(v.z - w.z))


def _result(name, err, tol):
    return CheckResult(name, float(err), float(err), float(tol))


def bracket_table() -> CheckResult:
    table = [((X, Y1), Y2), ((X, Y2), -Y1), ((Y1, Y2), AlgebraElement(0.0, 0j))]
    err = max(_alg_err(bracket(a, b), want) for (a, b), want in table)
    return _result("bracket_table", err, 0.0)


def exp_closed_forms() -> CheckResult:
    err = 0.0
    for t in (-2.5, -1.0, 0.0, 0.3, 1.0, np.pi):
        displays = {
            "X": np.array([[cmath.exp(1j * t), 0], [0, 1]]),
            "Y1": np.array([[1, t], [0, 1]]),
            "Y2": np.array([[1, 1j * t], [0, 1]]),
        }
        for name, want in displays.items():
            err = max(err, float(np.abs(exp(BASIS[name], t).embed() - want).max()))
    return _result("exp_closed_forms", err, 0.0)


def exp_series(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        w = _random_algebra(rng)
        t = rng.uniform(-3, 3)
        want = expm_series(t * w.embed())
        err = max(err, float(np.abs(exp(w, t).embed() - want).max()))
    return _result("exp_series", err, 1e-12)


def multiply_embedding(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        g, h = _random_group(rng, 3), _random_group(rng, 3)
        err = max(err, float(np.abs(multiply(g, h).embed() - g.embed() @ h.embed()).max()))
    return _result("multiply_embedding", err, 1e-14)


def inverse_identity(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        g = _random_group(rng, 3)
        err = max(err, _group_err(multiply(g, inverse(g)), GroupElement(0.0)))
        err = max(err, float(np.abs(inverse(g).embed() - np.linalg.inv(g.embed())).max()))
    return _result("inverse", err, 1e-14)


def associativity(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        a, b, c = (_random_group(rng, 3) for _ in range(3))
        err = max(err, _group_err(multiply(multiply(a, b), c), multiply(a, multiply(b, c))))
    return _result("associativity", err, 1e-13)


def jacobi(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        u, v, w = (_random_algebra(rng) for _ in range(3))
        total = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))
        err = max(err, _alg_err(total, AlgebraElement(0.0)))
    return _result("jacobi", err, 1e-13)


def one_parameter(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        w = _random_algebra(rng)
        s, t = rng.uniform(-3, 3, size=2)
        err = max(err, _group_err(multiply(exp(w, s), exp(w, t)), exp(w, s + t)))
    return _result("one_parameter", err, 1e-13)


def bracket_embedding(rng, trials: int = 100) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        v, w = _random_algebra(rng), _random_algebra(rng)
        a, b = v.embed(), w.embed()
        err = max(err, float(np.abs(bracket(v, w).embed() - (a @ b - b @ a)).max()))
    return _result("bracket_embedding", err, 1e-14)


def unitarity(rng, trials: int = 50, z_max: float = 4.0) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        g, f = _random_group(rng, z_max), _random_circle(rng)
        err = max(err, abs(act(g, f).norm() - f.norm()) / f.norm())
    return _result("unitarity", err, 1e-10)


def homomorphism(rng, trials: int = 50, z_max: float = 3.0) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        g, h, f = _random_group(rng, z_max), _random_group(rng, z_max), _random_circle(rng)
        defect = act(g, act(h, f)) - act(multiply(g, h), f)
        err = max(err, defect.norm() / f.norm())
    return _result("homomorphism", err, 1e-9)


def derived_commutator(rng, trials: int = 50) -> CheckResult:
    err = 0.0
    for _ in range(trials):
        f = _random_circle(rng)
        lhs1 = derived(X, derived(Y1, f)) - derived(Y1, derived(X, f))
        lhs2 = derived(X, derived(Y2, f)) - derived(Y2, derived(X, f))
        err = max(err, lhs1.max_abs_diff(derived(Y2, f)), lhs2.max_abs_diff(-derived(Y1, f)))
    return _result("derived_commutator", err, 1e-12)


def fd_errors(w: AlgebraElement, f: CircleFunction, steps=FD_STEPS) -> np.ndarray:
    exact = derived(w, f)
    return np.array([(fd_generator(w, f, t) - exact).norm() for t in steps])


def convergence_order(steps, errors) -> float:
    """Least-squares slope of ``log(error)`` against ``log(step)``."""
    return float(np.polyfit(np.log(steps), np.log(errors), 1)[0])


def fd_order(name: str, rng) -> CheckResult:
    f = _random_circle(rng, max_half_width=4, min_half_width=1)
    slope = convergence_order(FD_STEPS, fd_errors(BASIS[name], f))
    return CheckResult(f"fd_order_{name}", slope, abs(slope - 1.0), 0.1)


def run_all(seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    return [
        bracket_table(),
        exp_closed_forms(),
        exp_series(rng),
        multiply_embedding(rng),
        inverse_identity(rng),
        associativity(rng),
        jacobi(rng),
        one_parameter(rng),
        bracket_embedding(rng),
        unitarity(rng),
        homomorphism(rng),
        derived_commutator(rng),
        *(fd_order(name, rng) for name in ("X", "Y1", "Y2")),
    ]
