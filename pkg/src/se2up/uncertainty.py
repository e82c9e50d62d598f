"""Uncertainty inequalities evaluated on band-limited circle functions.

Every inequality is stored as ``lhs <= rhs``. For a pair of algebra elements
this is ``|<pi([W1, W2]) f, f>| <= 2 ||pi(W1) f|| ||pi(W2) f||``, i.e. the
usual form with both sides doubled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .circle import CircleFunction, apply_S, apply_S1, apply_S2, apply_T, inner
from .errors import ConsistencyError, ZeroFunctionError
from .group import BASIS, X, Y1, Y2, AlgebraElement, bracket
from .rep import DEFAULT, RepConfig, derived

__all__ = [
    "UpReport",
    "BreitenbergerChain",
    "up_general",
    "rauhut_pair",
    "breitenberger",
    "breitenberger_chain",
    "basis_pairs",
    "all_reports",
]

EPS = 1e-300
IDENTITY_RTOL = 1e-13


@dataclass(frozen=True)
class UpReport:
    label: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def relative_slack(self) -> float:
        return self.slack / max(self.rhs, EPS)

    @property
    def degenerate(self) -> bool:
        """Both sides vanish, so the inequality holds with trivial equality."""
        return self.lhs <= EPS and self.rhs <= EPS

    def holds(self, tol: float = 1e-12) -> bool:
        return self.slack >= -tol * max(1.0, self.rhs)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "relative_slack": self.relative_slack,
            "degenerate": self.degenerate,
        }

    @classmethod
    def from_json(cls, data: dict) -> UpReport:
        return cls(str(data["label"]), float(data["lhs"]), float(data["rhs"]))


def _require_nonzero(f: CircleFunction) -> float:
    nf = f.norm()
    if nf == 0:
        raise ZeroFunctionError("uncertainty inequalities need a non-zero function")
    return nf


def _check_same(a: float, b: float, scale: float, what: str) -> None:
    if abs(a - b) > IDENTITY_RTOL * max(1.0, scale):
        raise ConsistencyError(f"{what}: {a!r} != {b!r}")


def up_general(
    f: CircleFunction,
    w1: AlgebraElement,
    w2: AlgebraElement,
    cfg: RepConfig = DEFAULT,
    label: str | None = None,
) -> UpReport:
    _require_nonzero(f)
    commutator = derived(bracket(w1, w2), f, cfg)
    lhs = abs(inner(commutator, f))
    rhs = 2.0 * derived(w1, f, cfg).norm() * derived(w2, f, cfg).norm()
    return UpReport(label or f"up[{_name(w1)},{_name(w2)}]", lhs, rhs)


def _name(w: AlgebraElement) -> str:
    for key, value in BASIS.items():
        if value == w:
            return key
    return f"({w.r:g},{w.z.real:g}{w.z.imag:+g}i)"


def rauhut_pair(f: CircleFunction, cfg: RepConfig = DEFAULT) -> tuple[UpReport, UpReport]:
    """The pair inequalities for ``(X, Y2)`` and ``(X, Y1)``.

    Their left sides are ``|<pi(Y1) f, f>|`` and ``|<pi(Y2) f, f>|``; both are
    also computed through the brackets and must agree.
    """
    nf = _require_nonzero(f)
    first = up_general(f, X, Y2, cfg, label="rauhut1")
    second = up_general(f, X, Y1, cfg, label="rauhut2")
    direct1 = abs(inner(derived(Y1, f, cfg), f))
    direct2 = abs(inner(derived(Y2, f, cfg), f))
    _check_same(direct1, first.lhs, nf * nf, "rauhut1 lhs")
    _check_same(direct2, second.lhs, nf * nf, "rauhut2 lhs")
    return UpReport("rauhut1", direct1, first.rhs), UpReport("rauhut2", direct2, second.rhs)


@dataclass(frozen=True)
class BreitenbergerChain:
    """Every link from the pair inequalities to the combined one."""

    pairing: complex  # <Sf, f>
    pairing_s1: complex  # <S1 f, f>
    pairing_s2: complex  # <S2 f, f>
    norm2: float
    norm2_T: float
    norm2_S: float
    norm2_S1: float
    norm2_S2: float
    rauhut: tuple[UpReport, UpReport]

    @property
    def lhs(self) -> float:
        return abs(self.pairing) ** 2

    @property
    def lhs_split(self) -> float:
        return self.pairing_s1.real**2 + self.pairing_s2.real**2

    @property
    def combined_lhs(self) -> float:
        return self.rauhut[0].lhs ** 2 + self.rauhut[1].lhs ** 2

    @property
    def combined_rhs(self) -> float:
        return self.rauhut[0].rhs ** 2 + self.rauhut[1].rhs ** 2

    @property
    def rhs_split(self) -> float:
        return 4.0 * self.norm2_T * (self.norm2_S1 + self.norm2_S2)

    @property
    def rhs(self) -> float:
        return 4.0 * self.norm2 * self.norm2_T


def breitenberger_chain(f: CircleFunction, cfg: RepConfig = DEFAULT) -> BreitenbergerChain:
    _require_nonzero(f)
    s1f, s2f, sf = apply_S1(f), apply_S2(f), apply_S(f)
    return BreitenbergerChain(
        pairing=inner(sf, f),
        pairing_s1=inner(s1f, f),
        pairing_s2=inner(s2f, f),
        norm2=f.norm() ** 2,
        norm2_T=apply_T(f).norm() ** 2,
        norm2_S=sf.norm() ** 2,
        norm2_S1=s1f.norm() ** 2,
        norm2_S2=s2f.norm() ** 2,
        rauhut=rauhut_pair(f, cfg),
    )


def breitenberger(f: CircleFunction, cfg: RepConfig = DEFAULT) -> UpReport:
    """``|<Sf, f>|^2 <= 4 ||f||^2 ||Tf||^2``, after checking the derivation chain."""
    chain = breitenberger_chain(f, cfg)
    scale = chain.norm2**2
    _check_same(chain.lhs, chain.lhs_split, scale, "|<Sf,f>|^2 vs <S1f,f>^2 + <S2f,f>^2")
    _check_same(chain.lhs, chain.combined_lhs, scale, "|<Sf,f>|^2 vs pair lhs")
    _check_same(chain.norm2_S1 + chain.norm2_S2, chain.norm2, chain.norm2, "||S1f||^2 + ||S2f||^2")
    _check_same(chain.combined_rhs, chain.rhs, max(chain.rhs, scale), "pair rhs vs 4||f||^2||Tf||^2")
    return UpReport("breitenberger", chain.lhs, chain.rhs)


def basis_pairs():
    """All six ordered pairs of distinct basis elements, labelled."""
    for (n1, w1), (n2, w2) in itertools.permutations(BASIS.items(), 2):
        yield f"up[{n1},{n2}]", w1, w2


def all_reports(f: CircleFunction, cfg: RepConfig = DEFAULT) -> list[UpReport]:
    """The nine reports per function: combined, both pair forms, six basis pairs."""
    reports = [breitenberger(f, cfg), *rauhut_pair(f, cfg)]
    reports.extend(up_general(f, w1, w2, cfg, label=lab) for lab, w1, w2 in basis_pairs())
    return reports
