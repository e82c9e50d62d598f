"""Uncertainty inequalities on the circle from the Euclidean motion group.

A band-limited spectral model of L2 of the circle, the motion group and its
Lie algebra, their unitary representation, and the inequalities generated by
pairs of algebra elements.
"""

from .circle import (
    CircleFunction,
    GridSamples,
    analyze,
    apply_S,
    apply_S1,
    apply_S2,
    apply_T,
    inner,
    make_family,
    quad_inner,
    synthesize,
)
from .errors import BandError, ConsistencyError, InfeasibleError, ZeroFunctionError
from .group import IDENTITY, X, Y1, Y2, AlgebraElement, GroupElement, bracket, exp, inverse, multiply
from .kernels import BACKEND
from .rep import RepConfig, act, derived, fd_generator, multiplier_coeffs
from .uncertainty import UpReport, breitenberger, rauhut_pair, up_general
from .extremal import OptProblem, OptTrace, maximize, objective, gradient

__version__ = "0.1.0"
