"""Exact computations with the Ihara action, the Goncharov-Brown coaction and
the reduced (Turaev) coaction on noncommutative polynomials in x0, x1."""

from .series import (
    ONE,
    ZERO,
    Letter,
    NcPoly,
    Tensor2,
    X0,
    X1,
    antipode,
    coeff,
    conc,
    counit,
    dL,
    dR,
    delta_dec,
    delta_sh,
    grade,
    shuffle,
    tau,
    x0,
    x1,
)
from .parse import ParseError, parse_poly

__version__ = "0.1.0"
