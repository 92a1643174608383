"""Intermediate identities behind closure of the solution space under the Ihara bracket.

Each function returns ``[(label, lhs, rhs), ...]``; an identity holds when
every pair is equal.  The arguments are assumed to be skew solutions of the
V4 equation unless stated otherwise; the identities are not expected to hold
for arbitrary Lie elements.
"""

from __future__ import annotations

from .coactions import ihara_act, imu_cases, mu
from .rc_solver import r_as_poly, r_func
from .series import X0, X1, ZERO, NcPoly, bracket, conc, dL, dR, x0, x1

Identity = tuple[str, NcPoly, NcPoly]


def _r(psi: NcPoly, letter) -> NcPoly:
    return r_as_poly(r_func(psi), letter)


def _c(*factors: NcPoly) -> NcPoly:
    out = factors[0]
    for f in factors[1:]:
        out = conc(out, f)
    return out


def imu_cases_poly(psi: NcPoly, f: NcPoly) -> tuple[NcPoly, ...]:
    """:func:`coactionlab.coactions.imu_cases` extended linearly in the word argument."""
    acc = [ZERO] * 6
    for w, c in f.items():
        for k, piece in enumerate(imu_cases(psi, w)):
            acc[k] = acc[k] + piece.scale(c)
    return tuple(acc)


def twisted_action_pieces(psi: NcPoly, f: NcPoly) -> list[Identity]:
    """Edge and interior pieces of d_mu(psi, f) rewritten with r_psi.

    Needs c_{x0^n}(f) = c_{x1^n}(f) = eps(f) = 0, e.g. f a Lie element of degree >= 2.
    """
    c1, c2, c3, _, _, c6 = imu_cases_poly(psi, f)
    r1, r0 = _r(psi, X1), _r(psi, X0)
    rhs_mid = (
        -_c(r1, x1, dR(X1, f))
        + _c(dL(X1, f), x1, r1)
        - _c(r0, x0, dR(X0, f))
        + _c(dL(X0, f), x0, r0)
    )
    eq = -r1 + r0 - dL(X0, psi) - dR(X1, psi)
    rhs_right = _c(dL(X1, f), x1, eq) + _c(dL(X1, f), x1, dR(X1, psi))
    rhs_left = -_c(eq, x1, dR(X1, f)) - _c(dL(X1, psi), x1, dR(X1, f))
    return [
        ("interior pieces", c2 + c3, rhs_mid),
        ("right edge", c6, rhs_right),
        ("left edge", c1, rhs_left),
    ]


def derivation_of_mu(psi: NcPoly, f: NcPoly) -> list[Identity]:
    """d_f(mu(psi)) via the equation, and with d_f(r(x1)) = [r(x1), f]."""
    r1, r0 = _r(psi, X1), _r(psi, X0)
    lhs = ihara_act(f, mu(psi))
    substituted = ihara_act(f, -r1 + r0 - dL(X0, psi) - dR(X1, psi))
    closed = bracket(-r1, f) - ihara_act(f, dL(X0, psi) + dR(X1, psi))
    return [("equation substituted", lhs, substituted), ("closed form", lhs, closed)]


def mu_of_action(psi1: NcPoly, psi2: NcPoly) -> list[Identity]:
    """mu(d_psi2(psi1)) as seven explicit terms."""
    lhs = mu(ihara_act(psi2, psi1))
    rhs = (
        bracket(psi1, _r(psi2, X0))
        + bracket(-_r(psi1, X1), psi2)
        - ihara_act(psi2, dL(X0, psi1) + dR(X1, psi1))
        + _c(dL(X0, psi2), x1, dR(X1, psi1))
        + _c(dR(X1, psi2), x1, dR(X1, psi1))
        - _c(dL(X1, psi2), x1, dR(X1, psi1))
        - _c(dL(X1, psi1), x1, dL(X0, psi2))
    )
    return [("seven terms", lhs, rhs)]


def bracket_strips(psi1: NcPoly, psi2: NcPoly) -> list[Identity]:
    """dL0 and dR1 of the Ihara bracket by the derivation rule, and r of the bracket.

    Holds for any Lie elements without constant term.
    """
    b = ihara_act(psi2, psi1) - ihara_act(psi1, psi2) - bracket(psi1, psi2)
    l0 = (
        ihara_act(psi2, dL(X0, psi1))
        + _c(dL(X1, psi1), x1, dL(X0, psi2))
        - ihara_act(psi1, dL(X0, psi2))
        - _c(dL(X1, psi2), x1, dL(X0, psi1))
        - conc(psi1, dL(X0, psi2))
        + conc(psi2, dL(X0, psi1))
    )
    r1 = (
        conc(psi2, dR(X1, psi1))
        - _c(dR(X1, psi2), x1, dR(X1, psi1))
        + ihara_act(psi2, dR(X1, psi1))
        - conc(psi1, dR(X1, psi2))
        + _c(dR(X1, psi1), x1, dR(X1, psi2))
        - ihara_act(psi1, dR(X1, psi2))
        - conc(dR(X1, psi1), psi2)
        + conc(dR(X1, psi2), psi1)
    )
    rb = r_as_poly(r_func(b), X0)
    return [("dL0 of bracket", dL(X0, b), l0), ("dR1 of bracket", dR(X1, b), r1), ("r of bracket", rb, ZERO)]


def mu_of_commutator(psi1: NcPoly, psi2: NcPoly) -> list[Identity]:
    """mu([psi1, psi2]) by the junction rule, then with mu(psi_i) from the equation."""
    lhs = mu(bracket(psi1, psi2))
    junction = (
        _c(dL(X1, psi1), x1, dR(X1, psi2))
        + _c(dL(X0, psi1), x0, dR(X0, psi2))
        - _c(dL(X1, psi2), x1, dR(X1, psi1))
        - _c(dL(X0, psi2), x0, dR(X0, psi1))
    )
    general = bracket(mu(psi1), psi2) - bracket(mu(psi2), psi1) + junction

    def eq(psi):
        return -_r(psi, X1) + _r(psi, X0) - dL(X0, psi) - dR(X1, psi)

    substituted = bracket(eq(psi1), psi2) - bracket(eq(psi2), psi1) + junction
    return [("junction rule", lhs, general), ("equation substituted", lhs, substituted)]


def closure_residual(psi1: NcPoly, psi2: NcPoly) -> list[Identity]:
    """dR1 + mu + dL0 of the bracket, plus r(x1) - r(x0), vanishes."""
    b = ihara_act(psi2, psi1) - ihara_act(psi1, psi2) - bracket(psi1, psi2)
    r1, r0 = _r(b, X1), _r(b, X0)
    return [("closure", dR(X1, b) + mu(b) + dL(X0, b) + r1 - r0, ZERO)]
