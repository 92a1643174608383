"""Ihara action, Goncharov-Brown coaction and the reduced (Turaev) coaction.

Conventions
-----------
* ``ihara_act(psi, p)`` is the conc-derivation with x0 -> 0, x1 -> [x1, psi].
* ``gb_coaction(w)`` sums ``I(e_p; e_{p+1}..e_q; e_{q+1}) (x) e_1..e_p e_{q+1}..e_n``
  over windows ``0 <= p < q <= n`` with virtual boundary letters
  ``e_0 = e_{n+1} = x0``.  This is the choice under which the coaction pairs
  exactly with the Ihara action; see :func:`gb_coaction`.
* Left tensor factors are kept unprojected; equalities in L (x) A-hat go
  through :func:`coactionlab.free_lie.tensor_vanishes_in_L`.
"""

from __future__ import annotations

import enum
from typing import Union

from .free_lie import LieElem, tensor_vanishes_in_L
from .series import (
    ZERO,
    X0,
    X1,
    Letter,
    NcPoly,
    Tensor2,
    Word,
    _add_into,
    _normalized,
    antipode,
    append,
    bracket,
    conc,
    counit,
    dL,
    dR,
    linear_map,
    prepend,
    x1,
)


class Edge(enum.Enum):
    """Window boundary that falls off the end of the word."""

    START = "start"
    END = "end"

    def __str__(self) -> str:
        return self.value


START = Edge.START
END = Edge.END
Boundary = Union[Letter, Edge]

LEFT_BOUNDARY = X0
RIGHT_BOUNDARY = X0


# ---------------------------------------------------------------------------
# reduced coaction


def _mu_word(w: Word):
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            yield w[: i + 1] + w[i + 2 :], 1


def mu(p: NcPoly) -> NcPoly:
    """Contract each adjacent equal pair (x_i x_i -> x_i); unequal pairs give 0."""
    return linear_map(p, _mu_word)


def _mu_dual_word(w: Word):
    for i in range(len(w)):
        yield w[: i + 1] + w[i:], 1


def mu_dual(p: NcPoly) -> NcPoly:
    """Adjoint of mu under the coefficient pairing: double each letter in turn."""
    return linear_map(p, _mu_dual_word)


# ---------------------------------------------------------------------------
# Ihara action


def _insert_everywhere(p: NcPoly, letter: str, g: NcPoly) -> NcPoly:
    """Replace each occurrence of ``letter`` in each word of p by g, one at a time."""
    out: dict[Word, object] = {}
    gt = list(g.items())
    for w, c in p.items():
        for i, ch in enumerate(w):
            if ch != letter:
                continue
            pre, post = w[:i], w[i + 1 :]
            for v, d in gt:
                _add_into(out, pre + v + post, c * d)
    return NcPoly._wrap(_normalized(out))


def ihara_act(psi: NcPoly, p: NcPoly) -> NcPoly:
    """d_psi(p) for the derivation d_psi(x0) = 0, d_psi(x1) = [x1, psi]."""
    return _insert_everywhere(p, "1", bracket(x1, psi))


def ihara_bracket(psi1: NcPoly, psi2: NcPoly) -> LieElem:
    """{psi1, psi2} = d_psi2(psi1) - d_psi1(psi2) - [psi1, psi2]."""
    b = ihara_act(psi2, psi1) - ihara_act(psi1, psi2) - bracket(psi1, psi2)
    return LieElem(b)


def d_mu(psi: NcPoly, p: NcPoly) -> NcPoly:
    """mu(d_psi(p)) - d_psi(mu(p))."""
    return mu(ihara_act(psi, p)) - ihara_act(psi, mu(p))


# ---------------------------------------------------------------------------
# window values


def I_case(ep: Letter, f: NcPoly, eq: Letter) -> NcPoly:
    """S(f) for (x0, x1), f for (x1, x0), eps(f) when the letters agree."""
    ep, eq = Letter(ep), Letter(eq)
    if ep == eq:
        return NcPoly.scalar(counit(f))
    return antipode(f) if ep is X0 else f


def imu_case(ep: Boundary, f: NcPoly, eq: Boundary) -> NcPoly:
    """The element inserted by the mu-twisted Ihara action at a window.

    ``ep = START`` is the left edge (words beginning with x1), ``eq = END``
    the right edge (words ending in x1).
    """
    if (ep is START and eq is not X1) or (eq is END and ep is not X1):
        # an edge behaves like a virtual x0, so an x0 beside it is an equal-letter window
        return ZERO
    if ep is START:
        s = antipode(f)
        return mu(s) + dL(X1, s)
    if eq is END:
        return dR(X1, f) + mu(f)
    ep, eq = Letter(ep), Letter(eq)
    if ep == eq:
        return NcPoly.scalar(counit(f))
    if ep is X0:
        s = antipode(f)
        return dR(X0, s) + mu(s) + dL(X1, s)
    return dR(X1, f) + mu(f) + dL(X0, f)


def imu_case_dual(ep: Boundary, a: NcPoly, eq: Boundary) -> NcPoly:
    """Adjoint of ``imu_case`` in its f argument: <psi, imu_case_dual(a)> = <imu_case(psi), a>.

    This is the left tensor factor contributed by a window with middle ``a``
    to the commutator coaction.  Windows at an edge only contribute next to
    an x1 (the edges behave like a virtual x0).
    """
    if ep is START and eq is END:
        return ZERO
    if ep is START:
        return antipode(mu_dual(a) + append(a, X1)) if eq is X1 else ZERO
    if eq is END:
        return prepend(X1, a) + mu_dual(a) if ep is X1 else ZERO
    ep, eq = Letter(ep), Letter(eq)
    if ep == eq:
        return ZERO
    if ep is X0:
        return antipode(prepend(X0, a) + mu_dual(a) + append(a, X1))
    return prepend(X1, a) + mu_dual(a) + append(a, X0)


# ---------------------------------------------------------------------------
# coactions


def _window_letters(w: Word, p: int, q: int, left: Letter, right: Letter) -> tuple[Letter, Letter]:
    n = len(w)
    ep = Letter(int(w[p - 1])) if p > 0 else left
    eq = Letter(int(w[q])) if q < n else right
    return ep, eq


def gb_coaction(w: Word, left: Letter = LEFT_BOUNDARY, right: Letter = RIGHT_BOUNDARY) -> Tensor2:
    """D(w) = sum_{0<=p<q<=n} I(e_p; e_{p+1}..e_q; e_{q+1}) (x) e_1..e_p e_{q+1}..e_n.

    ``left``/``right`` are the virtual letters e_0 and e_{n+1}.  With the
    defaults (both x0) D is exactly dual to :func:`ihara_act`; e_0 = x1 would
    pair the left edge with words starting in x0, which d_psi never touches.
    """
    out = Tensor2()
    n = len(w)
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            ep, eq = _window_letters(w, p, q, left, right)
            val = I_case(ep, NcPoly.word(w[p:q]), eq)
            if val:
                out.add_term(val, w[:p] + w[q:])
    return out


def gb_coaction_poly(p: NcPoly, left: Letter = LEFT_BOUNDARY, right: Letter = RIGHT_BOUNDARY) -> Tensor2:
    out = Tensor2()
    for w, c in p.items():
        for (u, v), d in gb_coaction(w, left, right).items():
            _add_into(out._terms, (u, v), c * d)
    return Tensor2(dict(out.items()))


def ihara_cases(psi: NcPoly, w: Word) -> tuple[NcPoly, ...]:
    """The six pieces of d_psi(w), by where the inserted factor lands.

    (1) S(psi) x1 dR1(w); (2) x0 S(psi) x1 at each x0x1; (3) x1 psi x0 at each
    x1x0; (4), (5) nothing at x0x0 / x1x1; (6) dL1(w) x1 psi.
    """
    wp = NcPoly.word(w)
    s = antipode(psi)
    c1 = conc(conc(s, x1), dR(X1, wp))
    c6 = conc(conc(dL(X1, wp), x1), psi)
    return (
        c1,
        _pair_insert(w, "01", I_case(X0, psi, X1)),
        _pair_insert(w, "10", I_case(X1, psi, X0)),
        _pair_insert(w, "00", I_case(X0, psi, X0)),
        _pair_insert(w, "11", I_case(X1, psi, X1)),
        c6,
    )


def _pair_insert(w: Word, pair: str, g: NcPoly) -> NcPoly:
    """Sum over adjacent ``pair`` positions of w of: prefix, pair[0], g, pair[1], suffix."""
    out: dict[Word, object] = {}
    gt = list(g.items())
    for i in range(len(w) - 1):
        if w[i : i + 2] != pair:
            continue
        pre, post = w[: i + 1], w[i + 1 :]
        for v, d in gt:
            _add_into(out, pre + v + post, d)
    return NcPoly._wrap(_normalized(out))


def imu_cases(psi: NcPoly, w: Word) -> tuple[NcPoly, ...]:
    """The six pieces of d_mu(psi, w), built from :func:`imu_case`.

    Items (4) and (5) sit at x0x0 and x1x1 pairs and insert eps(psi) = 0.
    """
    wp = NcPoly.word(w)
    c1 = conc(conc(imu_case(START, psi, X1), x1), dR(X1, wp))
    c6 = conc(conc(dL(X1, wp), x1), imu_case(X1, psi, END))
    return (
        c1,
        _pair_insert(w, "01", imu_case(X0, psi, X1)),
        _pair_insert(w, "10", imu_case(X1, psi, X0)),
        _pair_insert(w, "00", imu_case(X0, psi, X0)),
        _pair_insert(w, "11", imu_case(X1, psi, X1)),
        c6,
    )


def _right_mu_dual(t: Tensor2) -> Tensor2:
    return t.map_right(mu_dual)


def D_mu_lhs(w: Word) -> Tensor2:
    """D(mu_dual(w)) - (1 (x) mu_dual)(D(w))."""
    return gb_coaction_poly(mu_dual(NcPoly.word(w))) - _right_mu_dual(gb_coaction(w))


def D_mu_rhs(w: Word) -> Tensor2:
    """Window sum of ``imu_case_dual(e_p; e_{p+1}..e_q; e_{q+1}) (x) outside``.

    Windows run over 0 <= p <= q <= n: the empty windows (p = q) carry the
    degree-one left factors that pair with psi = x0, x1.
    """
    out = Tensor2()
    n = len(w)
    for p in range(n + 1):
        for q in range(p, n + 1):
            ep = Letter(int(w[p - 1])) if p > 0 else START
            eq = Letter(int(w[q])) if q < n else END
            val = imu_case_dual(ep, NcPoly.word(w[p:q]), eq)
            if val:
                out.add_term(val, w[:p] + w[q:])
    return Tensor2(dict(out.items()))


def commutator_identity_holds(w: Word) -> bool:
    """D_mu_lhs(w) and D_mu_rhs(w) agree in L (x) A-hat."""
    return tensor_vanishes_in_L(D_mu_lhs(w) - D_mu_rhs(w))
