"""Brute-force solver for the reduced coaction equation in raw word coordinates.

Independent of :mod:`coactionlab.rc_solver`: the unknowns are all 2^n word
coefficients, primitivity is imposed as ``delta_sh(eta) = eta (x) 1 + 1 (x) eta``
term by term, and the nullspace comes from sympy's DomainMatrix rather than
the package's own elimination.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .series import NcPoly, _delta_sh_word, all_words, make_coeff
from .rc_solver import EquationVariant, V6


def _residual_rows(n: int, variant: EquationVariant) -> dict:
    """Equation rows keyed by output word, as sparse {column: coeff}."""
    words = all_words(n)
    rows: dict = {}

    def add(key, col, c):
        row = rows.setdefault(key, {})
        row[col] = row.get(col, 0) + c

    for j, w in enumerate(words):
        # skew: coefficient of w in tau(eta) + eta
        add(("skew", w), j, 1)
        add(("skew", w.translate(str.maketrans("01", "10"))), j, 1)
        # dR1
        if w[0] == "1":
            add(("res", w[1:]), j, 1)
        # dL0
        if w[-1] == "0":
            add(("res", w[:-1]), j, 1)
        # mu
        for i in range(n - 1):
            if w[i] == w[i + 1]:
                add(("res", w[: i + 1] + w[i + 2 :]), j, 1)
        # r(x1) - r(+-x0), read off c_{x0^(n-1) x1}
        if w == "0" * (n - 1) + "1":
            add(("res", "1" * (n - 1)), j, 1)
            sign = -1 if (variant is V6 and (n - 1) % 2) else 1
            add(("res", "0" * (n - 1)), j, -sign)
    return rows


def _primitivity_rows(n: int) -> dict:
    words = all_words(n)
    rows: dict = {}
    for j, w in enumerate(words):
        for (u, v), m in _delta_sh_word(w):
            if u and v:
                row = rows.setdefault(("prim", u, v), {})
                row[j] = row.get(j, 0) + m
    return rows


def brute_force_solutions(n: int, variant: EquationVariant) -> list[NcPoly]:
    """Basis of the skew, primitive, homogeneous degree-n solutions."""
    words = all_words(n)
    ncols = len(words)
    rows = {**_residual_rows(n, variant), **_primitivity_rows(n)}
    dense = []
    for row in rows.values():
        r = [QQ(0)] * ncols
        nz = False
        for j, c in row.items():
            if c:
                r[j] = QQ(c)
                nz = True
        if nz:
            dense.append(r)
    m = DomainMatrix(dense, (len(dense), ncols), QQ)
    null = m.nullspace().to_Matrix()
    out = []
    for k in range(null.rows):
        out.append(
            NcPoly(
                {
                    words[j]: make_coeff(Fraction(int(x.p), int(x.q)))
                    for j, x in enumerate(null.row(k))
                    if x != 0
                }
            )
        )
    return out
