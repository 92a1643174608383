"""Exact linear algebra over Q via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .series import make_coeff


def _integer_row(row: Sequence) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def bareiss_echelon(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Rows are first scaled to integers (row scaling does not change the row
    space).  Returns the nonzero echelon rows and their pivot columns.  Every
    division in the update step is exact.
    """
    m = [_integer_row(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    nrows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            elif prev != p:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q (pivot entries 1)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    ech, pivots = bareiss_echelon(rows, ncols)
    out: list[list] = []
    for row, c in zip(ech, pivots):
        p = row[c]
        out.append([make_coeff(Fraction(x, p)) if x else 0 for x in row])
    for k in range(len(out) - 1, -1, -1):
        c = pivots[k]
        src = out[k]
        for i in range(k):
            f = out[i][c]
            if f:
                tgt = out[i]
                for j in range(c, ncols):
                    if src[j]:
                        tgt[j] = make_coeff(tgt[j] - f * src[j])
    return out, pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(bareiss_echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {v : M v = 0} in reduced echelon form (leading entries 1).

    The vectors are ordered by their leading (first nonzero) coordinate.
    """
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(red, pivots):
            if row[f]:
                v[c] = make_coeff(-row[f])
        basis.append(v)
    return canonical_basis(basis, ncols)


def canonical_basis(vectors: Sequence[Sequence], ncols: int) -> list[list]:
    """The unique reduced echelon basis of the span of ``vectors``."""
    if not vectors:
        return []
    return rref(vectors, ncols)[0]


def same_span(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int) -> bool:
    return canonical_basis(a, ncols) == canonical_basis(b, ncols)


def in_span(v: Sequence, vectors: Sequence[Sequence], ncols: int) -> bool:
    base = rank(vectors, ncols) if vectors else 0
    return rank(list(vectors) + [v], ncols) == base
