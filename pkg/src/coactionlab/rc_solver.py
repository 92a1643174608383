"""The reduced coaction equation and its skew-symmetric solution spaces.

For a Lie element eta with no linear terms the equation reads

    dR1(eta) + mu(eta) + dL0(eta) = -r(x1) + r(x0)          (variant V4)
    dR1(eta) + mu(eta) + dL0(eta) = -r(x1) + r(-x0)         (variant V6)

where r(x) = sum_l c_{x0^(l+1) x1}(eta) x^(l+1).  Solutions are computed one
degree at a time as the exact nullspace of a linear system written in the
Lyndon-bracketing coordinates of the degree-n free Lie algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from . import linalg
from .coactions import ihara_bracket, mu
from .free_lie import LieElem, lie_basis
from .series import (
    X0,
    X1,
    Letter,
    NcPoly,
    Word,
    all_words,
    counit,
    dL,
    dR,
    make_coeff,
    poly_from_json,
    poly_to_json,
    tau,
)


class EquationVariant(enum.Enum):
    V4 = "V4"
    V6 = "V6"

    @classmethod
    def parse(cls, s: str) -> "EquationVariant":
        try:
            return cls(s.upper())
        except ValueError:
            raise ValueError(f"unknown equation variant {s!r} (expected v4 or v6)") from None


V4 = EquationVariant.V4
V6 = EquationVariant.V6


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class RFunc:
    """r(x) = sum_k coeffs[k] x^k with k >= 1."""

    coeffs: Mapping[int, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): make_coeff(c) for k, c in self.coeffs.items() if c}
        if any(k < 1 for k in clean):
            raise ValueError("r-function exponents start at 1")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs.items():
            mono = "x" if k == 1 else f"x^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _is_r_word(w: Word) -> bool:
    return len(w) >= 2 and w[-1] == "1" and w.count("1") == 1


def r_func(eta: NcPoly) -> RFunc:
    """Collect the coefficients of the words x0^(l+1) x1."""
    return RFunc({len(w) - 1: c for w, c in eta.items() if _is_r_word(w)})


def r_as_poly(r: RFunc, letter: Letter, negate: bool = False) -> NcPoly:
    """Substitute a single letter (or its negative when ``negate``) into r."""
    ch = Letter(letter).char
    return NcPoly({ch * k: (-c if negate and k % 2 else c) for k, c in r.coeffs.items()})


def is_even(r: RFunc) -> bool:
    return all(k % 2 == 0 for k in r.coeffs)


def is_skew(eta: NcPoly) -> bool:
    return tau(eta) == -eta


def _check_hypothesis(eta: NcPoly) -> None:
    if counit(eta):
        raise PreconditionError(f"constant term must vanish, found {counit(eta)}")
    for w in ("0", "1"):
        if eta.coeff(w):
            raise PreconditionError(f"coefficient of x{w} must vanish, found {eta.coeff(w)}")


def residual(eta: NcPoly, variant: EquationVariant = V4) -> NcPoly:
    """dR1(eta) + mu(eta) + dL0(eta) + r(x1) - r(+-x0); zero iff eta solves the variant."""
    _check_hypothesis(eta)
    r = r_func(eta)
    return (
        dR(X1, eta)
        + mu(eta)
        + dL(X0, eta)
        + r_as_poly(r, X1)
        - r_as_poly(r, X0, negate=variant is V6)
    )


def twisted_residual(eta: NcPoly) -> NcPoly:
    """dR0(eta) + mu(eta) + dL1(eta) + r(x1) - r(x0), the letter-swapped equation."""
    _check_hypothesis(eta)
    r = r_func(eta)
    return dR(X0, eta) + mu(eta) + dL(X1, eta) + r_as_poly(r, X1) - r_as_poly(r, X0)


def solves(eta: NcPoly, variant: EquationVariant = V4) -> bool:
    return is_skew(eta) and not residual(eta, variant)


# ---------------------------------------------------------------------------
# solver


@dataclass(frozen=True)
class RcBasis:
    degree: int
    variant: EquationVariant
    elements: tuple[LieElem, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "variant": self.variant.value,
            "basis": [poly_to_json(e) for e in self.elements],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "RcBasis":
        return cls(
            degree=int(obj["degree"]),
            variant=EquationVariant.parse(obj["variant"]),
            elements=tuple(LieElem(poly_from_json(p)) for p in obj["basis"]),
        )


def _coordinate_column(p: NcPoly, index: Mapping[Word, int], size: int) -> list:
    col = [0] * size
    for w, c in p.items():
        col[index[w]] = c
    return col


def constraint_matrix(n: int, variant: EquationVariant) -> list[list]:
    """Rows: skew constraint tau(eta)+eta on degree-n words, then the residual on degree n-1."""
    basis = lie_basis(n)
    top = {w: i for i, w in enumerate(all_words(n))}
    low = {w: i + len(top) for i, w in enumerate(all_words(n - 1))}
    index = {**top, **low}
    size = len(index)
    cols = []
    for b in basis:
        col = _coordinate_column(tau(b) + b, index, size)
        for w, c in residual(b, variant).items():
            col[index[w]] += c
        cols.append(col)
    rows = [list(r) for r in zip(*cols)]
    return [r for r in rows if any(r)]


@lru_cache(maxsize=None)
def solve_degree(n: int, variant: EquationVariant = V4) -> RcBasis:
    """Reduced echelon basis (in Lyndon coordinates) of the degree-n skew solutions."""
    if n < 2:
        raise ValueError("solutions start in degree 2 (linear terms are excluded)")
    basis = lie_basis(n)
    null = linalg.nullspace(constraint_matrix(n, variant), len(basis))
    elements = []
    for v in null:
        acc = NcPoly()
        for t, b in zip(v, basis):
            if t:
                acc = acc + b.scale(t)
        elements.append(LieElem(acc))
    return RcBasis(n, variant, tuple(elements))


def dims_table(max_degree: int, variant: EquationVariant = V4) -> dict[int, int]:
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    return {n: solve_degree(n, variant).dimension for n in range(2, max_degree + 1)}


def word_coordinates(p: NcPoly, n: int) -> list:
    index = {w: i for i, w in enumerate(all_words(n))}
    return _coordinate_column(p, index, len(index))


def in_span(p: NcPoly, elements: Iterable[NcPoly], n: int) -> bool:
    vecs = [word_coordinates(e, n) for e in elements]
    return linalg.in_span(word_coordinates(p, n), vecs, 1 << n)


def check_closure(eta1: NcPoly, eta2: NcPoly, variant: EquationVariant = V4) -> bool:
    """Whether the Ihara bracket of two solutions is again a solution.

    For V4 the bracket must also have vanishing r-function, since it contains
    no word of the form x0^k x1.
    """
    for name, eta in (("first", eta1), ("second", eta2)):
        if not is_skew(eta):
            raise PreconditionError(f"{name} argument is not skew-symmetric")
        if residual(eta, variant):
            raise PreconditionError(f"{name} argument does not solve the {variant.value} equation")
    b = ihara_bracket(eta1, eta2)
    if not is_skew(b) or residual(b, variant):
        return False
    return variant is not V4 or not r_func(b)
