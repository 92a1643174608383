"""Free Lie algebra on x0, x1: Lyndon basis, primitivity, and the quotient L.

L = ker(eps) / (ker eps)^2 for the shuffle product.  Equality in L is decided
by membership in the span of shuffle-decomposables, using the triangular
basis { l1 sh l2 sh ... sh lk : k >= 2, l1 >= ... >= lk Lyndon }: each such
product has the concatenation l1 l2 ... lk as its lexicographically largest
word, so every non-Lyndon word leads exactly one basis element.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .series import (
    ONE,
    ZERO,
    NcPoly,
    Tensor2,
    Word,
    all_words,
    bracket,
    counit,
    delta_sh,
    make_coeff,
    shuffle,
)

# Eager primitivity checks on LieElem construction (tests switch this on).
VALIDATE = os.environ.get("COACTIONLAB_VALIDATE", "") not in ("", "0")


def is_lyndon(w: Word) -> bool:
    """Strictly smaller than each proper rotation."""
    if not w:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_factorization(w: Word) -> list[Word]:
    """Chen-Fox-Lyndon factorization into non-increasing Lyndon words (Duval)."""
    out = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i : i + j - k])
            i += j - k
    return out


@lru_cache(maxsize=None)
def _lyndon_words(n: int) -> tuple[Word, ...]:
    if n < 1:
        raise ValueError("Lyndon words have degree >= 1")
    # Duval's generator, emits Lyndon words of length <= n in lex order
    out = []
    w = [0]
    while w:
        if len(w) == n:
            out.append("".join(map(str, w)))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] += 1
    return tuple(out)


def lyndon_words(n: int) -> list[Word]:
    """All Lyndon words of length n, lexicographically ordered."""
    return list(_lyndon_words(n))


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_number(n: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on two letters."""
    return sum(mobius(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """(u, v) with v the longest proper Lyndon suffix of the Lyndon word w."""
    if len(w) < 2:
        raise ValueError("standard factorization needs a Lyndon word of length >= 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable for Lyndon input")


class LieElem(NcPoly):
    """An NcPoly known to be primitive for the shuffle coproduct.

    The primitivity check runs at construction only when ``validate`` is true
    (default: the module-level ``VALIDATE`` flag).
    """

    __slots__ = ()

    def __init__(self, poly: NcPoly, validate: bool | None = None):
        if validate is None:
            validate = VALIDATE
        if validate and not is_primitive(poly):
            raise ValueError(f"not a Lie element: {poly}")
        self._terms = dict(poly._terms)
        self._hash = None

    @property
    def poly(self) -> NcPoly:
        return NcPoly._wrap(self._terms)

    def __repr__(self) -> str:
        return f"LieElem({str(self)!r})"


@lru_cache(maxsize=None)
def _bracketing(w: Word) -> NcPoly:
    if len(w) == 1:
        return NcPoly.word(w)
    u, v = standard_factorization(w)
    return bracket(_bracketing(u), _bracketing(v))


def lyndon_bracketing(w: Word) -> LieElem:
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    return LieElem(_bracketing(w), validate=False)


def lie_basis(n: int) -> list[LieElem]:
    return [lyndon_bracketing(w) for w in _lyndon_words(n)]


def is_primitive(p: NcPoly) -> bool:
    """True iff delta_sh(p) = p (x) 1 + 1 (x) p."""
    return delta_sh(p) == Tensor2.from_polys(p, ONE) + Tensor2.from_polys(ONE, p)


def pair(psi: NcPoly, p: NcPoly) -> int | Fraction:
    """Coefficient pairing sum_w c_w(psi) c_w(p)."""
    if len(psi) > len(p):
        psi, p = p, psi
    return make_coeff(sum(c * p.coeff(w) for w, c in psi.items()))


# ---------------------------------------------------------------------------
# Indecomposables


@lru_cache(maxsize=None)
def decomposable_basis(n: int) -> dict[Word, NcPoly]:
    """Triangular basis of the degree-n shuffle-decomposables, keyed by leading word.

    Each element is normalized to leading coefficient 1.
    """
    basis: dict[Word, NcPoly] = {}
    for w in all_words(n):
        factors = lyndon_factorization(w)
        if len(factors) < 2:
            continue
        prod = reduce(shuffle, (NcPoly.word(f) for f in factors))
        lead = max(prod.terms)
        if lead != w:
            raise AssertionError(f"leading word of shuffle product for {w} is {lead}")
        basis[w] = prod.scale(Fraction(1, prod.coeff(w)))
    return basis


def reduce_indecomposable(p: NcPoly) -> NcPoly:
    """Remainder of p modulo shuffle-decomposables (supported on Lyndon words).

    Works degree by degree; the constant term is kept.
    """
    terms = {w: c for w, c in p.items()}
    done: dict[Word, object] = {}
    while terms:
        w = max(terms, key=lambda x: (len(x), x))
        c = terms.pop(w)
        if len(w) == 0 or is_lyndon(w):
            done[w] = c
            continue
        for v, d in decomposable_basis(len(w))[w].items():
            if v == w:
                continue
            nv = terms.get(v, 0) - c * d
            if nv:
                terms[v] = nv
            else:
                terms.pop(v, None)
    return NcPoly(done)


def is_decomposable(p: NcPoly) -> bool:
    """True iff p lies in (ker eps)^2, the span of shuffles u sh v with |u|,|v| >= 1."""
    return not reduce_indecomposable(p)


@dataclass(frozen=True)
class IndecClass:
    """The class [representative] in L; ``degree`` is -1 for the zero class."""

    representative: NcPoly
    degree: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndecClass):
            return NotImplemented
        return indec_eq(self, other)

    def __hash__(self) -> int:
        return hash(reduce_indecomposable(self.representative))


def project_L(p: NcPoly) -> IndecClass:
    if not p:
        return IndecClass(ZERO, -1)
    if not p.is_homogeneous():
        raise ValueError("project_L needs a homogeneous polynomial; split it with grade() first")
    if counit(p):
        raise ValueError("project_L needs counit 0 (the constant term lies outside ker eps)")
    return IndecClass(p, p.degree)


def indec_eq(a: IndecClass, b: IndecClass) -> bool:
    if a.degree >= 0 and b.degree >= 0 and a.degree != b.degree:
        # distinct graded pieces: equal only if both vanish in L
        return is_decomposable(a.representative) and is_decomposable(b.representative)
    return is_decomposable(a.representative - b.representative)


def tensor_vanishes_in_L(t: Tensor2) -> bool:
    """Whether t is zero in L (x) A-hat: every right word's left factor is decomposable."""
    return all(is_decomposable(left) for left in t.by_right().values())


def lie_annihilates(p: NcPoly) -> bool:
    """Dual test: p pairs to zero with every Lyndon bracketing of each degree."""
    for n in p.degrees():
        if n == 0:
            if p.coeff(""):
                return False
            continue
        part = NcPoly({w: c for w, c in p.items() if len(w) == n})
        if any(pair(b, part) for b in lie_basis(n)):
            return False
    return True

