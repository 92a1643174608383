"""Noncommutative polynomials in two letters with exact rational coefficients.

Words are stored as strings over ``"0"``/``"1"`` (``"0"`` is x0, ``"1"`` is
x1), which keeps concatenation, slicing and hashing cheap.  Coefficients are
``int`` whenever they are integral and :class:`fractions.Fraction` otherwise;
both compare and hash consistently, so term maps stay canonical.

Power series are modelled by their polynomial truncations: every operator in
this package is graded (or shifts degree by a fixed amount), so working degree
by degree loses nothing.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping, Union

Word = str
Coeff = Union[int, Fraction]


class Letter(enum.IntEnum):
    X0 = 0
    X1 = 1

    @property
    def char(self) -> str:
        return "01"[self]

    def __str__(self) -> str:
        return "x0" if self is Letter.X0 else "x1"


X0 = Letter.X0
X1 = Letter.X1

_SWAP = str.maketrans("01", "10")


def make_coeff(c) -> Coeff:
    """Normalize a rational scalar to ``int`` or a reduced ``Fraction``."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return make_coeff(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return make_coeff(Fraction(c))
    raise TypeError(f"not an exact rational coefficient: {c!r}")


def word_key(w: Word) -> tuple[int, str]:
    """Canonical order on words: degree first, then lexicographic, x0 < x1."""
    return (len(w), w)


def word_str(w: Word) -> str:
    if not w:
        return "1"
    return "*".join("x" + ch for ch in w)


def _coeff_str(c: Coeff) -> str:
    return str(c)


def _add_into(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _normalized(d: dict) -> dict:
    return {k: make_coeff(v) for k, v in d.items() if v}


class NcPoly:
    """A finite rational linear combination of words.

    Immutable.  ``p * q`` is concatenation, ``c * p`` scales, ``p @ q`` is the
    commutator ``pq - qp``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean: dict[Word, Coeff] = {}
        if terms:
            for w, c in terms.items():
                if any(ch not in "01" for ch in w):
                    raise ValueError(f"word {w!r} is not over the alphabet {{0, 1}}")
                c = make_coeff(c)
                if c:
                    clean[w] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "NcPoly":
        # caller guarantees: valid words, normalized nonzero coefficients
        p = object.__new__(NcPoly)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def word(cls, w: Word, c=1) -> "NcPoly":
        return cls({w: c})

    @classmethod
    def scalar(cls, c) -> "NcPoly":
        return cls({"": c})

    @property
    def terms(self) -> Mapping[Word, Coeff]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Word, Coeff]]:
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def __iter__(self) -> Iterator[tuple[Word, Coeff]]:
        return iter(self.sorted_items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: Word) -> Coeff:
        return self._terms.get(w, 0)

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    @property
    def degree(self) -> int:
        """Maximal word length (``-1`` for the zero polynomial)."""
        return max((len(w) for w in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({"": other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "NcPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            _add_into(out, w, c)
        return NcPoly._wrap(_normalized(out))

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly._wrap({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NcPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NcPoly":
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = make_coeff(c)
        if not c:
            return ZERO
        return NcPoly._wrap({w: make_coeff(v * c) for w, v in self._terms.items()})

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            return conc(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "NcPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other: "NcPoly") -> "NcPoly":
        return bracket(self, other)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"NcPoly({format_poly(self)!r})"


def _as_poly(x) -> NcPoly | None:
    if isinstance(x, NcPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return NcPoly.scalar(x)
    return None


ZERO = NcPoly()
ONE = NcPoly.word("")
x0 = NcPoly.word("0")
x1 = NcPoly.word("1")


def format_poly(p: NcPoly) -> str:
    """Canonical text form, re-parseable by :func:`coactionlab.parse.parse_poly`."""
    items = p.sorted_items()
    if not items:
        return "0"
    parts = []
    for i, (w, c) in enumerate(items):
        neg = c < 0
        a = -c if neg else c
        if not w:
            body = _coeff_str(a)
        elif a == 1:
            body = word_str(w)
        else:
            body = f"{_coeff_str(a)}*{word_str(w)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def linear_map(p: NcPoly, f: Callable[[Word], Iterable[tuple[Word, Coeff]]]) -> NcPoly:
    """Extend a word-level map (word -> iterable of (word, coeff)) linearly."""
    out: dict[Word, Coeff] = {}
    for w, c in p._terms.items():
        for v, d in f(w):
            _add_into(out, v, c * d)
    return NcPoly._wrap(_normalized(out))


def conc(p: NcPoly, q: NcPoly) -> NcPoly:
    out: dict[Word, Coeff] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            _add_into(out, u + v, a * b)
    return NcPoly._wrap(_normalized(out))


def bracket(p: NcPoly, q: NcPoly) -> NcPoly:
    """Commutator ``pq - qp`` for concatenation."""
    return conc(p, q) - conc(q, p)


@lru_cache(maxsize=1 << 16)
def shuffle_words(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    """All interleavings of u and v with multiplicity."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[Word, int] = {}
    a, b = u[0], v[0]
    for w, c in shuffle_words(u[1:], v):
        out[a + w] = out.get(a + w, 0) + c
    for w, c in shuffle_words(u, v[1:]):
        out[b + w] = out.get(b + w, 0) + c
    return tuple(out.items())


def shuffle(p: NcPoly, q: NcPoly) -> NcPoly:
    out: dict[Word, Coeff] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            ab = a * b
            for w, c in shuffle_words(u, v):
                _add_into(out, w, ab * c)
    return NcPoly._wrap(_normalized(out))


def counit(p: NcPoly) -> Coeff:
    return p.coeff("")


def coeff(p: NcPoly, w: Word) -> Coeff:
    return p.coeff(w)


def grade(p: NcPoly, n: int) -> NcPoly:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return NcPoly._wrap({w: c for w, c in p._terms.items() if len(w) == n})


def antipode(p: NcPoly) -> NcPoly:
    """S(w) = (-1)^|w| reverse(w), the antipode of (conc, shuffle coproduct)."""
    return NcPoly._wrap({w[::-1]: (-c if len(w) % 2 else c) for w, c in p._terms.items()})


def tau(p: NcPoly) -> NcPoly:
    """Swap x0 and x1 letter-wise."""
    return NcPoly._wrap({w.translate(_SWAP): c for w, c in p._terms.items()})


def _letter_char(i) -> str:
    return Letter(i).char


def dR(i: Letter, p: NcPoly) -> NcPoly:
    """Strip a leading letter i: x_i u -> u, other words -> 0."""
    ch = _letter_char(i)
    return NcPoly._wrap({w[1:]: c for w, c in p._terms.items() if w[:1] == ch})


def dL(i: Letter, p: NcPoly) -> NcPoly:
    """Strip a trailing letter i: u x_i -> u, other words -> 0."""
    ch = _letter_char(i)
    return NcPoly._wrap({w[:-1]: c for w, c in p._terms.items() if w[-1:] == ch})


def prepend(i: Letter, p: NcPoly) -> NcPoly:
    ch = _letter_char(i)
    return NcPoly._wrap({ch + w: c for w, c in p._terms.items()})


def append(p: NcPoly, i: Letter) -> NcPoly:
    ch = _letter_char(i)
    return NcPoly._wrap({w + ch: c for w, c in p._terms.items()})


def letter_power(i: Letter, k: int) -> NcPoly:
    return NcPoly.word(_letter_char(i) * k)


def all_words(n: int) -> list[Word]:
    """All 2^n words of length n in lexicographic order."""
    if n == 0:
        return [""]
    return [format(k, f"0{n}b") for k in range(1 << n)]


def words_up_to(n: int) -> list[Word]:
    return [w for d in range(n + 1) for w in all_words(d)]


# ---------------------------------------------------------------------------
# Tensor2


class Tensor2:
    """A finite rational linear combination of word pairs ``u (x) v``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[Word, Word], object] | None = None):
        clean = {}
        if terms:
            for (u, v), c in terms.items():
                c = make_coeff(c)
                if c:
                    clean[(u, v)] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict) -> "Tensor2":
        t = object.__new__(Tensor2)
        t._terms = terms
        return t

    @classmethod
    def from_polys(cls, left: NcPoly, right: NcPoly) -> "Tensor2":
        out = {}
        for u, a in left.items():
            for v, b in right.items():
                _add_into(out, (u, v), a * b)
        return cls._wrap(_normalized(out))

    @property
    def terms(self) -> Mapping[tuple[Word, Word], Coeff]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda t: (word_key(t[0][1]), word_key(t[0][0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, u: Word, v: Word) -> Coeff:
        return self._terms.get((u, v), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tensor2):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Tensor2") -> "Tensor2":
        out = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(out, k, c)
        return Tensor2._wrap(_normalized(out))

    def __neg__(self) -> "Tensor2":
        return Tensor2._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + (-other)

    def scale(self, c) -> "Tensor2":
        c = make_coeff(c)
        return Tensor2._wrap({k: make_coeff(v * c) for k, v in self._terms.items()} if c else {})

    def __rmul__(self, c) -> "Tensor2":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def add_term(self, left: NcPoly, right: Word) -> None:
        # in-place accumulation; only used while a tensor is being built
        for u, a in left.items():
            _add_into(self._terms, (u, right), a)

    def by_right(self) -> dict[Word, NcPoly]:
        """Group as right word -> left polynomial."""
        groups: dict[Word, dict[Word, Coeff]] = {}
        for (u, v), c in self._terms.items():
            groups.setdefault(v, {})[u] = c
        return {v: NcPoly._wrap(d) for v, d in groups.items()}

    def by_left(self) -> dict[Word, NcPoly]:
        groups: dict[Word, dict[Word, Coeff]] = {}
        for (u, v), c in self._terms.items():
            groups.setdefault(u, {})[v] = c
        return {u: NcPoly._wrap(d) for u, d in groups.items()}

    def map_left(self, f: Callable[[NcPoly], NcPoly]) -> "Tensor2":
        out = Tensor2()
        for v, left in self.by_right().items():
            out.add_term(f(left), v)
        return out

    def map_right(self, f: Callable[[NcPoly], NcPoly]) -> "Tensor2":
        out: dict = {}
        for u, right in self.by_left().items():
            for v, c in f(right).items():
                _add_into(out, (u, v), c)
        return Tensor2._wrap(out)

    def __str__(self) -> str:
        return format_tensor(self)

    def __repr__(self) -> str:
        return f"Tensor2({format_tensor(self)!r})"


def format_tensor(t: Tensor2) -> str:
    """Text form grouped by right word: ``(left) (x) right + ...``."""
    if not t:
        return "0"
    groups = t.by_right()
    return " + ".join(
        f"({format_poly(groups[v])}) (x) {word_str(v)}" for v in sorted(groups, key=word_key)
    )


def tensor_conc(s: Tensor2, t: Tensor2) -> Tensor2:
    """Factor-wise concatenation (u (x) v)(u' (x) v') = uu' (x) vv'."""
    out: dict = {}
    for (u, v), a in s._terms.items():
        for (u2, v2), b in t._terms.items():
            _add_into(out, (u + u2, v + v2), a * b)
    return Tensor2._wrap(_normalized(out))


def delta_dec(p: NcPoly) -> Tensor2:
    """Deconcatenation coproduct: w -> sum over prefix (x) suffix."""
    out: dict = {}
    for w, c in p._terms.items():
        for i in range(len(w) + 1):
            _add_into(out, (w[:i], w[i:]), c)
    return Tensor2._wrap(out)


@lru_cache(maxsize=1 << 14)
def _delta_sh_word(w: Word) -> tuple[tuple[tuple[Word, Word], int], ...]:
    n = len(w)
    out: dict[tuple[Word, Word], int] = {}
    idx = range(n)
    for k in range(n + 1):
        for left in combinations(idx, k):
            chosen = set(left)
            u = "".join(w[i] for i in left)
            v = "".join(w[i] for i in idx if i not in chosen)
            out[(u, v)] = out.get((u, v), 0) + 1
    return tuple(out.items())


def delta_sh(p: NcPoly) -> Tensor2:
    """Shuffle coproduct, the conc-algebra map with letters primitive."""
    out: dict = {}
    for w, c in p._terms.items():
        for k, m in _delta_sh_word(w):
            _add_into(out, k, c * m)
    return Tensor2._wrap(out)


# ---------------------------------------------------------------------------
# JSON


def poly_to_json(p: NcPoly) -> dict:
    return {"terms": [{"word": w, "coeff": str(c)} for w, c in p.sorted_items()]}


def poly_from_json(obj: Mapping) -> NcPoly:
    return NcPoly({t["word"]: Fraction(t["coeff"]) for t in obj["terms"]})


def tensor_to_json(t: Tensor2) -> dict:
    return {
        "terms": [
            {"left": u, "right": v, "coeff": str(c)} for (u, v), c in t.sorted_items()
        ]
    }


def tensor_from_json(obj: Mapping) -> Tensor2:
    return Tensor2({(t["left"], t["right"]): Fraction(t["coeff"]) for t in obj["terms"]})
