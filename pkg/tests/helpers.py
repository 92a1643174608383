"""Independent reference implementations used as oracles in the tests."""

from itertools import combinations

from coactionlab.parse import parse_poly
from coactionlab.series import NcPoly

F3_TEXT = "[x0,[x0,x1]] + [x1,[x0,x1]]"


def P(text: str) -> NcPoly:
    return parse_poly(text)


def interleavings(u: str, v: str) -> dict:
    """Shuffle of two words by choosing the positions of u among |u|+|v| slots."""
    n = len(u) + len(v)
    out: dict = {}
    for pos in combinations(range(n), len(u)):
        s = set(pos)
        iu, iv = iter(u), iter(v)
        w = "".join(next(iu) if k in s else next(iv) for k in range(n))
        out[w] = out.get(w, 0) + 1
    return out


def shuffle_oracle(p: NcPoly, q: NcPoly) -> NcPoly:
    acc: dict = {}
    for u, a in p.items():
        for v, b in q.items():
            for w, m in interleavings(u, v).items():
                acc[w] = acc.get(w, 0) + a * b * m
    return NcPoly(acc)


def expand_bracket_tree(tree) -> NcPoly:
    """Expand a nested tuple bracket tree such as ('0', ('0', '1'))."""
    if isinstance(tree, str):
        return NcPoly.word(tree)
    a, b = (expand_bracket_tree(t) for t in tree)
    return a * b - b * a
