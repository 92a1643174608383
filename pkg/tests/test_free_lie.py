import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coactionlab import free_lie as fl
from coactionlab import linalg
from coactionlab.series import NcPoly, ZERO, all_words, shuffle, words_up_to, x0, x1
from tests.helpers import P, expand_bracket_tree


def _is_lyndon_by_rotation(w):
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def test_lyndon_word_examples():
    assert fl.lyndon_words(1) == ["0", "1"]
    assert fl.lyndon_words(2) == ["01"]
    assert fl.lyndon_words(3) == ["001", "011"]


@pytest.mark.parametrize("n", range(1, 11))
def test_lyndon_enumeration_matches_filter_and_witt(n):
    brute = sorted(w for w in all_words(n) if _is_lyndon_by_rotation(w))
    assert fl.lyndon_words(n) == brute
    assert len(brute) == fl.witt_number(n)


def test_witt_values():
    assert [fl.witt_number(n) for n in range(1, 11)] == [2, 1, 2, 3, 6, 9, 18, 30, 56, 99]
    assert [fl.mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_factorization_round_trip():
    for w in words_up_to(9):
        factors = fl.lyndon_factorization(w)
        assert "".join(factors) == w
        assert all(fl.is_lyndon(f) for f in factors)
        assert factors == sorted(factors, reverse=True)


def test_bracketing_examples(f3):
    assert fl.lyndon_bracketing("01") == P("x0x1 - x1x0")
    assert fl.lyndon_bracketing("001") == expand_bracket_tree(("0", ("0", "1")))
    assert fl.lyndon_bracketing("011") == expand_bracket_tree((("0", "1"), "1"))
    assert fl.standard_factorization("00101") == ("001", "01")
    with pytest.raises(ValueError):
        fl.lyndon_bracketing("10")


def test_lie_basis_sizes():
    assert [len(fl.lie_basis(n)) for n in (2, 3, 6)] == [1, 2, 9]


def test_bracketing_leading_word_and_primitivity():
    for n in range(1, 9):
        for w in fl.lyndon_words(n):
            b = fl.lyndon_bracketing(w)
            assert b.coeff(w) == 1
            assert min(b.terms) == w
            assert fl.is_primitive(b)


def test_primitivity_examples(f3):
    assert fl.is_primitive(f3)
    assert not fl.is_primitive(P("x0x1"))
    assert fl.is_primitive(ZERO)


def test_lie_elem_validation():
    with pytest.raises(ValueError):
        fl.LieElem(P("x0x1"), validate=True)
    e = fl.LieElem(P("[x0,x1]"), validate=True)
    assert e == P("[x0,x1]") and e.poly == P("[x0,x1]")


def test_pair_examples(f3):
    b = P("[x0,x1]")
    assert fl.pair(b, P("x0x1")) == 1
    assert fl.pair(b, shuffle(x0, x1)) == 0
    assert fl.pair(f3, P("x0x1x0")) == -2


def test_indec_eq_examples():
    cls = fl.project_L
    assert fl.indec_eq(cls(shuffle(x0, x1)), cls(ZERO))
    assert fl.indec_eq(cls(P("x0x1")), cls(P("-x1x0")))
    assert not fl.indec_eq(cls(P("x0x0x1")), cls(ZERO))
    assert cls(P("x0x1")) == cls(P("-x1x0"))


def test_project_L_errors():
    with pytest.raises(ValueError, match="grade"):
        fl.project_L(P("x0 + x0x1"))
    with pytest.raises(ValueError):
        fl.project_L(P("1"))
    assert fl.project_L(ZERO).degree == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_decomposable_basis_spans_all_products(n):
    """The triangular basis has the same span as every u sh v with |u|+|v| = n."""
    words = all_words(n)
    idx = {w: i for i, w in enumerate(words)}
    full = []
    for i in range(1, n):
        for u in all_words(i):
            for v in all_words(n - i):
                row = [0] * len(words)
                for w, c in shuffle(NcPoly.word(u), NcPoly.word(v)).items():
                    row[idx[w]] = c
                full.append(row)
    tri = []
    for p in fl.decomposable_basis(n).values():
        row = [0] * len(words)
        for w, c in p.items():
            row[idx[w]] = c
        tri.append(row)
    assert len(tri) == 2 ** n - fl.witt_number(n)
    assert linalg.same_span(full, tri, len(words)) if full else not tri


@pytest.mark.parametrize("n", range(1, 8))
def test_decomposable_test_agrees_with_annihilator(n):
    rng = random.Random(n)
    words = all_words(n)
    for _ in range(60):
        p = NcPoly({w: rng.randint(-2, 2) for w in rng.sample(words, min(len(words), 4))})
        assert fl.is_decomposable(p) == fl.lie_annihilates(p)
    # products are always decomposable
    for _ in range(20 if n > 1 else 0):
        i = rng.randint(1, n - 1)
        u = "".join(rng.choice("01") for _ in range(i))
        v = "".join(rng.choice("01") for _ in range(n - i))
        assert fl.is_decomposable(shuffle(NcPoly.word(u), NcPoly.word(v)))


def test_reduction_is_supported_on_lyndon_words():
    for w in all_words(6):
        r = fl.reduce_indecomposable(NcPoly.word(w))
        assert all(fl.is_lyndon(v) for v in r.terms)
        assert fl.is_decomposable(NcPoly.word(w) - r)


def test_tensor_vanishes_in_L():
    from coactionlab.series import Tensor2

    t = Tensor2.from_polys(shuffle(x0, x1), x1) + Tensor2.from_polys(shuffle(x1, P("x0x1")), x0)
    assert fl.tensor_vanishes_in_L(t)
    assert not fl.tensor_vanishes_in_L(t + Tensor2.from_polys(P("x0x1"), x0))


lie_words = st.sampled_from([w for n in range(1, 6) for w in fl.lyndon_words(n)])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(lie_words, st.integers(-3, 3)), min_size=1, max_size=4))
def test_lie_combinations_primitive_and_pair_with_products_to_zero(terms):
    psi = sum((fl.lyndon_bracketing(w).scale(c) for w, c in terms), ZERO)
    assert fl.is_primitive(psi)
    for n in psi.degrees():
        part = NcPoly({w: c for w, c in psi.items() if len(w) == n})
        for i in range(1, n):
            for u, v in product(all_words(i)[:3], all_words(n - i)[:3]):
                assert fl.pair(part, shuffle(NcPoly.word(u), NcPoly.word(v))) == 0


def test_bracket_of_lie_is_lie():
    b = P("[x0,x1]")
    assert fl.is_primitive(b @ P("[x0,[x0,x1]]"))
    assert fl.is_primitive(x1 @ b)
