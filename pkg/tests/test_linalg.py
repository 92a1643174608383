from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, Rational

from coactionlab import linalg

entries = st.one_of(st.integers(-4, 4), st.fractions(max_denominator=3).filter(lambda f: abs(f) <= 3))


@st.composite
def matrices(draw):
    nrows = draw(st.integers(0, 5))
    ncols = draw(st.integers(1, 6))
    # bias toward rank deficiency by repeating combinations of rows
    base = [draw(st.lists(entries, min_size=ncols, max_size=ncols)) for _ in range(nrows)]
    if base and draw(st.booleans()):
        a, b = draw(st.integers(-2, 2)), draw(st.integers(-2, 2))
        base.append([a * x + b * y for x, y in zip(base[0], base[-1])])
    return base, ncols


def _sym(rows, ncols):
    return Matrix(len(rows), ncols, [Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                                     for r in rows for x in r])


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_and_rref_match_sympy(data):
    rows, ncols = data
    m = _sym(rows, ncols)
    assert linalg.rank(rows, ncols) == (m.rank() if rows else 0)
    if rows:
        red, piv = linalg.rref(rows, ncols)
        sred, spiv = m.rref()
        assert list(piv) == list(spiv)
        got = [[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in red]
        assert got == [list(sred.row(i)) for i in range(len(piv))]


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_nullspace_annihilates_and_has_right_dimension(data):
    rows, ncols = data
    null = linalg.nullspace(rows, ncols)
    r = linalg.rank(rows, ncols)
    assert len(null) == ncols - r
    for v in null:
        for row in rows:
            assert sum(Fraction(a) * Fraction(b) for a, b in zip(row, v)) == 0
    if rows:
        ref = _sym(rows, ncols).nullspace()
        ref_rows = [[Fraction(int(x.p), int(x.q)) for x in vec] for vec in ref]
        assert linalg.same_span(null, ref_rows, ncols) or (not null and not ref_rows)


def test_fraction_free_exact_division():
    rows = [[2, 4, 6], [1, 3, 5], [Fraction(1, 2), 1, Fraction(3, 2)]]
    ech, piv = linalg.bareiss_echelon(rows, 3)
    assert piv == [0, 1]
    assert all(isinstance(x, int) for r in ech for x in r)


def test_span_helpers():
    a = [[1, 0, 1], [0, 1, 1]]
    b = [[1, 1, 2], [1, -1, 0]]
    assert linalg.same_span(a, b, 3)
    assert linalg.in_span([2, 3, 5], a, 3)
    assert not linalg.in_span([0, 0, 1], a, 3)
    assert linalg.in_span([0, 0, 0], [], 3)
    assert linalg.canonical_basis([], 3) == []
