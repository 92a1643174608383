import json
from fractions import Fraction

import pytest

from coactionlab import identities as ids
from coactionlab import rc_solver as rc
from coactionlab.coactions import ihara_bracket
from coactionlab.free_lie import is_primitive, lie_basis
from coactionlab.linalg import same_span
from coactionlab.oracle import brute_force_solutions
from coactionlab.series import X0, X1, ZERO
from tests.helpers import P

V4, V6 = rc.V4, rc.V6


def test_r_func_examples(f3):
    assert rc.r_func(f3) == rc.RFunc({2: 1})
    assert str(rc.r_func(f3)) == "x^2"
    assert rc.r_func(P("[x0,x1]")) == rc.RFunc({1: 1})
    assert not rc.r_func(P("x1x0"))
    assert str(rc.RFunc({})) == "0"
    assert str(rc.RFunc({1: -1, 3: Fraction(1, 2)})) == "-x + 1/2*x^3"
    with pytest.raises(ValueError):
        rc.RFunc({0: 1})


def test_r_as_poly_examples():
    assert rc.r_as_poly(rc.RFunc({2: 1}), X0) == P("x0x0")
    assert rc.r_as_poly(rc.RFunc({1: 1}), X0, negate=True) == P("-x0")
    assert rc.r_as_poly(rc.RFunc({2: 1}), X0, negate=True) == P("x0x0")
    assert rc.r_as_poly(rc.RFunc({3: 2}), X1) == P("2*x1x1x1")


def test_residual_examples(f3):
    assert rc.residual(f3, V4) == ZERO
    assert rc.residual(P("[x0,x1]"), V6) == ZERO
    assert rc.residual(P("[x0,x1]"), V4) == P("-2*x0")
    assert rc.solves(f3) and not rc.solves(P("[x0,x1]"), V4) and rc.solves(P("[x0,x1]"), V6)


def test_residual_preconditions():
    with pytest.raises(rc.PreconditionError, match="x0"):
        rc.residual(P("x0 + [x0,x1]"))
    with pytest.raises(rc.PreconditionError, match="constant"):
        rc.residual(P("3 + [x0,x1]"))


def test_f3_example(f3):
    assert rc.is_skew(f3)
    assert rc.twisted_residual(f3) == ZERO
    assert rc.twisted_residual(ZERO) == ZERO
    assert rc.is_even(rc.r_func(f3))


def test_skew_and_even():
    assert rc.is_skew(P("[x0,x1]"))
    assert not rc.is_skew(P("x0x1"))
    assert not rc.is_even(rc.RFunc({1: 1}))
    assert rc.is_even(rc.RFunc({}))


def test_solve_degree_two():
    assert rc.solve_degree(2, V4).elements == ()
    b = rc.solve_degree(2, V6)
    assert b.dimension == 1 and rc.in_span(P("[x0,x1]"), b.elements, 2)
    with pytest.raises(ValueError):
        rc.solve_degree(1, V4)


def test_solve_degree_three_is_f3(f3):
    b = rc.solve_degree(3, V4)
    assert b.dimension == 1
    assert rc.in_span(f3, b.elements, 3)
    assert b.elements[0] == f3


def test_dims_table_values():
    assert rc.dims_table(10, V4) == {2: 0, 3: 1, 4: 0, 5: 1, 6: 0, 7: 1, 8: 1, 9: 1, 10: 1}
    assert rc.dims_table(10, V6) == {2: 1, 3: 1, 4: 0, 5: 1, 6: 0, 7: 1, 8: 1, 9: 1, 10: 1}
    with pytest.raises(ValueError):
        rc.dims_table(1)


def test_r_functions_of_solutions():
    rs = {n: [str(rc.r_func(e)) for e in rc.solve_degree(n, V4).elements] for n in range(3, 11)}
    assert rs == {3: ["x^2"], 4: [], 5: ["x^4"], 6: [], 7: ["x^6"], 8: ["0"], 9: ["x^8"], 10: ["0"]}


@pytest.mark.parametrize("variant", [V4, V6])
@pytest.mark.parametrize("n", range(2, 7))
def test_solver_agrees_with_word_coordinate_oracle(n, variant):
    solver = [rc.word_coordinates(e, n) for e in rc.solve_degree(n, variant).elements]
    oracle = [rc.word_coordinates(e, n) for e in brute_force_solutions(n, variant)]
    assert len(solver) == len(oracle)
    assert same_span(solver, oracle, 1 << n) if solver else not oracle


@pytest.mark.parametrize("variant", [V4, V6])
def test_solutions_are_skew_primitive_solutions(variant):
    for n in range(2, 9):
        for e in rc.solve_degree(n, variant).elements:
            assert is_primitive(e) and rc.solves(e, variant)


def test_evenness_for_second_variant():
    # every V6 solution from degree 3 on has an even r-function
    for n in range(3, 9):
        for e in rc.solve_degree(n, V6).elements:
            assert e.coeff("01") == 0
            assert rc.is_even(rc.r_func(e))


def test_solver_is_deterministic():
    rc.solve_degree.cache_clear()
    first = [rc.solve_degree(n, V4).to_json() for n in range(2, 8)]
    rc.solve_degree.cache_clear()
    second = [rc.solve_degree(n, V4).to_json() for n in range(2, 8)]
    assert json.dumps(first) == json.dumps(second)


def test_basis_json_round_trip():
    b = rc.solve_degree(7, V4)
    again = rc.RcBasis.from_json(json.loads(json.dumps(b.to_json())))
    assert again == b


def test_constraint_matrix_shape():
    m = rc.constraint_matrix(5, V4)
    assert all(len(r) == len(lie_basis(5)) for r in m)


def test_check_closure():
    f3 = rc.solve_degree(3, V4).elements[0]
    f5 = rc.solve_degree(5, V4).elements[0]
    assert rc.check_closure(f3, f3, V4)
    assert rc.check_closure(f3, f5, V4)
    with pytest.raises(rc.PreconditionError):
        rc.check_closure(P("[x0,x1]"), f3, V4)


def test_closure_brackets_have_no_r_and_lie_in_solution_spans():
    sols = {n: rc.solve_degree(n, V4).elements for n in range(3, 8)}
    for m in sols:
        for n in sols:
            if m + n > 10:
                continue
            for a in sols[m]:
                for b in sols[n]:
                    br = ihara_bracket(a, b)
                    assert not rc.r_func(br)
                    if br:
                        assert rc.in_span(br, rc.solve_degree(m + n, V4).elements, m + n)


def _sols(max_degree):
    return [e for n in range(2, max_degree + 1) for e in rc.solve_degree(n, V4).elements]


def test_intermediate_identities_small():
    sols = _sols(6)
    for psi in sols:
        for f in lie_basis(2) + lie_basis(3):
            for label, lhs, rhs in ids.twisted_action_pieces(psi, f) + ids.derivation_of_mu(psi, f):
                assert lhs == rhs, label
    for a in sols:
        for b in sols:
            for fn in (ids.mu_of_action, ids.bracket_strips, ids.mu_of_commutator, ids.closure_residual):
                for label, lhs, rhs in fn(a, b):
                    assert lhs == rhs, label


def test_intermediate_identities_need_the_equation():
    # [x0,x1] is skew and Lie but misses V4, so the equation-based identities fail
    b = P("[x0,x1]")
    assert rc.twisted_residual(b) == P("2*x1")
    f = P("[x0,[x0,x1]]")
    assert all(lhs != rhs for _, lhs, rhs in ids.twisted_action_pieces(b, f))
