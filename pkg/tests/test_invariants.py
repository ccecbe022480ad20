import random

import pytest

from cubicmoduli.chars import character_of, dim_invariant_cubics
from cubicmoduli.cyclo import cyclo
from cubicmoduli.groups import MatrixGroup
from cubicmoduli.invariants import (
    MONOMIALS,
    CubicForm,
    act,
    invariant_basis,
    monomial_str,
    reynolds_operator,
    substitution_matrix,
    _reynolds_via_diagonal,
)
from cubicmoduli.linalg import Matrix

import fixtures as fx

KLEIN = "x0*x1^2 + x1*x2^2 + x2*x3^2 + x3*x4^2 + x4*x0^2"
FERMAT = "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"


def test_monomial_order():
    assert MONOMIALS[0] == (3, 0, 0, 0, 0)
    assert MONOMIALS[-1] == (0, 0, 0, 0, 3)
    assert len(set(MONOMIALS)) == 35
    assert monomial_str((1, 2, 0, 0, 0)) == "x0*x1^2"
    assert monomial_str((0, 0, 1, 1, 1)) == "x2*x3*x4"


def test_parse_and_print():
    f = CubicForm.parse(KLEIN)
    assert f.coefficient((1, 2, 0, 0, 0)) == 1
    assert f.coefficient((2, 0, 0, 0, 1)) == 1
    assert len(f.support()) == 5
    assert CubicForm.parse(str(f)) == f

    g = CubicForm.parse("2*x0^3 - E(3)*x1*x2*x3 + x4^3/2")
    assert g.coefficient((3, 0, 0, 0, 0)) == 2
    assert g.coefficient((0, 1, 1, 1, 0)) == -cyclo("E(3)")
    assert CubicForm.parse(str(g)) == g

    with pytest.raises(ValueError):
        CubicForm.parse("x0^2")
    with pytest.raises(ValueError):
        CubicForm.parse("x0^2*x1^2")
    with pytest.raises(ValueError):
        CubicForm.parse("x0 x1 x2")
    with pytest.raises(ValueError):
        CubicForm.parse("y0^3")


def test_action_on_monomial():
    # the cyclic shift sends e_j to e_{j-1}, so on forms x0*x1^2 moves
    # to x4*x0^2
    f = CubicForm.parse("x0*x1^2")
    assert act(fx.KLEIN_P, f) == CubicForm.parse("x4*x0^2")


def test_klein_form_is_preserved():
    f = CubicForm.parse(KLEIN)
    assert act(fx.KLEIN_D, f) == f
    assert act(fx.KLEIN_P, f) == f


def test_action_is_homomorphism():
    rng = random.Random(11)
    g = MatrixGroup.generate([fx.ALT4_A, fx.ALT4_B])
    f = CubicForm.parse("x0^3 + 2*x1*x2^2 - x3*x4^2 + x2*x3*x4")
    for _ in range(6):
        a = g.elements[rng.randrange(g.order)]
        b = g.elements[rng.randrange(g.order)]
        assert act(a, act(b, f)) == act(a * b, f)
        assert substitution_matrix(a * b) == \
            substitution_matrix(a) * substitution_matrix(b)


def test_trivial_group_has_everything():
    g = MatrixGroup.generate([], dim=5)
    space = invariant_basis(g)
    assert space.dimension == 35
    assert space.contains(CubicForm.parse(KLEIN))


def test_sign_group_dimension():
    g = MatrixGroup.generate([fx.C2_GEN])
    assert invariant_basis(g).dimension == 19


def test_klein_group_invariants():
    g = MatrixGroup.generate([fx.KLEIN_D, fx.KLEIN_P])
    space = invariant_basis(g)
    assert space.dimension == 1
    assert space.basis[0] == CubicForm.parse(KLEIN)


def test_reynolds_fast_path_matches_direct():
    g = MatrixGroup.generate([fx.KLEIN_D, fx.KLEIN_P])
    direct = reynolds_operator(g)  # small group, direct averaging
    fast = _reynolds_via_diagonal(g)
    assert fast is not None
    assert fast == direct


def test_nine_element_diagonal_group():
    g = MatrixGroup.generate([fx.FAM43_A, fx.FAM43_B])
    space = invariant_basis(g)
    expected = [CubicForm.parse(s) for s in (
        "x0^3", "x0*x2*x3", "x1^3", "x2^3", "x3^3", "x4^3",
    )]
    assert list(space.basis) == expected
    assert space.split_variable() == 1
    assert space.missing_variables() == ()


def test_order12_cone_group():
    g = MatrixGroup.generate([fx.Z3C4_A, fx.Z3C4_B])
    space = invariant_basis(g)
    expected = [CubicForm.parse(s) for s in (
        "x0^3", "x0^2*x1", "x0*x1^2", "x0*x3*x4",
        "x1^3", "x1*x3*x4", "x3^3 + x4^3",
    )]
    assert list(space.basis) == expected
    assert space.missing_variables() == (2,)
    assert space.split_variable() is None


def test_alt4_invariants():
    g = MatrixGroup.generate([fx.ALT4_A, fx.ALT4_B])
    space = invariant_basis(g)
    assert space.dimension == 5
    for s in ("x0^3", "x1^3", "x2*x3*x4",
              "x0*x2^2 + E(3)^2*x0*x3^2 + E(3)*x0*x4^2",
              "x1*x2^2 + E(3)*x1*x3^2 + E(3)^2*x1*x4^2"):
        assert space.contains(CubicForm.parse(s)), s
    assert not space.contains(CubicForm.parse(FERMAT))


def test_dimension_matches_character_route():
    for gens in ([fx.ALT4_A, fx.ALT4_B],
                 [fx.ALT5_A, fx.ALT5_B],
                 [fx.Z3C4_A, fx.Z3C4_B],
                 [fx.KLEIN_FOUR_A, fx.KLEIN_FOUR_B],
                 [fx.C6_GEN],
                 [fx.C6_GEN, fx.D12_FLIP]):
        g = MatrixGroup.generate(gens)
        assert invariant_basis(g).dimension == \
            dim_invariant_cubics(character_of(g))


def test_alt5_invariants():
    g = MatrixGroup.generate([fx.ALT5_A, fx.ALT5_B])
    space = invariant_basis(g)
    assert space.dimension == 2


def test_empty_or_full_support_helpers():
    g = MatrixGroup.generate([fx.C5_REGULAR])
    space = invariant_basis(g)
    assert space.dimension == 7
    assert space.variable_support() == (0, 1, 2, 3, 4)
