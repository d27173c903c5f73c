"""Core structure checkers: worked examples frozen by hand, an
independent brute-force oracle for violation witnesses, and randomized
closure properties.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preliecoh.algebra import (
    ActionData,
    AlgebraMorphism,
    PreLieAlgebra,
    Representation,
    SubspaceBasis,
    check_action,
    check_lie,
    check_morphism,
    check_prelie,
    check_representation,
    check_two_sided_ideal,
    first_prelie_violation_bruteforce,
    ideal_subalgebra,
    subadjacent_lie,
    zero_tensor3,
)
from preliecoh.errors import NotAnIdeal, ShapeError
from preliecoh.linalg import MatrixQ, vector

F = Fraction


def sparse_algebra(dim, entries, labels=None):
    """entries: {(i, j, k): coeff} 0-based."""
    prod = [[[F(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), c in entries.items():
        prod[i][j][k] = F(c)
    return PreLieAlgebra(dim, tuple(tuple(tuple(r) for r in p) for p in prod), labels)


# catalog-style algebras used across the suite
def abelian(n):
    return PreLieAlgebra.zero_product(n)


def idem1():
    # e1*e1 = e1
    return sparse_algebra(1, {(0, 0, 0): 1})


def lmult2():
    # e1*e2 = e2
    return sparse_algebra(2, {(0, 1, 1): 1})


def affine2():
    # e1*e1 = e1, e1*e2 = e2
    return sparse_algebra(2, {(0, 0, 0): 1, (0, 1, 1): 1})


def bad2():
    # e1*e1 = e2, e2*e1 = e1: not pre-Lie
    return sparse_algebra(2, {(0, 0, 1): 1, (1, 0, 0): 1})


POSITIVE = [abelian(1), abelian(2), abelian(3), idem1(), lmult2(), affine2()]


def test_positive_algebras_pass():
    for a in POSITIVE:
        assert check_prelie(a) is None


def test_violation_witness_matches_bruteforce_oracle():
    a = bad2()
    bad = check_prelie(a)
    assert bad is not None
    # frozen from the hand-run oracle: first failing triple in lex order
    # is (0, 1, 0), i.e. (1, 2, 1) in 1-based reporting
    assert first_prelie_violation_bruteforce(a.dim, a.product) == (0, 1, 0)
    assert bad.indices == (0, 1, 0)
    assert bad.axiom == "left-symmetry"


def test_violation_str_is_one_based():
    bad = check_prelie(bad2())
    assert "(1, 2, 1)" in str(bad)


def test_shape_error_on_malformed_tensor():
    with pytest.raises(ShapeError):
        PreLieAlgebra(2, ((vector([1, 0]),),))


def test_subadjacent_lie_of_lmult2():
    # [e1,e2] = e2, all other brackets determined by antisymmetry
    lie = subadjacent_lie(lmult2())
    assert lie.basis_bracket(0, 1) == vector([0, 1])
    assert lie.basis_bracket(1, 0) == vector([0, -1])
    assert check_lie(lie) is None


def test_subadjacent_lie_always_lie():
    for a in POSITIVE:
        assert check_lie(subadjacent_lie(a)) is None


def test_regular_representation_passes():
    for a in POSITIVE:
        assert check_representation(Representation.regular(a)) is None


def test_trivial_representation_passes():
    for a in POSITIVE:
        for v in (1, 2):
            assert check_representation(Representation.trivial(a, v)) is None


def test_representation_negative():
    # only the left action on lmult2's trivial module perturbed
    a = lmult2()
    left = [[[F(0)] * 1 for _ in range(1)] for _ in range(2)]
    left[1][0][0] = F(1)  # e2 acts nontrivially: breaks the Lie-module law
    rep = Representation(a, 1, tuple(tuple(tuple(r) for r in p) for p in left),
                         zero_tensor3(1, 2, 1))
    bad = check_representation(rep)
    assert bad is not None
    assert bad.axiom == "left-action-lie-module"


def test_action_of_algebra_on_itself():
    for a in POSITIVE:
        act = ActionData(a, a, a.product, a.product)
        assert check_action(act) is None


def test_zero_module_product_is_plain_representation():
    # an action on a zero-product module is exactly a representation
    a = affine2()
    act = ActionData(a, PreLieAlgebra.zero_product(2), a.product, a.product)
    assert check_action(act) is None


def test_action_negative_left_action_dropped():
    # self-action with the left action zeroed: the representation axioms
    # survive but the first module-compatibility identity does not
    a = affine2()
    act = ActionData(a, a, zero_tensor3(2, 2, 2), a.product)
    assert check_representation(act.representation()) is None
    bad = check_action(act)
    assert bad is not None
    assert bad.axiom == "action-left-compat"
    assert bad.indices == (0, 0, 0)


def test_morphism_identity_and_negative():
    a = lmult2()
    ident = AlgebraMorphism(a, a, MatrixQ.identity(2))
    assert check_morphism(ident) is None
    swap = AlgebraMorphism(a, a, MatrixQ.from_rows([[0, 1], [1, 0]]))
    bad = check_morphism(swap)
    assert bad is not None
    assert bad.axiom == "morphism"


def test_ideal_check_and_restriction():
    a = lmult2()
    sub = SubspaceBasis(2, (vector([0, 1]),))
    assert check_two_sided_ideal(a, sub) is None
    ideal, incl = ideal_subalgebra(a, sub)
    assert ideal.dim == 1
    assert ideal.is_zero_algebra()
    assert incl == MatrixQ.from_rows([[0], [1]])


def test_not_an_ideal():
    a = lmult2()
    sub = SubspaceBasis(2, (vector([1, 0]),))  # e1*e2=e2 escapes span(e1)
    bad = check_two_sided_ideal(a, sub)
    assert bad is not None
    with pytest.raises(NotAnIdeal):
        ideal_subalgebra(a, sub)


# --- randomized properties --------------------------------------------------

fracs = st.fractions(min_value=-2, max_value=2, max_denominator=2)


@st.composite
def random_prelie(draw):
    """Transport a known pre-Lie structure through a random invertible
    (unitriangular times nonzero diagonal) basis change; the axiom is
    basis-independent so the result must still pass."""
    from preliecoh.linalg import invert

    base = draw(st.sampled_from(POSITIVE))
    d = base.dim
    diag = [draw(st.sampled_from([F(1), F(-1), F(2), F(1, 2), F(3)])) for _ in range(d)]
    rows = [
        [diag[i] if i == j else (draw(fracs) if j > i else F(0)) for j in range(d)]
        for i in range(d)
    ]
    m = MatrixQ.from_rows(rows)
    minv = invert(m)
    prod = []
    for i in range(d):
        row = []
        for j in range(d):
            # (m e_i) * (m e_j) expressed back through m^{-1}
            p = base.multiply(m.col(i), m.col(j))
            row.append(minv.mul_vec(p))
        prod.append(tuple(row))
    return PreLieAlgebra(d, tuple(prod))


@settings(max_examples=40, deadline=None)
@given(random_prelie())
def test_transported_structures_stay_prelie(a):
    assert check_prelie(a) is None
    assert check_lie(subadjacent_lie(a)) is None
    assert check_representation(Representation.regular(a)) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(POSITIVE), st.data())
def test_checker_agrees_with_bruteforce_on_perturbations(a, data):
    entries = [list(map(list, p)) for p in a.product]
    i = data.draw(st.integers(0, a.dim - 1))
    j = data.draw(st.integers(0, a.dim - 1))
    k = data.draw(st.integers(0, a.dim - 1))
    entries[i][j][k] += data.draw(st.sampled_from([F(1), F(-1), F(1, 2)]))
    cand = PreLieAlgebra(a.dim, tuple(tuple(tuple(r) for r in p) for p in entries))
    bad = check_prelie(cand)
    oracle = first_prelie_violation_bruteforce(cand.dim, cand.product)
    if bad is None:
        assert oracle is None
    else:
        assert oracle == bad.indices
