import pytest

from leibcalc import (
    AlgebraError,
    LeibnizAlgebra,
    ann_ideal,
    hom,
    ideal,
    ideal_closure,
    is_lie,
    liezation,
    quotient,
    validate,
)
from leibcalc.linalg import Subspace, unit_vec, vec
from helpers import algebra


def span_of(Q, *labels):
    idx = {n: i for i, n in enumerate(Q.names)}
    return Subspace.span(Q.dim, [unit_vec(Q.dim, idx[l]) for l in labels])


def test_validate_all_corpus():
    from leibcalc.corpus import ALGEBRAS

    for name in ALGEBRAS:
        assert validate(algebra(name)) == [], name


def test_validate_catches_non_leibniz():
    # [e1,e2] = e2 fails the identity at the triple (1, 1, 2)
    bad = LeibnizAlgebra(3, {(0, 1): {1: 1}})
    violations = validate(bad)
    assert violations and (1, 1, 2) in violations


def test_annihilator_oracles():
    g = algebra("ex_3_2_g")
    assert ann_ideal(g).space == span_of(g, "a1")
    q = algebra("ex_3_2_q")
    assert ann_ideal(q).space == span_of(q, "e1")
    # polarization: the span of squares picks up cross terms
    c = algebra("ex_5_5_c")
    assert ann_ideal(c).space == span_of(c, "a1", "a2")


def test_liezation_is_lie():
    for name in ("ex_3_2_g", "ex_5_5_c", "ex_5_15_e"):
        Q = algebra(name)
        lie, proj = liezation(Q)
        assert is_lie(lie)
        assert proj.is_surjective()
        assert proj.kernel_space() == ann_ideal(Q).space


def test_quotient_rejects_non_ideal():
    Q = algebra("ex_3_2_g")  # [a1, a3] = a1
    U = Subspace.span(3, [vec([0, 0, 1])])  # span{a3} is not an ideal
    with pytest.raises(AlgebraError):
        ideal(Q, U)
    closed = ideal_closure(Q, U)
    assert closed.dim == 2  # picks up a1


def test_hom_checks_brackets():
    g, q = algebra("ex_3_2_g"), algebra("ex_3_2_q")
    f = hom(g, q, ((1, 0, 0), (0, 0, 1)))
    assert f.is_surjective() and not f.is_injective()
    with pytest.raises(AlgebraError):
        hom(g, q, ((0, 1, 0), (1, 0, 0)))  # does not preserve brackets


def test_quotient_projection_is_hom():
    Q = algebra("ex_5_15_e")
    bar, proj = quotient(Q, ann_ideal(Q))
    assert bar.dim == Q.dim - ann_ideal(Q).dim
    assert proj.is_surjective()
