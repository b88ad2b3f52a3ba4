import random

import pytest

from leibcalc import validate
from leibcalc.freeleib import (
    DegreeTooSmallError,
    DoesNotGenerateError,
    free_nilpotent,
    present,
)
from leibcalc.linalg import unit_vec, vec
from helpers import algebra


def test_dimension_formula():
    # sum of m^k for word lengths k = 1..d
    assert free_nilpotent(2, 3).dim == 2 + 4 + 8
    assert free_nilpotent(3, 2).dim == 3 + 9
    assert free_nilpotent(1, 4).dim == 4


def test_basis_prefix_property():
    small, big = free_nilpotent(2, 2), free_nilpotent(2, 3)
    assert big.words[: small.dim] == small.words


def test_grading():
    F = free_nilpotent(2, 3)
    for i, w in enumerate(F.words):
        assert F.word_degree(i) == len(w)
    rng = random.Random(1)
    for _ in range(40):
        i, j = rng.randrange(F.dim), rng.randrange(F.dim)
        di, dj = F.word_degree(i), F.word_degree(j)
        val = F.pair(i, j)
        if di + dj > F.degree:
            assert not val
        for k in val:
            assert F.word_degree(k) == di + dj


def test_leibniz_identity_holds_on_truncation():
    F = free_nilpotent(2, 4)
    rng = random.Random(2)
    triples = [
        tuple(rng.randrange(F.dim) for _ in range(3)) for _ in range(60)
    ]
    assert validate(F, triples) == []


def test_present_rejects_non_generating_set():
    Q = algebra("ex_5_15_c")  # needs a2 and a3; a3 alone misses a2
    with pytest.raises(DoesNotGenerateError):
        present(Q, (unit_vec(3, 2),), 3)


def test_present_rejects_too_small_degree():
    Q = algebra("ex_5_15_c")  # a1 = [a3, a3] needs degree >= 2
    with pytest.raises(DegreeTooSmallError):
        present(Q, (unit_vec(3, 1), unit_vec(3, 2)), 1)


def test_presentation_splits_dimension():
    Q = algebra("ex_5_15_c")
    pres = present(Q, (unit_vec(3, 1), unit_vec(3, 2)), 3)
    assert pres.ev.is_surjective()
    assert pres.relations.dim == pres.free.dim - Q.dim
    # relations really evaluate to zero
    for r in pres.relations.basis:
        assert all(c == 0 for c in pres.ev.apply(r))


def test_annihilator_of_free_is_symmetric_part():
    F = free_nilpotent(2, 2)  # basis x, y, xx, xy, yx, yy
    ann = F.ann_space()
    assert ann.dim == 3  # xx, yy, xy + yx
    assert ann.contains(vec([0, 0, 0, 1, 1, 0]))
    assert not ann.contains(vec([0, 0, 0, 1, -1, 0]))
