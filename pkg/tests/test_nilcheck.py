from leibcalc import (
    LeibnizAlgebra,
    ann_ideal,
    hom,
    ideal,
    lie_center,
    liezation,
    quotient,
    validate,
)
from leibcalc.algebra import identity_hom
from leibcalc.nilcheck import check_theorem_6_2, vanishing_series_criterion
from leibcalc.linalg import (
    Subspace,
    mat_apply,
    mat_from_columns,
    q,
    solve,
    unit_vec,
    vec,
)
from leibcalc.corpus import ALGEBRAS
from helpers import algebra


def _conjugated(Q, P):
    """Q with its bracket transported along the invertible matrix P
    (columns = images of the old basis), plus the isomorphism."""
    n = Q.dim
    rows = [tuple(q(c) for c in r) for r in P]
    cols = [
        solve(rows, unit_vec(n, j)) for j in range(n)
    ]
    inv = mat_from_columns(cols, n)

    def pair(i, j):
        x = mat_apply(inv, unit_vec(n, i))
        y = mat_apply(inv, unit_vec(n, j))
        w = mat_apply(rows, Q.bracket(x, y))
        return {k: c for k, c in enumerate(w) if c != 0}

    table = {
        (i, j): pair(i, j)
        for i in range(n)
        for j in range(n)
        if pair(i, j)
    }
    Q2 = LeibnizAlgebra(n, table)
    assert validate(Q2) == []
    return Q2, hom(Q, Q2, rows)


def test_certifies_identity_instance():
    Q = algebra("ex_5_15_c")
    rep = check_theorem_6_2(identity_hom(Q), ann_ideal(Q), ann_ideal(Q))
    assert rep.hypotheses_hold
    assert rep.conclusion is not None and all(rep.conclusion)


def test_certifies_scaling_automorphism():
    Q = algebra("ex_5_15_c")  # [a3, a3] = a1
    f = hom(Q, Q, ((4, 0, 0), (0, 1, 0), (0, 0, 2)))
    rep = check_theorem_6_2(f, ann_ideal(Q), ann_ideal(Q))
    assert rep.hypotheses_hold
    assert rep.conclusion is not None and all(rep.conclusion)


def test_certifies_disguised_isomorphism():
    """A basis-changed copy of the 4-dim Lie-nilpotent algebra: the map is
    an isomorphism but its matrix is not a permutation or a scaling."""
    Q = algebra("ex_5_15_e")
    P = ((1, 1, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 1, 1))
    Q2, phi = _conjugated(Q, P)
    rep = check_theorem_6_2(phi, ann_ideal(Q), ann_ideal(Q2))
    assert rep.hypotheses_hold
    assert rep.conclusion is not None and all(rep.conclusion)


def test_no_conclusion_when_liezation_map_not_iso():
    # Q ->> Q/span{a2} collapses a Liezation direction: hypothesis (a)
    # fails alone, so no conclusion may be emitted
    Q = algebra("ex_5_15_c")
    I = ideal(Q, Subspace.span(3, [vec([0, 1, 0])]))
    bar, proj = quotient(Q, I)
    rep = check_theorem_6_2(proj, I, ideal(bar, Subspace.zero(bar.dim)))
    assert not rep.hl1_iso
    assert rep.hl2_epi and rep.quotient_iso
    assert rep.conclusion is None


def test_no_conclusion_when_hl2_map_not_epi():
    # the Liezation projection is an iso on Liezations and on the chosen
    # quotients, but kills the multiplier: hypothesis (b) fails alone
    Q = algebra("ex_5_15_c")
    bar, proj = liezation(Q)
    rep = check_theorem_6_2(
        proj, ann_ideal(Q), ideal(bar, Subspace.zero(bar.dim))
    )
    assert rep.hl1_iso and rep.quotient_iso
    assert not rep.hl2_epi
    assert rep.conclusion is None


def test_no_conclusion_when_quotients_differ():
    # identity map with mismatched ideals: hypothesis (c) fails alone
    Q = algebra("ex_5_15_c")
    rep = check_theorem_6_2(identity_hom(Q), ann_ideal(Q), lie_center(Q))
    assert rep.hl1_iso and rep.hl2_epi
    assert not rep.quotient_iso
    assert rep.conclusion is None


def test_vanishing_series_equivalence_on_corpus():
    """The relative lower central series of N vanishes iff the absolute
    criterion holds; both sides are computed independently inside
    vanishing_series_criterion, which raises on disagreement."""
    for name in sorted(ALGEBRAS):
        Q = algebra(name)
        for N in (ann_ideal(Q), lie_center(Q)):
            vanishing_series_criterion(Q, N)
