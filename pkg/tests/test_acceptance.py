"""The ten acceptance criteria, one test (group) per criterion.

Criteria 1 (two sub-assertions) and 7 restate claims of the source
material that are provably false under its own definitions; they are kept
verbatim as strict expected failures.  The analysis lives in the decisions
ledger and the README's known-defects section.  Everything else must pass
exactly, with zero tolerance.
"""

import json
import random

import pytest

from leibcalc import (
    ann_ideal,
    center,
    classify,
    five_term,
    hopf_hl2_at_degree,
    ideal_closure,
    is_lie_nilpotent,
    is_lie_solvable,
    is_lie_stem_cover,
    is_nilpotent,
    is_solvable,
    is_unicentral,
    lie_center,
    lie_centralizer,
    lie_commutator,
    precise_center,
    six_term,
    stem_quotient_extension,
)
from leibcalc.algebra import identity_hom, is_two_sided, hom
from leibcalc.nilcheck import check_theorem_6_2, vanishing_series_criterion
from leibcalc.linalg import Subspace, unit_vec, vec
from leibcalc.cli import default_corpus_dir, main, parse_algebra_doc
from leibcalc.corpus import ALGEBRAS, generators_for
from helpers import (
    EXTENSION_SOURCES,
    algebra,
    cap,
    derived_extensions,
    fixture_extension,
    hl2,
    pc,
)


def _fixture_algebra(name):
    path = default_corpus_dir() / f"{name}.json"
    return parse_algebra_doc(json.loads(path.read_text()))[1]


def _span(Q, *labels):
    idx = {n: i for i, n in enumerate(Q.names)}
    return Subspace.span(Q.dim, [unit_vec(Q.dim, idx[l]) for l in labels])


# -- criterion 1: corpus-fixture exact values -------------------------------


def test_criterion_01_fixture_values():
    g = _fixture_algebra("ex_3_2_g")
    q = _fixture_algebra("ex_3_2_q")
    assert ann_ideal(g).space == _span(g, "a1")
    assert ann_ideal(q).space == _span(q, "e1")
    assert classify(fixture_extension("ex_3_2")).lie_trivial
    assert not classify(fixture_extension("remark_3")).central
    assert center(g).space == _span(g, "a2")
    assert classify(fixture_extension("ex_3_14_a")).lie_stem


@pytest.mark.xfail(
    strict=True,
    reason="source defect (see decisions ledger): the kernel span{a1} has "
    "[a1,a3]+[a3,a1] = a1 != 0, so the extension is not Lie-central "
    "under the symmetrised definitions",
)
def test_criterion_01_remark_lie_central_claim():
    assert classify(fixture_extension("remark_3")).lie_central


@pytest.mark.xfail(
    strict=True,
    reason="source defect (see decisions ledger): a1 fails the symmetric "
    "center equation against a3, so Z_Lie(g) = span{a2}, not span{a1,a2}",
)
def test_criterion_01_remark_lie_center_span_claim():
    g = _fixture_algebra("ex_3_2_g")
    assert lie_center(g).space == _span(g, "a1", "a2")


# -- criterion 2: series classes --------------------------------------------


def test_criterion_02_series_classes():
    assert is_lie_solvable(algebra("ex_5_5_c")) == 2
    assert is_solvable(algebra("ex_5_5_c")) == 2
    assert is_lie_solvable(algebra("ex_5_5_d")) == 2
    assert is_solvable(algebra("ex_5_5_d")) is None
    assert is_lie_nilpotent(algebra("ex_5_15_c")) == 2
    assert is_lie_nilpotent(algebra("ex_5_15_e")) == 2
    assert is_nilpotent(algebra("ex_5_15_e")) is None
    assert is_lie_nilpotent(algebra("ex_5_5_c")) is None


# -- criterion 3: two-sided-ideal property suite ----------------------------


def test_criterion_03_relative_commutator_properties():
    rng = random.Random(42)
    checked = 0
    while checked < 50:
        for name in sorted(ALGEBRAS):
            Q = algebra(name)
            M = ideal_closure(Q, Subspace.span(Q.dim, [
                vec([rng.randint(-2, 2) for _ in range(Q.dim)])
                for _ in range(rng.randint(0, Q.dim))
            ]))
            N = ideal_closure(Q, Subspace.span(Q.dim, [
                vec([rng.randint(-2, 2) for _ in range(Q.dim)])
                for _ in range(rng.randint(0, Q.dim))
            ]))
            cen = lie_centralizer(Q, M, N)
            com = lie_commutator(Q, M, N)
            assert is_two_sided(Q, cen.space), name
            assert is_two_sided(Q, com.space), name
            assert cen.space.contains_space(center(Q).space), name
            from leibcalc import right_center

            assert right_center(Q).space.contains_space(
                lie_commutator(
                    Q, M, ideal_closure(Q, Subspace.full(Q.dim))
                ).space.intersect(right_center(Q).space)
            )
            checked += 1
    assert checked >= 50


# -- criterion 4: Hopf oracle on abelian algebras ---------------------------


def test_criterion_04_hopf_abelian_oracle():
    for n in (1, 2, 3, 4):
        Q = algebra(f"abelian_{n}")
        want = n * (n + 1) // 2
        assert hopf_hl2_at_degree(Q, 3).dim == want
        h = hl2(f"abelian_{n}")
        assert h.dim == want and h.stable and h.degree_used == 4


# -- criterion 5: presentation independence ---------------------------------


def test_criterion_05_presentation_independence():
    for name in sorted(ALGEBRAS):
        h1, h2 = hl2(name), hl2(name, 1)
        assert h1.dim == h2.dim, name
        assert h1.well_defined == h2.well_defined, name
        assert h1.stable and h2.stable, name


# -- criterion 6: exact-sequence suites -------------------------------------


def test_criterion_06_exact_sequences():
    exts = derived_extensions()
    assert len(exts) >= 10
    lie_central_count = 0
    for label, degree_cap, E in exts:
        rep5 = five_term(E, max_degree=degree_cap)
        assert rep5.exact and rep5.compositions_zero, label
        if classify(E).lie_central:
            lie_central_count += 1
            rep6 = six_term(E, max_degree=degree_cap)
            assert rep6.exact and rep6.compositions_zero, label
            assert rep6.exact_at[1] is not None  # im sigma = ker HL2 map
    assert lie_central_count >= 1


# -- criterion 7: stem-cover certification ----------------------------------


@pytest.mark.xfail(
    strict=True,
    reason="source defect (see decisions ledger): the symmetrised quotient "
    "of a presentation has antisymmetric kernel elements outside the "
    "annihilator, so theta* is not onto for most targets; for "
    "non-nilpotent targets the truncated construction does not even map "
    "homomorphically onto Q",
)
def test_criterion_07_stem_cover_certification():
    for name in sorted(ALGEBRAS):
        E = stem_quotient_extension(
            algebra(name), generators_for(name), max_degree=cap(name)
        )
        assert is_lie_stem_cover(E, max_degree=cap(name)), name


# -- criterion 8: precise-center cross-validation ---------------------------


def test_criterion_08_precise_center_cross_validation():
    for name in sorted(ALGEBRAS):
        rep = pc(name)  # internally cross-checks both routes, raises on
        # disagreement at the stabilized degree
        assert rep.stable, name
        assert rep.capable == (rep.z_star.dim == 0), name
        uni = is_unicentral(algebra(name), generators_for(name),
                            max_degree=cap(name))
        assert uni == rep.unicentral, name
        assert rep.unicentral == (rep.z_star.space == rep.z_lie.space), name
    # monotonicity under the fixture surjections
    for ext_name, src_name in sorted(EXTENSION_SOURCES.items()):
        E = fixture_extension(ext_name)
        src, tgt = pc(src_name), precise_center(E.target)
        pushed = Subspace.span(
            E.target.dim, [E.f.apply(b) for b in src.z_star.space.basis]
        )
        assert tgt.z_star.space.contains_space(pushed), ext_name


# -- criterion 9: nilpotency-criterion harness ------------------------------


def test_criterion_09_nilpotency_harness():
    from test_nilcheck import _conjugated

    Q3 = algebra("ex_5_15_c")
    Q4 = algebra("ex_5_15_e")
    Q4b, phi = _conjugated(Q4, ((1, 1, 0, 0), (0, 1, 0, 0),
                                (1, 0, 1, 0), (0, 0, 1, 1)))
    satisfying = [
        check_theorem_6_2(identity_hom(Q3), ann_ideal(Q3), ann_ideal(Q3)),
        check_theorem_6_2(
            hom(Q3, Q3, ((4, 0, 0), (0, 1, 0), (0, 0, 2))),
            ann_ideal(Q3), ann_ideal(Q3),
        ),
        check_theorem_6_2(phi, ann_ideal(Q4), ann_ideal(Q4b)),
    ]
    assert len(satisfying) >= 3
    for rep in satisfying:
        assert rep.hypotheses_hold
        assert rep.conclusion is not None and all(rep.conclusion)

    from leibcalc import ideal, liezation, quotient

    I = ideal(Q3, Subspace.span(3, [vec([0, 1, 0])]))
    barI, projI = quotient(Q3, I)
    lz, pl = liezation(Q3)
    violating = [
        check_theorem_6_2(projI, I, ideal(barI, Subspace.zero(barI.dim))),
        check_theorem_6_2(pl, ann_ideal(Q3),
                          ideal(lz, Subspace.zero(lz.dim))),
        check_theorem_6_2(identity_hom(Q3), ann_ideal(Q3), lie_center(Q3)),
    ]
    assert len(violating) >= 3
    for rep in violating:
        failed = [rep.hl1_iso, rep.hl2_epi, rep.quotient_iso].count(False)
        assert failed == 1  # exactly one hypothesis violated
        assert rep.conclusion is None

    for name in sorted(ALGEBRAS):
        Q = algebra(name)
        for N in (ann_ideal(Q), lie_center(Q)):
            vanishing_series_criterion(Q, N)


# -- criterion 10: determinism of the corpus verifier -----------------------


def test_criterion_10_verify_paper_deterministic(tmp_path, capsys):
    outputs = []
    for tag in ("1", "2"):
        out = tmp_path / f"report{tag}.json"
        main(["verify-paper", "--json-out", str(out)])
        outputs.append((out.read_bytes(), capsys.readouterr().out))
    assert outputs[0] == outputs[1]
