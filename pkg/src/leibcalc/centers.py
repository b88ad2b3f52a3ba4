"""Precise Lie-center, Lie-capability, and Lie-unicentrality.

The precise Lie-center Z*(Q) is the intersection of the images
f(Z_Lie(G)) over all Lie-central extensions f: G ->> Q.  It is computed
two independent ways and the results are required to agree:

  (1) as the image under ev of the Lie-center of the truncated stem
      cover F/[R,F]_Lie of a free presentation ev: F -> Q, and
  (2) as the kernel of the pairing C: Z_Lie(Q) (x) Q_Lie -> HL2(Q)
      induced by the extension 0 -> Z_Lie(Q) -> Q -> Q/Z_Lie(Q) -> 0.

Q is Lie-capable iff Z* = 0 and Lie-unicentral iff Z* = Z_Lie(Q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    ONE,
    Echelon,
    Subspace,
    kernel,
    mat_apply,
    mat_from_columns,
    rat,
    sp_axpy,
)
from .algebra import (
    AlgebraError,
    Ideal,
    LeibnizAlgebra,
    ideal,
    quotient,
)
from .invariants import lie_center
from .extensions import extension
from .freeleib import DegreeTooSmallError, FreeNilpotentLeibniz, present
from .homology import (
    DEFAULT_MAX_DEGREE,
    MIN_DEGREE,
    InstabilityError,
    _default_generators,
    _sigma_columns,
    coset_space,
    extension_homology,
    induced_hl2_map,
)


def _centralizer_modulo(F: FreeNilpotentLeibniz, den: Subspace) -> Subspace:
    """{v in F : [e_i, v] + [v, e_i] in den for every basis element e_i}.

    This is the preimage of Z_Lie(F/den) when den is an ideal.  Rows of
    the linear system are built sparsely: the symmetrized bracket
    [e_i, e_j] + [e_j, e_i] vanishes unless the word degrees satisfy
    deg(i) + deg(j) <= truncation degree.
    """
    P = F.full_space().quotient(den).matrix
    if not P:
        return F.full_space()
    e = Echelon(F.dim)
    for i in range(F.dim):
        di = F.word_degree(i)
        if di >= F.degree:
            continue
        cols = {}
        for j in F.indices_of_degree_at_most(F.degree - di):
            c = dict(F.pair(i, j))
            sp_axpy(c, ONE, F.pair(j, i))
            if c:
                cols[j] = c
        if not cols:
            continue
        for prow in P:
            row = {}
            for j, c in cols.items():
                s = sum((prow[k] * ck for k, ck in c.items()), rat(0))
                if s:
                    row[j] = s
            e.add(row)
        if e.rank == F.dim:
            break
    return kernel(e.subspace().basis, F.dim)


def _z_star_at_degree(Q: LeibnizAlgebra, gens, degree: int) -> Subspace:
    pres = present(Q, gens, degree)
    F = pres.free
    den = F.sym_bracket_span(pres.relations)
    C = _centralizer_modulo(F, den)
    pushed = Subspace.span(
        Q.dim, [mat_apply(pres.ev.matrix, b) for b in C.basis]
    )
    # truncation can only enlarge the cover's center; the true value
    # always sits inside the Lie-center of the target
    return pushed.intersect(lie_center(Q).space)


def c_map(
    Q: LeibnizAlgebra,
    A: Subspace,
    max_degree: int = DEFAULT_MAX_DEGREE,
):
    """Matrix of C: A (x) Q_Lie -> HL2(Q) for A inside the Lie-center.

    Columns are indexed by basis pairs of A and Q_Lie (Q_Lie index
    fastest).  Returns (rows, hl2_dim, q_lie_dim, well_defined).
    """
    ZL = lie_center(Q).space
    if not ZL.contains_space(A):
        raise AlgebraError("c_map requires an ideal inside the Lie-center")
    from .algebra import ann_ideal

    q_lie = coset_space(Q.full_space(), ann_ideal(Q).space)
    if A.is_zero() or q_lie.dim == 0:
        return (), 0, q_lie.dim, True
    proj = quotient(Q, ideal(Q, A))[1]
    E = extension(proj)
    data = extension_homology(E, max_degree)
    cols, well = _sigma_columns(data, A, q_lie)
    return (
        mat_from_columns(cols, data.hl2_G.dim),
        data.hl2_G.dim,
        q_lie.dim,
        well and data.stable,
    )


def _z_star_via_c_map(
    Q: LeibnizAlgebra,
    max_degree: int = DEFAULT_MAX_DEGREE,
    pairing=None,
) -> Subspace:
    """Largest subspace A of Z_Lie(Q) on which the pairing C vanishes."""
    ZL = lie_center(Q).space
    if ZL.is_zero():
        return ZL
    rows, hdim, qdim, well = (
        pairing if pairing is not None else c_map(Q, ZL, max_degree)
    )
    if qdim == 0 or hdim == 0:
        return ZL
    # column block for z_i spans indices [i*qdim, (i+1)*qdim); a combination
    # sum c_i z_i is in the kernel iff every Q_Lie slot maps to zero
    stacked = []
    for slot in range(qdim):
        for r in rows:
            stacked.append(
                tuple(r[i * qdim + slot] for i in range(ZL.dim))
            )
    coeffs = kernel(stacked, ZL.dim)
    return Subspace.span(
        Q.dim,
        [mat_apply(tuple(zip(*ZL.basis)), c) for c in coeffs.basis],
    )


@dataclass(frozen=True)
class PreciseCenterReport:
    target: LeibnizAlgebra
    z_lie: Ideal
    z_star: Ideal
    degree_used: int
    stable: bool
    capable: bool
    unicentral: bool
    c_matrix: tuple  # pairing on Z_Lie (x) Q_Lie


def precise_center(
    Q: LeibnizAlgebra,
    generators=None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> PreciseCenterReport:
    """Z*(Q) via the stem-cover route, cross-checked against the pairing route.

    Disagreement between the two routes at the stabilized degree is a
    truncation artifact and raises InstabilityError rather than
    guessing.
    """
    gens = generators if generators is not None else _default_generators(Q)
    ZL = lie_center(Q)
    prev = None
    picked = None
    degree_used = None
    stable = False
    for d in range(MIN_DEGREE, max_degree + 1):
        try:
            zs = _z_star_at_degree(Q, gens, d)
        except DegreeTooSmallError:
            prev = None
            continue
        if d >= MIN_DEGREE + 2 and prev is not None and zs == prev:
            picked, degree_used, stable = zs, d, True
            break
        prev = zs
        picked, degree_used = zs, d
    if picked is None:
        raise DegreeTooSmallError(
            f"no presentation within degree bound {max_degree}"
        )
    pairing = c_map(Q, ZL.space, max_degree)
    alt = _z_star_via_c_map(Q, max_degree, pairing=pairing)
    if picked != alt:
        raise InstabilityError(
            "stem-cover and pairing characterizations of the precise "
            f"Lie-center disagree at degree {degree_used} "
            f"(dims {picked.dim} vs {alt.dim}); raise the degree bound"
        )
    rows = pairing[0]
    return PreciseCenterReport(
        target=Q,
        z_lie=ZL,
        z_star=ideal(Q, picked),
        degree_used=degree_used,
        stable=stable,
        capable=picked.is_zero(),
        unicentral=picked == ZL.space,
        c_matrix=rows,
    )


def is_unicentral(
    Q: LeibnizAlgebra,
    generators=None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> bool:
    """Z*(Q) = Z_Lie(Q), decided by two criteria that must agree.

    (b) the pairing C vanishes on Z_Lie(Q) (x) Q_Lie;
    (c) HL2(Q) -> HL2(Q/Z_Lie(Q)) is injective.
    """
    ZL = lie_center(Q).space
    rows, hdim, qdim, _ = c_map(Q, ZL, max_degree)
    via_b = all(not x for r in rows for x in r)
    bar, proj = quotient(Q, ideal(Q, ZL))
    if bar.dim == 0:
        via_c = _hl2_dim(Q, generators, max_degree) == 0
    else:
        m, hG, hQ, _ = induced_hl2_map(
            proj, generators_source=generators, max_degree=max_degree
        )
        via_c = hG.dim == 0 or kernel(m, hG.dim).is_zero()
    if via_b != via_c:
        raise InstabilityError(
            "unicentrality criteria disagree; raise the degree bound"
        )
    return via_b


def _hl2_dim(Q, generators, max_degree) -> int:
    from .homology import hopf_hl2

    return hopf_hl2(Q, generators, max_degree).dim


def smallest_capable_quotient(
    Q: LeibnizAlgebra,
    generators=None,
    max_degree: int = DEFAULT_MAX_DEGREE,
):
    """Q/Z*(Q) with its projection; the smallest Lie-capable quotient."""
    rep = precise_center(Q, generators, max_degree)
    bar, proj = quotient(Q, rep.z_star)
    return bar, proj
