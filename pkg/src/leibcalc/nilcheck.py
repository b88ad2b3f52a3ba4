"""Homological nilpotency criteria for homomorphisms of Leibniz algebras.

Given phi: G -> Q and ideals M of G, N of Q with phi(M) inside N, if

  (a) the induced map G_Lie -> Q_Lie is an isomorphism,
  (b) the induced map HL2(G) -> HL2(Q) is surjective, and
  (c) phi induces an isomorphism G/M -> Q/N,

then phi induces isomorphisms phi_k: G/M^[k] -> Q/N^[k] for every k,
where M^[k] is the relative lower Lie-central series.  The harness
verifies the hypotheses and, only when all hold, constructs each phi_k
explicitly and certifies bijectivity.  Separately, the relative series
of N vanishes eventually iff N lies in some term of the upper
Lie-central series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import column_space, mat_apply, mat_from_columns
from .algebra import (
    AlgebraError,
    Hom,
    Ideal,
    LeibnizAlgebra,
    ann_ideal,
    hom,
    ideal,
    quotient,
)
from .invariants import (
    lie_upper_central_series,
    relative_lower_central_series,
)
from .homology import DEFAULT_MAX_DEGREE, induced_hl2_map


@dataclass(frozen=True)
class CriterionReport:
    phi: Hom
    M: Ideal
    N: Ideal
    hl1_iso: bool
    hl2_epi: bool
    quotient_iso: bool
    conclusion: Optional[tuple]  # per-k bools for k = 1..k_max, or None
    degree_used: int

    @property
    def hypotheses_hold(self) -> bool:
        return self.hl1_iso and self.hl2_epi and self.quotient_iso


def _induced_on_quotients(phi: Hom, M: Ideal, N: Ideal) -> Hom:
    """The map G/M -> Q/N induced by phi (requires phi(M) inside N)."""
    G_bar, _ = quotient(phi.source, M)
    Q_bar, pq = quotient(phi.target, N)
    reps = phi.source.full_space().quotient(M.space).reps
    cols = [mat_apply(pq.matrix, mat_apply(phi.matrix, rep)) for rep in reps]
    return hom(G_bar, Q_bar, mat_from_columns(cols, Q_bar.dim), check=True)


def check_theorem_6_2(
    phi: Hom,
    M: Ideal,
    N: Ideal,
    k_max: int = 4,
    max_degree: int = DEFAULT_MAX_DEGREE,
    generators_source=None,
    generators_target=None,
) -> CriterionReport:
    G, Q = phi.source, phi.target
    for b in M.space.basis:
        if not N.space.contains(mat_apply(phi.matrix, b)):
            raise AlgebraError("phi does not carry M into N")
    # (a) induced map on Liezations
    a = _induced_on_quotients(phi, ann_ideal(G), ann_ideal(Q)).is_iso()
    # (b) induced map on HL2
    m2, hG, hQ, _ = induced_hl2_map(
        phi, generators_source, generators_target, max_degree
    )
    b_flag = column_space(m2).dim == hQ.dim
    # (c) induced map on quotients
    qmap = _induced_on_quotients(phi, M, N)
    c_flag = qmap.is_iso()
    conclusion = None
    if a and b_flag and c_flag:
        mseries = relative_lower_central_series(G, M)
        nseries = relative_lower_central_series(Q, N)
        verdicts = []
        for k in range(1, k_max + 1):
            mk = _series_term(mseries, k, G)
            nk = _series_term(nseries, k, Q)
            try:
                fk = _induced_on_quotients(
                    phi, ideal(G, mk, check=False), ideal(Q, nk, check=False)
                )
            except AlgebraError:
                verdicts.append(False)
                continue
            verdicts.append(fk.is_iso())
        conclusion = tuple(verdicts)
    return CriterionReport(
        phi=phi,
        M=M,
        N=N,
        hl1_iso=a,
        hl2_epi=b_flag,
        quotient_iso=c_flag,
        conclusion=conclusion,
        degree_used=max(hG.degree_used, hQ.degree_used),
    )


def _series_term(series, k: int, Q: LeibnizAlgebra):
    # terms[0] = X^[1]; beyond the stabilized tail, repeat the last term
    idx = min(k - 1, len(series.terms) - 1)
    return series.terms[idx]


def vanishing_series_criterion(Q: LeibnizAlgebra, N: Ideal) -> bool:
    """N^[i] reaches 0 for some i iff N lies in some upper central term.

    Both sides are computed independently and must agree; disagreement
    raises, since the equivalence is a theorem.
    """
    rel = relative_lower_central_series(Q, N)
    vanishes = any(t.is_zero() for t in rel.terms)
    upper = lie_upper_central_series(Q)
    contained = any(t.contains_space(N.space) for t in upper.terms)
    if vanishes != contained:
        raise AlgebraError(
            "vanishing-series equivalence failed; this indicates a bug"
        )
    return vanishes
