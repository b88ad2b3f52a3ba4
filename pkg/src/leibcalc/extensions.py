"""Extensions of Leibniz algebras and their Lie-relative classification.

An extension is a surjective homomorphism f: G -> Q together with its
kernel N.  The classes computed here:

  central      N contained in Z(G)
  Lie-central  [N, G]_Lie = 0, equivalently N contained in Z_Lie(G)
  Lie-trivial  N meets the square annihilator of G trivially
  Lie-stem     Lie-central with N contained in the square annihilator
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import (
    ONE,
    Subspace,
    kernel,
    mat_from_columns,
    rat,
    sp,
    unsp,
    vec,
)
from .algebra import (
    AlgebraError,
    Hom,
    LeibnizAlgebra,
    ann_ideal,
    hom,
    ideal,
)
from .invariants import center, lie_center, lie_commutator


@dataclass(frozen=True)
class Extension:
    """Surjection of Leibniz algebras with its kernel."""

    f: Hom
    kernel: Subspace
    generators: Optional[tuple] = None  # generating set of the source

    @property
    def source(self) -> LeibnizAlgebra:
        return self.f.source

    @property
    def target(self) -> LeibnizAlgebra:
        return self.f.target


def extension(f: Hom, generators=None) -> Extension:
    if not f.is_surjective():
        raise AlgebraError("extension map must be surjective")
    gens = None
    if generators is not None:
        gens = tuple(vec(g) for g in generators)
    return Extension(f=f, kernel=f.kernel_space(), generators=gens)


@dataclass(frozen=True)
class ClassificationReport:
    central: bool
    lie_central: bool
    lie_trivial: bool
    lie_stem: bool
    kernel_dim: int
    center_dim: int
    lie_center_dim: int
    relative_commutator_dim: int
    kernel_meet_ann_dim: int


def classify(E: Extension) -> ClassificationReport:
    G = E.source
    N = E.kernel
    Z = center(G).space
    ZL = lie_center(G).space
    ann = ann_ideal(G).space
    rel = lie_commutator(G, ideal(G, N, check=False), ideal(G, G.full_space()))
    lie_central = rel.space.is_zero()
    # the membership criterion must agree with the vanishing commutator
    if lie_central != ZL.contains_space(N):
        raise AlgebraError("Lie-centrality criteria disagree")
    meet = N.intersect(ann)
    return ClassificationReport(
        central=Z.contains_space(N),
        lie_central=lie_central,
        lie_trivial=meet.is_zero(),
        lie_stem=lie_central and ann.contains_space(N),
        kernel_dim=N.dim,
        center_dim=Z.dim,
        lie_center_dim=ZL.dim,
        relative_commutator_dim=rel.space.dim,
        kernel_meet_ann_dim=meet.dim,
    )


def direct_sum(A: LeibnizAlgebra, B: LeibnizAlgebra):
    """A + B with componentwise bracket, plus the two projections."""
    n = A.dim + B.dim

    def pair_fn(i: int, j: int) -> dict:
        if i < A.dim and j < A.dim:
            return dict(A.pair(i, j))
        if i >= A.dim and j >= A.dim:
            return {k + A.dim: c for k, c in B.pair(i - A.dim, j - A.dim).items()}
        return {}

    names = tuple("l." + s for s in A.names) + tuple("r." + s for s in B.names)
    P = LeibnizAlgebra(n, {}, names=names, pair_fn=pair_fn)
    to_A = Hom(P, A, tuple(
        tuple(ONE if j == i else rat(0) for j in range(n)) for i in range(A.dim)
    ))
    to_B = Hom(P, B, tuple(
        tuple(ONE if j == i + A.dim else rat(0) for j in range(n))
        for i in range(B.dim)
    ))
    return P, to_A, to_B


def subalgebra(Q: LeibnizAlgebra, U: Subspace):
    """The algebra structure on a bracket-closed subspace, with its inclusion."""
    m = U.dim
    brackets = {}
    for i in range(m):
        si = sp(U.basis[i])
        for j in range(m):
            v = Q.bracket_sparse(si, sp(U.basis[j]))
            if not v:
                continue
            coords = U.coords(unsp(v, Q.dim))
            if coords is None:
                raise AlgebraError("subspace is not closed under the bracket")
            entry = {k: c for k, c in enumerate(coords) if c}
            if entry:
                brackets[(i, j)] = entry
    sub = LeibnizAlgebra(m, brackets)
    incl = hom(sub, Q, mat_from_columns(U.basis, Q.dim), check=True)
    return sub, incl


def pullback(pi: Hom, phi: Hom):
    """Pullback of pi: G -> Q and phi: H -> Q.

    Returns (P, to_G, to_H) where P = {(g, h) : pi(g) = phi(h)} with the
    componentwise bracket.
    """
    if pi.target.dim != phi.target.dim:
        raise AlgebraError("pullback legs must share a target")
    G, H, Q = pi.source, phi.source, pi.target
    D, to_G_full, to_H_full = direct_sum(G, H)
    rows = tuple(
        tuple(pi.matrix[i]) + tuple(-c for c in phi.matrix[i])
        for i in range(Q.dim)
    )
    U = kernel(rows, D.dim)
    P, incl = subalgebra(D, U)
    to_G = to_G_full.compose(incl)
    to_H = to_H_full.compose(incl)
    return P, to_G, to_H
