"""Centers, relative commutators, and the Lie-relative and absolute series.

All verdicts are exact: "class" is None (never a sentinel) when the
algebra is not solvable / nilpotent in the requested sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import (
    Ideal,
    LeibnizAlgebra,
    bracket_spaces,
    ideal,
)
from .linalg import Echelon, ONE, Subspace, kernel, mat_mul, sp, sp_axpy, unsp


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple  # Subspace chain
    stabilized: bool
    class_of: Optional[int]


def right_center(Q: LeibnizAlgebra) -> Ideal:
    """Z^r(Q) = {a : [x, a] = 0 for all x}."""
    rows = [row for i in range(Q.dim) for row in Q.left_mult_rows(i)]
    return ideal(Q, kernel(rows, Q.dim))


def center(Q: LeibnizAlgebra) -> Ideal:
    """Z(Q) = {a : [x, a] = 0 = [a, x] for all x}."""
    rows = []
    for i in range(Q.dim):
        rows.extend(Q.left_mult_rows(i))
        rows.extend(Q.right_mult_rows(i))
    return ideal(Q, kernel(rows, Q.dim))


def lie_center(Q: LeibnizAlgebra) -> Ideal:
    """Z_Lie(Q) = {z : [x, z] + [z, x] = 0 for all x}."""
    rows = []
    for i in range(Q.dim):
        L, R = Q.left_mult_rows(i), Q.right_mult_rows(i)
        rows.extend(tuple(a + b for a, b in zip(lr, rr)) for lr, rr in zip(L, R))
    return ideal(Q, kernel(rows, Q.dim))


def lie_centralizer(Q: LeibnizAlgebra, M: Ideal, N: Ideal) -> Ideal:
    """C_Q^Lie(M, N) = {x : [x, m] + [m, x] in N for all m in M}.

    Membership in N is encoded exactly by projecting onto a complement
    of N and requiring zero.
    """
    proj = Q.full_space().quotient(N.space).matrix
    rows = []
    for m in M.space.basis:
        sm = sp(m)
        # column j of A_m is [e_j, m] + [m, e_j]
        cols = []
        for j in range(Q.dim):
            v = Q.bracket_sparse({j: ONE}, sm)
            sp_axpy(v, ONE, Q.bracket_sparse(sm, {j: ONE}))
            cols.append(unsp(v, Q.dim))
        rows.extend(mat_mul(proj, tuple(zip(*cols))))
    if not rows:
        return ideal(Q, Q.full_space())
    return ideal(Q, kernel(rows, Q.dim))


def lie_commutator(Q: LeibnizAlgebra, M: Ideal, N: Ideal) -> Ideal:
    """[M, N]_Lie: span of [m, n] + [n, m] over basis pairs."""
    e = Echelon(Q.dim)
    for m in M.space.basis:
        sm = sp(m)
        for n in N.space.basis:
            sn = sp(n)
            v = Q.bracket_sparse(sm, sn)
            sp_axpy(v, ONE, Q.bracket_sparse(sn, sm))
            e.add(v)
    return ideal(Q, e.subspace())


def _descending_series(
    Q: LeibnizAlgebra, kind: str, start: Subspace, step: Callable
) -> SeriesReport:
    terms = [start]
    stabilized = False
    for _ in range(Q.dim + 1):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            stabilized = True
            break
        terms.append(nxt)
        if nxt.is_zero():
            stabilized = True
            break
    class_of = None
    if terms[-1].is_zero():
        class_of = next(i for i, t in enumerate(terms) if t.is_zero())
    return SeriesReport(kind, tuple(terms), stabilized, class_of)


def lie_derived_series(Q: LeibnizAlgebra) -> SeriesReport:
    """Q^(0) = Q, Q^(i) = [Q^(i-1), Q^(i-1)]_Lie."""

    def step(t: Subspace) -> Subspace:
        it = Ideal(Q, t)
        return lie_commutator(Q, it, it).space

    return _descending_series(Q, "lie_derived", Q.full_space(), step)


def is_lie_solvable(Q: LeibnizAlgebra) -> Optional[int]:
    return lie_derived_series(Q).class_of


def lie_lower_central_series(Q: LeibnizAlgebra) -> SeriesReport:
    """Q^[1] = Q, Q^[i] = [Q^[i-1], Q]_Lie; terms[i] is Q^[i+1]."""
    full = Ideal(Q, Q.full_space())

    def step(t: Subspace) -> Subspace:
        return lie_commutator(Q, Ideal(Q, t), full).space

    return _descending_series(Q, "lie_lower_central", Q.full_space(), step)


def is_lie_nilpotent(Q: LeibnizAlgebra) -> Optional[int]:
    # terms[i] = Q^[i+1]; class k iff Q^[k+1] = 0 and Q^[k] != 0
    return lie_lower_central_series(Q).class_of


def relative_lower_central_series(Q: LeibnizAlgebra, N: Ideal) -> SeriesReport:
    """N^[1] = N, N^[i] = [N^[i-1], Q]_Lie."""
    full = Ideal(Q, Q.full_space())

    def step(t: Subspace) -> Subspace:
        return lie_commutator(Q, ideal(Q, t), full).space

    return _descending_series(Q, "relative_lower_central", N.space, step)


def lie_upper_central_series(Q: LeibnizAlgebra) -> SeriesReport:
    """zeta_0 = 0, zeta_i = C_Q^Lie(Q, zeta_{i-1}); ascending."""
    full = Ideal(Q, Q.full_space())
    terms = [Q.zero_space()]
    stabilized = False
    for _ in range(Q.dim + 1):
        nxt = lie_centralizer(Q, full, Ideal(Q, terms[-1])).space
        if nxt == terms[-1]:
            stabilized = True
            break
        terms.append(nxt)
        if nxt.is_full():
            stabilized = True
            break
    class_of = None
    if terms[-1].is_full():
        class_of = next(i for i, t in enumerate(terms) if t.is_full())
    return SeriesReport("lie_upper_central", tuple(terms), stabilized, class_of)


def absolute_derived_series(Q: LeibnizAlgebra) -> SeriesReport:
    def step(t: Subspace) -> Subspace:
        return bracket_spaces(Q, t, t)

    return _descending_series(Q, "absolute_derived", Q.full_space(), step)


def absolute_lower_central_series(Q: LeibnizAlgebra) -> SeriesReport:
    full = Q.full_space()

    def step(t: Subspace) -> Subspace:
        return bracket_spaces(Q, t, full)

    return _descending_series(Q, "absolute_lower_central", Q.full_space(), step)


def is_solvable(Q: LeibnizAlgebra) -> Optional[int]:
    return absolute_derived_series(Q).class_of


def is_nilpotent(Q: LeibnizAlgebra) -> Optional[int]:
    return absolute_lower_central_series(Q).class_of
