"""Finite-dimensional Leibniz algebras as structure constants.

An algebra is a bracket table over an ordered basis; homomorphisms carry
their full matrix and are checked at construction.  Ideals pair a parent
algebra with a canonical subspace and enforce two-sidedness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    ONE,
    ZERO,
    DimensionError,
    Echelon,
    Sparse,
    Subspace,
    Vec,
    mat_apply,
    mat_mul,
    q,
    sp,
    sp_axpy,
    unit_vec,
    unsp,
)


class AlgebraError(ValueError):
    """Structural error in an algebra, homomorphism or ideal."""


class LeibnizAlgebra:
    """Leibniz algebra of finite dimension given by its bracket table.

    brackets maps (i, j) (0-based) to the sparse coordinate vector of
    [e_i, e_j]; omitted pairs are zero.  A pair_fn may be supplied
    instead for lazily generated tables (truncated free algebras).
    """

    def __init__(self, dim, brackets=None, names=None, pair_fn=None):
        self.dim = dim
        self.names = tuple(names) if names else tuple(
            f"e{i + 1}" for i in range(dim)
        )
        if len(self.names) != dim:
            raise AlgebraError("names/dim mismatch")
        self._table: dict = {}
        if brackets:
            for (i, j), val in brackets.items():
                if not (0 <= i < dim and 0 <= j < dim):
                    raise AlgebraError(f"bracket index out of range: {(i, j)}")
                row = {k: q(c) for k, c in val.items() if q(c) != 0}
                for k in row:
                    if not 0 <= k < dim:
                        raise AlgebraError(f"bracket value index out of range: {k}")
                if row:
                    self._table[i, j] = row
        self._pair_fn = pair_fn
        self._cache: dict = {}

    def pair(self, i: int, j: int) -> Sparse:
        """Sparse vector of [e_i, e_j]."""
        key = (i, j)
        v = self._table.get(key)
        if v is None:
            v = self._pair_fn(i, j) if self._pair_fn else {}
            self._table[key] = v
        return v

    def structure_equal(self, other: "LeibnizAlgebra") -> bool:
        if self.dim != other.dim:
            return False
        return all(
            self.pair(i, j) == other.pair(i, j)
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def basis_vector(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def bracket_sparse(self, u: Sparse, v: Sparse) -> Sparse:
        out: Sparse = {}
        for i, a in u.items():
            for j, b in v.items():
                sp_axpy(out, a * b, self.pair(i, j))
        return out

    def bracket(self, u: Vec, v: Vec) -> Vec:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionError("bracket operand dimension mismatch")
        return unsp(self.bracket_sparse(sp(u), sp(v)), self.dim)

    def sym_bracket(self, u: Vec, v: Vec) -> Vec:
        """[u,v] + [v,u]."""
        out = self.bracket_sparse(sp(u), sp(v))
        sp_axpy_all(out, self.bracket_sparse(sp(v), sp(u)))
        return unsp(out, self.dim)

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.dim)

    def left_mult_rows(self, i: int):
        """Matrix of v -> [e_i, v]."""
        cols = [unsp(self.pair(i, j), self.dim) for j in range(self.dim)]
        return tuple(zip(*cols))

    def right_mult_rows(self, i: int):
        """Matrix of v -> [v, e_i]."""
        cols = [unsp(self.pair(j, i), self.dim) for j in range(self.dim)]
        return tuple(zip(*cols))

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.dim}, names={self.names})"


def sp_axpy_all(dst: Sparse, src: Sparse) -> None:
    sp_axpy(dst, ONE, src)


def abelian(dim: int, names=None) -> LeibnizAlgebra:
    return LeibnizAlgebra(dim, {}, names=names)


def validate(Q: LeibnizAlgebra, triples=None) -> list:
    """Leibniz-identity violations as 1-based basis triples (i, j, k).

    Checks [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] - [[e_i,e_k],e_j] on all
    dim^3 triples unless a subset is given.
    """
    n = Q.dim
    if triples is None:
        triples = (
            (i, j, k) for i in range(n) for j in range(n) for k in range(n)
        )
    bad = []
    for i, j, k in triples:
        lhs = Q.bracket_sparse({i: ONE}, Q.pair(j, k))
        rhs = Q.bracket_sparse(Q.pair(i, j), {k: ONE})
        sp_axpy(rhs, -ONE, Q.bracket_sparse(Q.pair(i, k), {j: ONE}))
        sp_axpy(lhs, -ONE, rhs)
        if lhs:
            bad.append((i + 1, j + 1, k + 1))
    return bad


@dataclass(frozen=True)
class Ideal:
    """Two-sided ideal of a Leibniz algebra."""

    parent: LeibnizAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def is_two_sided(Q: LeibnizAlgebra, S: Subspace) -> bool:
    for h in S.basis:
        hs = sp(h)
        for i in range(Q.dim):
            if not S.contains(unsp(Q.bracket_sparse(hs, {i: ONE}), Q.dim)):
                return False
            if not S.contains(unsp(Q.bracket_sparse({i: ONE}, hs), Q.dim)):
                return False
    return True


def ideal(Q: LeibnizAlgebra, S: Subspace, check: bool = True) -> Ideal:
    if S.ambient != Q.dim:
        raise DimensionError("ideal ambient/algebra dimension mismatch")
    if check and not is_two_sided(Q, S):
        raise AlgebraError("subspace is not a two-sided ideal")
    return Ideal(Q, S)


def full_ideal(Q: LeibnizAlgebra) -> Ideal:
    return Ideal(Q, Q.full_space())


def zero_ideal(Q: LeibnizAlgebra) -> Ideal:
    return Ideal(Q, Q.zero_space())


def bracket_spaces(Q: LeibnizAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of all [u, v] over basis vectors of U and V."""
    if U.ambient != Q.dim or V.ambient != Q.dim:
        raise DimensionError("bracket_spaces ambient mismatch")
    e = Echelon(Q.dim)
    for u in U.basis:
        su = sp(u)
        for v in V.basis:
            e.add(Q.bracket_sparse(su, sp(v)))
    return e.subspace()


def ideal_closure(Q: LeibnizAlgebra, S: Subspace) -> Ideal:
    """Smallest two-sided ideal containing S (bracket fixpoint)."""
    e = Echelon.from_rows(Q.dim, S.basis)
    work = [sp(b) for b in S.basis]
    while work:
        h = work.pop()
        for i in range(Q.dim):
            for v in (Q.bracket_sparse(h, {i: ONE}),
                      Q.bracket_sparse({i: ONE}, h)):
                w = e.reduce(v)
                if w:
                    e.add(dict(w))
                    work.append(w)
    return Ideal(Q, e.subspace())


def ann_ideal(Q: LeibnizAlgebra) -> Ideal:
    """Q^ann, the span of all squares [x,x], by polarization."""
    e = Echelon(Q.dim)
    for i in range(Q.dim):
        e.add(dict(Q.pair(i, i)))
        for j in range(i + 1, Q.dim):
            v = dict(Q.pair(i, j))
            sp_axpy(v, ONE, Q.pair(j, i))
            e.add(v)
    return ideal(Q, e.subspace())


@dataclass(frozen=True)
class Hom:
    """Homomorphism given by its matrix (columns = images of source basis)."""

    source: LeibnizAlgebra
    target: LeibnizAlgebra
    matrix: tuple  # target.dim x source.dim

    def apply(self, v: Vec) -> Vec:
        return mat_apply(self.matrix, v)

    def apply_sparse(self, v: Sparse) -> Sparse:
        out: Sparse = {}
        for j, c in v.items():
            for r in range(self.target.dim):
                a = self.matrix[r][j]
                if a != 0:
                    b = out.get(r, ZERO) + c * a
                    if b == 0:
                        out.pop(r, None)
                    else:
                        out[r] = b
        return out

    def image(self) -> Subspace:
        cols = tuple(zip(*self.matrix)) if self.matrix else ()
        return Subspace.span(self.target.dim, cols)

    def kernel_space(self) -> Subspace:
        from .linalg import kernel

        return kernel(self.matrix, self.source.dim)

    def kernel(self, check: bool = True) -> Ideal:
        return ideal(self.source, self.kernel_space(), check=check)

    def is_surjective(self) -> bool:
        return self.image().dim == self.target.dim

    def is_injective(self) -> bool:
        return self.kernel_space().dim == 0

    def is_iso(self) -> bool:
        return self.is_surjective() and self.is_injective()

    def compose(self, other: "Hom") -> "Hom":
        """self o other (apply other first)."""
        if other.target is not self.source and not other.target.structure_equal(
            self.source
        ):
            raise AlgebraError("composition source/target mismatch")
        return Hom(other.source, self.target, mat_mul(self.matrix, other.matrix))


def preserves_brackets(f: Hom, pairs=None) -> bool:
    n = f.source.dim
    if pairs is None:
        pairs = ((i, j) for i in range(n) for j in range(n))
    for i, j in pairs:
        lhs = f.apply_sparse(f.source.pair(i, j))
        fi = f.apply_sparse({i: ONE})
        fj = f.apply_sparse({j: ONE})
        rhs = f.target.bracket_sparse(fi, fj)
        sp_axpy(lhs, -ONE, rhs)
        if lhs:
            return False
    return True


def hom(source, target, matrix, check: bool = True, pairs=None) -> Hom:
    matrix = tuple(tuple(q(x) for x in row) for row in matrix)
    if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
        raise DimensionError("hom matrix shape mismatch")
    f = Hom(source, target, matrix)
    if check and not preserves_brackets(f, pairs=pairs):
        raise AlgebraError("matrix does not preserve the bracket")
    return f


def identity_hom(Q: LeibnizAlgebra) -> Hom:
    return Hom(Q, Q, tuple(unit_vec(Q.dim, i) for i in range(Q.dim)))


def quotient(Q: LeibnizAlgebra, I: Ideal):
    """Quotient algebra Q/I and the canonical projection."""
    if I.parent is not Q and not I.parent.structure_equal(Q):
        raise AlgebraError("ideal does not belong to this algebra")
    if not is_two_sided(Q, I.space):
        raise AlgebraError("quotient by a non-two-sided subspace")
    qm = Q.full_space().quotient(I.space)
    reps = qm.reps
    m = len(reps)
    brackets = {}
    for a in range(m):
        for b in range(m):
            w = qm.apply(Q.bracket(reps[a], reps[b]))
            val = sp(w)
            if val:
                brackets[a, b] = val
    names = tuple(_coset_name(Q, r) for r in reps)
    alg = LeibnizAlgebra(m, brackets, names=names)
    proj = hom(Q, alg, qm.matrix)
    return alg, proj


def _coset_name(Q: LeibnizAlgebra, rep: Vec) -> str:
    lead = next(i for i, c in enumerate(rep) if c != 0)
    return f"{Q.names[lead]}~"


def liezation(Q: LeibnizAlgebra):
    """The largest Lie quotient Q/Q^ann and the canonical epimorphism."""
    return quotient(Q, ann_ideal(Q))


def is_lie(Q: LeibnizAlgebra) -> bool:
    return ann_ideal(Q).dim == 0


def is_lie_perfect(Q: LeibnizAlgebra) -> bool:
    lie, _ = liezation(Q)
    return lie.dim == 0
