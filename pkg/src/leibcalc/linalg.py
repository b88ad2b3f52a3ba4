"""Exact rational linear algebra with canonical row-echelon subspaces.

Vectors are coordinate rows over a fixed ordered basis; a subspace is
always stored as its reduced row echelon basis, so subspace equality is
plain structural equality.  All scalars are arbitrary-precision rationals
(gmpy2.mpq when available, fractions.Fraction otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

try:
    from gmpy2 import mpq as rat
except ImportError:  # pragma: no cover - gmpy2 is normally available
    from fractions import Fraction as rat

ZERO = rat(0)
ONE = rat(1)

Vec = tuple
Sparse = dict


class DimensionError(ValueError):
    """Raised on ambient-dimension mismatches."""


class NotContainedError(ValueError):
    """Raised when a required subspace inclusion fails."""


def q(x) -> "rat":
    """Coerce ints / 'p/q' strings / rationals to the scalar type."""
    if isinstance(x, str):
        return rat(x)
    return rat(x)


def vec(entries) -> Vec:
    return tuple(q(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def sp(u: Vec) -> Sparse:
    """Dense tuple -> sparse {index: coeff} dict."""
    return {i: a for i, a in enumerate(u) if a != 0}


def unsp(s: Sparse, n: int) -> Vec:
    return tuple(s.get(i, ZERO) for i in range(n))


def sp_axpy(dst: Sparse, c, src: Sparse) -> None:
    """dst += c*src in place."""
    if c == 0:
        return
    for i, a in src.items():
        b = dst.get(i, ZERO) + c * a
        if b == 0:
            dst.pop(i, None)
        else:
            dst[i] = b


def mat_apply(rows, v: Vec) -> Vec:
    """(M v) for M given as tuple of rows."""
    return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in rows)


def mat_mul(A, B):
    """Row-major product A.B."""
    if not A:
        return ()
    bt = tuple(zip(*B)) if B else ()
    return tuple(
        tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in bt)
        for row in A
    )


def mat_from_columns(cols, nrows: int):
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(zip(*cols))


def identity_matrix(n: int):
    return tuple(unit_vec(n, i) for i in range(n))


def zero_matrix(nrows: int, ncols: int):
    return tuple(zero_vec(ncols) for _ in range(nrows))


def is_zero_matrix(M) -> bool:
    return all(is_zero_vec(row) for row in M)


class Echelon:
    """Incremental sparse row-echelon accumulator.

    Rows are kept forward-reduced only; full back-reduction happens once
    in subspace()/rref_rows(), which is where canonicality is needed.
    """

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows: dict[int, Sparse] = {}  # pivot -> row (leading coeff 1)

    @classmethod
    def from_rows(cls, ambient: int, rows: Iterable) -> "Echelon":
        e = cls(ambient)
        for r in rows:
            e.add(r)
        return e

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v) -> Sparse:
        """Remainder of v modulo the current row space (sparse).

        Coordinates without a pivot row are kept and reduction continues
        past them, so the remainder is zero exactly when v lies in the
        row space and the map v -> reduce(v) is linear.
        """
        w = dict(v) if isinstance(v, dict) else sp(v)
        p = -1
        while True:
            cand = [i for i in w if i > p and i in self.rows]
            if not cand:
                return w
            p = min(cand)
            sp_axpy(w, -w[p], self.rows[p])

    def add(self, v) -> bool:
        """Insert v; True iff the rank grew."""
        w = dict(v) if isinstance(v, dict) else sp(v)
        while w:
            p = min(w)
            row = self.rows.get(p)
            if row is None:
                c = w[p]
                self.rows[p] = {i: a / c for i, a in w.items()}
                return True
            sp_axpy(w, -w[p], row)
        return False

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def rref_rows(self) -> list[Sparse]:
        """Fully back-reduced rows, sorted by pivot."""
        pivots = sorted(self.rows)
        out: dict[int, Sparse] = {}
        for p in reversed(pivots):
            w = dict(self.rows[p])
            for i in [i for i in w if i != p and i in out]:
                sp_axpy(w, -w[i], out[i])
            out[p] = w
        return [out[p] for p in pivots]

    def subspace(self) -> "Subspace":
        rows = self.rref_rows()
        basis = tuple(unsp(r, self.ambient) for r in rows)
        return Subspace(self.ambient, basis, tuple(sorted(self.rows)))


@dataclass(frozen=True)
class QuotientMap:
    """Coset representatives and projection for U/W."""

    space: "Subspace"
    sub: "Subspace"
    reps: tuple  # ambient row vectors completing W to U
    matrix: tuple  # (dim U - dim W) x ambient rows; acts on vectors of U

    @property
    def dim(self) -> int:
        return len(self.reps)

    def apply(self, v: Vec) -> Vec:
        return mat_apply(self.matrix, v)

    def lift(self, coords: Vec) -> Vec:
        out = zero_vec(self.space.ambient)
        for c, r in zip(coords, self.reps):
            if c != 0:
                out = vadd(out, vscale(c, r))
        return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of K^n with canonical RREF basis (zero rows removed)."""

    ambient: int
    basis: tuple
    pivots: tuple

    @staticmethod
    def span(ambient: int, rows: Iterable) -> "Subspace":
        e = Echelon(ambient)
        for r in rows:
            r = tuple(q(x) for x in r)
            if len(r) != ambient:
                raise DimensionError(
                    f"row of length {len(r)} in ambient dimension {ambient}"
                )
            e.add(r)
        return e.subspace()

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, (), ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace(
            ambient,
            tuple(unit_vec(ambient, i) for i in range(ambient)),
            tuple(range(ambient)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise DimensionError(
                f"ambient mismatch: {self.ambient} != {other.ambient}"
            )

    @property
    def sparse_basis(self) -> tuple:
        cached = self.__dict__.get("_sparse_basis")
        if cached is None:
            cached = tuple(sp(b) for b in self.basis)
            object.__setattr__(self, "_sparse_basis", cached)
        return cached

    def coords(self, v: Vec) -> Optional[Vec]:
        """Coordinates of v in the RREF basis, or None if v is outside."""
        if len(v) != self.ambient:
            raise DimensionError("vector/ambient dimension mismatch")
        c = tuple(v[p] for p in self.pivots)
        w = sp(v)
        for ci, row in zip(c, self.sparse_basis):
            sp_axpy(w, -ci, row)
        return None if w else c

    def contains(self, v: Vec) -> bool:
        return self.coords(v) is not None

    def contains_space(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(b) for b in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        e = Echelon.from_rows(self.ambient, self.basis)
        for b in other.basis:
            e.add(b)
        return e.subspace()

    def intersect(self, other: "Subspace") -> "Subspace":
        """U cap V via the kernel of the stacked residual system."""
        self._check_ambient(other)
        if self.is_full():
            return other
        if other.is_full():
            return self
        ev = Echelon.from_rows(other.ambient, other.basis)
        rems = [ev.reduce(u) for u in self.basis]
        # a in ker  <=>  sum_j a_j rem(U_j) = 0; rows indexed by coordinates
        rows: dict[int, Sparse] = {}
        for j, r in enumerate(rems):
            for k, c in r.items():
                rows.setdefault(k, {})[j] = c
        ker = kernel_sparse(rows.values(), len(self.basis))
        out = Echelon(self.ambient)
        for a in ker:
            w: Sparse = {}
            for j, c in a.items():
                sp_axpy(w, c, sp(self.basis[j]))
            out.add(w)
        return out.subspace()

    def quotient(self, sub: "Subspace") -> QuotientMap:
        """Coset reps and projection matrix for self/sub (sub must lie in self)."""
        self._check_ambient(sub)
        k = self.dim
        wc = []
        for w in sub.basis:
            c = self.coords(w)
            if c is None:
                raise NotContainedError("quotient by a space not contained in U")
            wc.append(c)
        e = Echelon.from_rows(k, wc)
        wrows = e.rref_rows()
        wpivots = sorted(e.rows)
        free = [j for j in range(k) if j not in e.rows]
        reps = tuple(self.basis[j] for j in free)
        # projection in U-coords: reduce modulo wrows, read the free coords
        proj_rows = []
        for f in free:
            row = [ZERO] * k
            row[f] = ONE
            for p, wr in zip(wpivots, wrows):
                if wr.get(f, ZERO) != 0:
                    row[p] -= wr[f]
            proj_rows.append(tuple(row))
        # compose with U-coordinate extraction (valid on vectors of U)
        coord_rows = tuple(unit_vec(self.ambient, p) for p in self.pivots)
        matrix = mat_mul(tuple(proj_rows), coord_rows)
        return QuotientMap(self, sub, reps, matrix)


def kernel_sparse(rows: Iterable[Sparse], ncols: int) -> list[Sparse]:
    """Nullspace basis (sparse) of the matrix given by sparse rows."""
    e = Echelon(ncols)
    for r in rows:
        e.add(dict(r))
    rref = e.rref_rows()
    pivots = sorted(e.rows)
    pivot_set = set(pivots)
    ker = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v: Sparse = {f: ONE}
        for p, row in zip(pivots, rref):
            c = row.get(f, ZERO)
            if c != 0:
                v[p] = -c
        ker.append(v)
    return ker


def kernel(rows, ncols: int) -> Subspace:
    """Nullspace of a matrix given as dense rows, as a canonical subspace."""
    ker = kernel_sparse((sp(r) for r in rows), ncols)
    e = Echelon(ncols)
    for v in ker:
        e.add(v)
    return e.subspace()


def column_space(rows) -> Subspace:
    """Span of the columns of M (as vectors of length nrows)."""
    nrows = len(rows)
    cols = tuple(zip(*rows)) if nrows and rows[0] else ()
    return Subspace.span(nrows, cols)


def solve(rows, b: Vec) -> Optional[Vec]:
    """A particular solution x of M x = b, or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = Echelon(n + 1)
    for row, bi in zip(rows, b):
        s = sp(row)
        if bi != 0:
            s[n] = bi
        aug.add(s)
    rref = aug.rref_rows()
    pivots = sorted(aug.rows)
    x = [ZERO] * n
    for p, row in zip(pivots, rref):
        if p == n:
            return None  # row (0 ... 0 | 1)
        x[p] = row.get(n, ZERO)
    return tuple(x)


def solve_membership(v: Vec, U: Subspace) -> Optional[Vec]:
    """Coordinates of v in U's basis when v lies in U; None otherwise."""
    return U.coords(v)


def canonicalize(ambient: int, rows) -> Subspace:
    return Subspace.span(ambient, rows)
