"""Free nilpotent Leibniz algebras and finite presentations.

The free Leibniz algebra on a vector space V is the reduced tensor
algebra T(V) = V + V^2 + ... with the bracket determined by
[u, x] = u.x for x of degree one and the Leibniz identity in the
second argument.  Truncating at word length d gives the free algebra
in the variety of nilpotent algebras of class d, which is all that is
needed to compute Hopf-style invariants degree by degree.

Words are ordered by (length, lexicographic), so the basis of the
degree-d algebra is a prefix of the basis of the degree-(d+1) algebra
and truncation acts on coordinates by prefix projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .linalg import (
    ONE,
    Echelon,
    Subspace,
    Vec,
    rat,
    solve,
    sp,
    sp_axpy,
    vec,
)
from .algebra import Hom, LeibnizAlgebra, hom

Word = tuple  # tuple of letter indices


class PresentationError(ValueError):
    pass


class DoesNotGenerateError(PresentationError):
    """The chosen elements do not generate the target algebra."""


class DegreeTooSmallError(PresentationError):
    """The elements generate, but not within the word-length bound."""


class FreeNilpotentLeibniz(LeibnizAlgebra):
    """Free Leibniz algebra on `letters` generators, truncated at class `degree`."""

    def __init__(self, letters: int, degree: int, max_dim: int = 6000):
        if letters < 1 or degree < 1:
            raise ValueError("need at least one letter and degree >= 1")
        dim = sum(letters**k for k in range(1, degree + 1))
        if dim > max_dim:
            raise ValueError(
                f"free algebra on {letters} letters at degree {degree} "
                f"has dimension {dim} > cap {max_dim}"
            )
        words = []
        for length in range(1, degree + 1):
            words.extend(product(range(letters), repeat=length))
        self.letters = letters
        self.degree = degree
        self.words: tuple[Word, ...] = tuple(words)
        self.word_index = {w: i for i, w in enumerate(words)}
        names = tuple("x" + ".x".join(str(c + 1) for c in w) for w in words)
        self._wb: dict[tuple[int, int], dict] = {}
        super().__init__(dim, {}, names=names, pair_fn=self._pair_words)

    def word_degree(self, i: int) -> int:
        return len(self.words[i])

    def indices_of_degree_at_most(self, k: int):
        bound = sum(self.letters**j for j in range(1, min(k, self.degree) + 1))
        return range(bound)

    def _pair_words(self, i: int, j: int) -> dict:
        return self._word_bracket(i, j)

    def _word_bracket(self, i: int, j: int) -> dict:
        """Sparse coordinates of [w_i, w_j] over the word basis."""
        cached = self._wb.get((i, j))
        if cached is not None:
            return cached
        u, w = self.words[i], self.words[j]
        if len(u) + len(w) > self.degree:
            out: dict = {}
        elif len(w) == 1:
            out = {self.word_index[u + w]: ONE}
        else:
            # [u, w'x] = [[u, w'], x] - [[u, x], w']
            head = self.word_index[w[:-1]]
            last = self.word_index[w[-1:]]
            out = {}
            for k, c in self._word_bracket(i, head).items():
                for t, c2 in self._word_bracket(k, last).items():
                    out[t] = out.get(t, rat(0)) + c * c2
            for k, c in self._word_bracket(i, last).items():
                for t, c2 in self._word_bracket(k, head).items():
                    out[t] = out.get(t, rat(0)) - c * c2
            out = {k: c for k, c in out.items() if c}
        self._wb[(i, j)] = out
        return out

    def bracket_pairs(self):
        """Basis index pairs (i, j) on which the truncated bracket can be nonzero."""
        for i in range(self.dim):
            di = self.word_degree(i)
            if di >= self.degree:
                continue
            for j in self.indices_of_degree_at_most(self.degree - di):
                yield (i, j)

    def ann_space(self) -> Subspace:
        """Span of squares [x, x], via polarization over degree-compatible pairs."""
        cached = getattr(self, "_ann_space", None)
        if cached is not None:
            return cached
        e = Echelon(self.dim)
        for i, j in self.bracket_pairs():
            if j < i:
                continue
            v = dict(self.pair(i, j))
            if i != j:
                sp_axpy(v, ONE, self.pair(j, i))
            e.add(v)
        out = e.subspace()
        self._ann_space = out
        return out

    def sym_bracket_span(self, U: Subspace) -> Subspace:
        """Span of [u, f] + [f, u] for u in U and f in the whole algebra."""
        e = Echelon(self.dim)
        for u in U.basis:
            su = sp(u)
            for j in self.indices_of_degree_at_most(self.degree - 1):
                v = self.bracket_sparse(su, {j: ONE})
                sp_axpy(v, ONE, self.bracket_sparse({j: ONE}, su))
                e.add(v)
        return e.subspace()

    def truncation_rows(self, smaller_dim: int) -> tuple[Vec, ...]:
        """Matrix of the prefix projection onto a lower-degree free algebra."""
        return tuple(
            tuple(ONE if j == i else rat(0) for j in range(self.dim))
            for i in range(smaller_dim)
        )


@lru_cache(maxsize=32)
def free_nilpotent(letters: int, degree: int) -> FreeNilpotentLeibniz:
    return FreeNilpotentLeibniz(letters, degree)


@dataclass(frozen=True)
class Presentation:
    """Surjection ev: F -> Q from a truncated free Leibniz algebra.

    `relations` is ker(ev).  At finite truncation ev is a homomorphism
    only on basis pairs of total word degree <= F.degree (checked at
    construction); correspondingly `relations` need not be a two-sided
    ideal of F when Q is not nilpotent of class <= F.degree.
    """

    free: FreeNilpotentLeibniz
    target: LeibnizAlgebra
    ev: Hom
    relations: Subspace
    generator_indices: tuple

    @property
    def degree(self) -> int:
        return self.free.degree


def _evaluation_columns(F: FreeNilpotentLeibniz, Q: LeibnizAlgebra, gens) -> list:
    cols = [None] * F.dim
    for k, v in enumerate(gens):
        cols[k] = sp(v)
    for i in range(F.letters, F.dim):
        w = F.words[i]
        head = F.word_index[w[:-1]]
        last = F.word_index[w[-1:]]
        cols[i] = Q.bracket_sparse(cols[head], cols[last])
    return cols


def _generated_subalgebra(Q: LeibnizAlgebra, gens) -> Subspace:
    e = Echelon(Q.dim)
    basis = []
    work = []
    for g in gens:
        sg = sp(g)
        if e.add(sg):
            basis.append(sg)
            work.append(sg)
    while work:
        new = []
        for u in work:
            for v in basis:
                for w in (Q.bracket_sparse(u, v), Q.bracket_sparse(v, u)):
                    if e.add(w):
                        new.append(w)
        basis.extend(new)
        work = new
    return e.subspace()


def present(Q: LeibnizAlgebra, generators, degree: int) -> Presentation:
    """Present Q by the free nilpotent Leibniz algebra on the given generators.

    `generators` is a sequence of vectors in Q.  Raises
    DoesNotGenerateError if they do not generate Q as an algebra, and
    DegreeTooSmallError if they do but words of length <= degree do not
    span Q.
    """
    gens = tuple(vec(g) for g in generators)
    if not gens:
        raise DoesNotGenerateError("empty generating set")
    for g in gens:
        if len(g) != Q.dim:
            raise ValueError("generator has wrong dimension")
    F = free_nilpotent(len(gens), degree)
    cols = _evaluation_columns(F, Q, gens)
    rows = tuple(
        tuple(cols[j].get(i, rat(0)) for j in range(F.dim)) for i in range(Q.dim)
    )
    image = Echelon(Q.dim)
    for c in cols:
        image.add(dict(c))
    if image.rank < Q.dim:
        if _generated_subalgebra(Q, gens).dim < Q.dim:
            raise DoesNotGenerateError(
                "given elements do not generate the algebra"
            )
        raise DegreeTooSmallError(
            f"generators reach the algebra only beyond word length {degree}"
        )
    # ev respects the bracket exactly on degree-compatible basis pairs
    ev = hom(F, Q, rows, check=True, pairs=F.bracket_pairs())
    relations = ev.kernel_space()
    return Presentation(
        free=F,
        target=Q,
        ev=ev,
        relations=relations,
        generator_indices=tuple(range(len(gens))),
    )


def lift_generators(pres: Presentation, f: Hom) -> tuple:
    """Preimages under f of the presentation's generator images.

    For a surjection f: G -> Q and a presentation ev: F -> Q, returns
    vectors g_k in G with f(g_k) = ev(x_k), one per free generator.
    """
    if f.target is not pres.target and f.target.dim != pres.target.dim:
        raise ValueError("extension target does not match presentation target")
    out = []
    for k in pres.generator_indices:
        q = tuple(pres.ev.matrix[i][k] for i in range(pres.target.dim))
        g = solve(f.matrix, q)
        if g is None:
            raise ValueError("map is not surjective onto a generator image")
        out.append(g)
    return tuple(out)
