"""The worked examples shipped as fixtures, named by their source location.

Each entry records the bracket table, preferred small generating sets
(used by the homology machinery to keep truncated free algebras small),
and the three example extensions.
"""

from __future__ import annotations

from .algebra import LeibnizAlgebra, abelian, hom
from .linalg import unit_vec


def ex_3_2_g() -> LeibnizAlgebra:
    # [a1, a3] = a1
    return LeibnizAlgebra(3, {(0, 2): {0: 1}}, names=("a1", "a2", "a3"))


def ex_3_2_q() -> LeibnizAlgebra:
    # [e1, e2] = e1
    return LeibnizAlgebra(2, {(0, 1): {0: 1}}, names=("e1", "e2"))


def ex_3_14_a_g() -> LeibnizAlgebra:
    # [a2, a3] = a2, [a3, a2] = -a2, [a3, a3] = a1
    return LeibnizAlgebra(
        3,
        {(1, 2): {1: 1}, (2, 1): {1: -1}, (2, 2): {0: 1}},
        names=("a1", "a2", "a3"),
    )


def ex_3_14_a_q() -> LeibnizAlgebra:
    # [e1, e2] = e1, [e2, e1] = -e1 (sign fixed so the stem map below
    # is a homomorphism)
    return LeibnizAlgebra(2, {(0, 1): {0: 1}, (1, 0): {0: -1}}, names=("e1", "e2"))


def ex_5_5_c() -> LeibnizAlgebra:
    # [a1, a3] = a2, [a2, a3] = a2, [a3, a3] = a1
    return LeibnizAlgebra(
        3,
        {(0, 2): {1: 1}, (1, 2): {1: 1}, (2, 2): {0: 1}},
        names=("a1", "a2", "a3"),
    )


def ex_5_5_d() -> LeibnizAlgebra:
    # five-dimensional perfect non-Lie Leibniz algebra
    return LeibnizAlgebra(
        5,
        {
            (1, 0): {2: -1},
            (0, 1): {2: 1},
            (0, 2): {0: -2},
            (2, 0): {0: 2},
            (2, 1): {1: -2},
            (1, 2): {1: 2},
            (4, 0): {3: 1},
            (3, 1): {4: 1},
            (3, 2): {3: -1},
            (4, 2): {4: 1},
        },
        names=("a1", "a2", "a3", "a4", "a5"),
    )


def ex_5_15_c() -> LeibnizAlgebra:
    # [a3, a3] = a1
    return LeibnizAlgebra(3, {(2, 2): {0: 1}}, names=("a1", "a2", "a3"))


def ex_5_15_e() -> LeibnizAlgebra:
    # [e1, e1] = e3, [e2, e4] = e2, [e4, e2] = -e2
    return LeibnizAlgebra(
        4,
        {(0, 0): {2: 1}, (1, 3): {1: 1}, (3, 1): {1: -1}},
        names=("e1", "e2", "e3", "e4"),
    )


def abelian_n(n: int) -> LeibnizAlgebra:
    return abelian(n)


def extension_ex_3_2():
    """f : g -> q, a1 -> e1, a2 -> 0, a3 -> e2 (Lie-trivial)."""
    g, q = ex_3_2_g(), ex_3_2_q()
    return hom(g, q, ((1, 0, 0), (0, 0, 1)))


def extension_remark_3():
    """f : g -> abelian 2-dim, a1 -> 0, a2 -> e1, a3 -> e2 (Lie-central)."""
    g = ex_3_2_g()
    return hom(g, abelian(2), ((0, 1, 0), (0, 0, 1)))


def extension_ex_3_14_a():
    """f : g -> q, a1 -> 0, a2 -> e1, a3 -> e2 (Lie-stem)."""
    g, q = ex_3_14_a_g(), ex_3_14_a_q()
    return hom(g, q, ((0, 1, 0), (0, 0, 1)))


ALGEBRAS = {
    "ex_3_2_g": ex_3_2_g,
    "ex_3_2_q": ex_3_2_q,
    "ex_3_14_a_g": ex_3_14_a_g,
    "ex_3_14_a_q": ex_3_14_a_q,
    "ex_5_5_c": ex_5_5_c,
    "ex_5_5_d": ex_5_5_d,
    "ex_5_15_c": ex_5_15_c,
    "ex_5_15_e": ex_5_15_e,
    "abelian_1": lambda: abelian(1),
    "abelian_2": lambda: abelian(2),
    "abelian_3": lambda: abelian(3),
    "abelian_4": lambda: abelian(4),
}

EXTENSIONS = {
    "ex_3_2": extension_ex_3_2,
    "remark_3": extension_remark_3,
    "ex_3_14_a": extension_ex_3_14_a,
}


def _gens(dim, idxs):
    return tuple(unit_vec(dim, i) for i in idxs)


# Preferred generating sets (pairs, for the presentation-independence
# oracle). Each set generates the algebra; minimality keeps the truncated
# free algebras small.
GENERATORS = {
    "ex_3_2_g": (_gens(3, (0, 1, 2)), None),
    "ex_3_2_q": (_gens(2, (0, 1)), None),
    "ex_3_14_a_g": (_gens(3, (1, 2)), _gens(3, (0, 1, 2))),
    "ex_3_14_a_q": (_gens(2, (0, 1)), None),
    "ex_5_5_c": (_gens(3, (2,)), _gens(3, (1, 2))),
    "ex_5_5_d": (_gens(5, (0, 1, 3)), _gens(5, (0, 1, 4))),
    "ex_5_15_c": (_gens(3, (1, 2)), _gens(3, (0, 1, 2))),
    "ex_5_15_e": (_gens(4, (0, 1, 3)), None),
    "abelian_1": (_gens(1, (0,)), None),
    "abelian_2": (_gens(2, (0, 1)), None),
    "abelian_3": (_gens(3, (0, 1, 2)), None),
    "abelian_4": (_gens(4, (0, 1, 2, 3)), None),
}


def generators_for(name: str):
    """Primary generating set for a corpus algebra (full basis fallback)."""
    pair = GENERATORS.get(name)
    return pair[0] if pair else None


def generator_pair(name: str):
    """Two distinct generating sets (presentation-independence oracle)."""
    primary, secondary = GENERATORS[name]
    if secondary is None:
        if len(primary) == 1:
            secondary = (tuple(2 * c for c in primary[0]),)
        else:
            tweaked = tuple(a + b for a, b in zip(primary[0], primary[1]))
            secondary = (tweaked,) + primary[1:]
    return primary, secondary
