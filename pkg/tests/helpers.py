"""Shared fixtures: cached per-algebra computations so the heavy degree
sweeps run once per session, not once per test."""

from functools import lru_cache

from leibcalc import (
    ann_ideal,
    extension,
    hopf_hl2,
    lie_center,
    liezation,
    precise_center,
    quotient,
)
from leibcalc.corpus import (
    ALGEBRAS,
    EXTENSIONS,
    generator_pair,
    generators_for,
)

# ex_5_5_c only stabilizes with one more degree than the default cap
DEGREE_CAP = {"ex_5_5_c": 5}

EXTENSION_SOURCES = {
    "ex_3_2": "ex_3_2_g",
    "remark_3": "ex_3_2_g",
    "ex_3_14_a": "ex_3_14_a_g",
}


def cap(name: str) -> int:
    return DEGREE_CAP.get(name, 4)


@lru_cache(maxsize=None)
def algebra(name: str):
    return ALGEBRAS[name]()


@lru_cache(maxsize=None)
def hl2(name: str, which: int = 0):
    gens = generators_for(name)
    if which:
        gens = generator_pair(name)[1]
    return hopf_hl2(algebra(name), gens, max_degree=cap(name))


@lru_cache(maxsize=None)
def pc(name: str):
    return precise_center(algebra(name), generators_for(name),
                          max_degree=cap(name))


@lru_cache(maxsize=None)
def fixture_extension(name: str):
    return extension(EXTENSIONS[name](),
                     generators=generators_for(EXTENSION_SOURCES[name]))


@lru_cache(maxsize=None)
def derived_extensions():
    """Fixture extensions plus liezations and center quotients: >= 10."""
    out = []
    for name in sorted(EXTENSIONS):
        out.append((f"fixture:{name}", cap(EXTENSION_SOURCES[name]),
                    fixture_extension(name)))
    for name in sorted(ALGEBRAS):
        Q = algebra(name)
        gens = generators_for(name)
        if ann_ideal(Q).dim:
            _, proj = liezation(Q)
            out.append((f"liezation:{name}", cap(name),
                        extension(proj, generators=gens)))
        zl = lie_center(Q)
        if zl.dim:
            _, proj = quotient(Q, zl)
            out.append((f"mod_lie_center:{name}", cap(name),
                        extension(proj, generators=gens)))
    return tuple(out)
