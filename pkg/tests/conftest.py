"""Shared generators for the randomized suites.

Everything takes an explicit random.Random so a failing case can be
reproduced from the seed alone.
"""

import random

import pytest

from eulerlink.complexes import (Simplex, SimplicialComplex, SimplicialMap,
                                 build_complex, validate_map)
from eulerlink.dyadic import Dyadic
from eulerlink.functions import ConstructibleFunction


def random_complex(rng: random.Random, max_vertices: int = 8,
                   max_dim: int = 3) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, 6)):
        d = rng.randint(0, min(max_dim, n - 1))
        facets.append(Simplex(rng.sample(range(n), d + 1)))
    return build_complex(facets)


def random_function(rng: random.Random, k: SimplicialComplex,
                    lo: int = -3, hi: int = 3) -> ConstructibleFunction:
    return ConstructibleFunction(k, [Dyadic(rng.randint(lo, hi))
                                     for _ in k.simplices])


def random_simplicial_map(rng: random.Random, k: SimplicialComplex,
                          l: SimplicialComplex,
                          attempts: int = 80) -> SimplicialMap:
    """A valid map k -> l; falls back to a constant map, which always is."""
    for _ in range(attempts):
        vm = {v: rng.choice(l.vertex_ids) for v in k.vertex_ids}
        f = SimplicialMap(k, l, vm)
        if not validate_map(f):
            return f
    w = l.vertex_ids[0]
    return SimplicialMap(k, l, {v: w for v in k.vertex_ids})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0)
