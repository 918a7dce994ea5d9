import random

import pytest

from cent2.matrices import Mat2
from cent2.ufd import GaussElem, IntElem, PolyElem


def rand_int_elem(rng: random.Random, bound: int = 40) -> IntElem:
    return IntElem(rng.randrange(-bound, bound + 1))


def rand_gauss_elem(rng: random.Random, bound: int = 12) -> GaussElem:
    return GaussElem(rng.randrange(-bound, bound + 1), rng.randrange(-bound, bound + 1))


def rand_poly_elem(rng: random.Random, p: int, max_deg: int = 4) -> PolyElem:
    return PolyElem.make(p, [rng.randrange(p) for _ in range(rng.randrange(max_deg + 2))])


def rand_lift(rng: random.Random, ctx) -> Mat2:
    """Random 2x2 matrix of canonical representatives of the context."""
    elems = ctx.elements
    return Mat2(*(elems[rng.randrange(len(elems))] for _ in range(4)))


def nonzero(sampler, rng, *args):
    while True:
        x = sampler(rng, *args)
        if not x.is_zero():
            return x


@pytest.fixture
def rng():
    return random.Random(987123)
