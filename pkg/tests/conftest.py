import functools
from fractions import Fraction

import pytest

from bmwtower.combinatorics import build_graph
from bmwtower.repbuilder import build_rep
from bmwtower.scalars import SYMBOLIC, GenericSpecialization

RATIONAL = GenericSpecialization(Fraction(2), Fraction(3))


@functools.lru_cache(maxsize=None)
def cached_rep(lam, n, mode="symbolic"):
    """Build-and-verify once per (irrep, mode) for the whole test session."""
    field = SYMBOLIC if mode == "symbolic" else RATIONAL
    return build_rep(lam, n, field=field)


@functools.lru_cache(maxsize=None)
def level_vertices(n):
    return tuple(build_graph(n).levels[n])


@pytest.fixture
def rational_field():
    return RATIONAL
