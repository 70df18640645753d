"""Orbits of coordinate permutations on F_q^n, as canonical sorted vectors.

Two vectors lie in the same orbit exactly when they agree as multisets, so
the weakly increasing reordering is a canonical representative and the
orbit space is the set of all weakly increasing length-n index vectors,
of which there are binom(n+q-1, q-1).
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator

from sepsym.errors import ParameterError, ScaleError
from sepsym.gf import FieldSpec

DEFAULT_ORBIT_BOUND = 10_000_000


def canonicalize(v: Iterable[int]) -> tuple[int, ...]:
    """Canonical representative of the orbit of v: the sorted index vector."""
    return tuple(sorted(v))


def enumerate_orbits(spec: FieldSpec, n: int,
                     bound: int = DEFAULT_ORBIT_BOUND) -> Iterator[tuple[int, ...]]:
    """Stream every orbit representative in lexicographic order.

    Yields each weakly increasing length-n vector over [0, q) exactly once,
    with constant memory. A single stream must not be shared between
    concurrent consumers; create one stream per consumer instead.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    total = math.comb(n + spec.q - 1, spec.q - 1)
    if total > bound:
        raise ScaleError(f"{total} orbits exceed the enumeration bound {bound}")
    return iter(itertools.combinations_with_replacement(range(spec.q), n))
