"""Decide whether index sets of elementary symmetric functions separate orbits.

A set of indices T separates when the fingerprint map, sending an orbit
representative to its tuple of s_t values, is injective over all orbits.
Everything here is exhaustive: verdicts come from scanning every orbit, not
from any closed-form shortcut.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from sepsym.errors import ParameterError, ScaleError
from sepsym.esym import esym_all
from sepsym.exactcount import gamma
from sepsym.gf import FieldSpec
from sepsym.orbits import DEFAULT_ORBIT_BOUND, enumerate_orbits

MAX_SUBSET_SEARCH_N = 16


@dataclass(frozen=True)
class SeparationVerdict:
    separating: bool
    witness: tuple | None
    orbit_count: int
    fingerprint_count: int


def _normalize_indices(indices: Iterable[int], n: int) -> tuple[int, ...]:
    idx = tuple(sorted(set(indices)))
    for t in idx:
        if not 1 <= t <= n:
            raise ParameterError(f"index {t} outside [1, {n}]")
    return idx


def check_separating(spec: FieldSpec, n: int, indices: Iterable[int],
                     bound: int = DEFAULT_ORBIT_BOUND) -> SeparationVerdict:
    """Test injectivity of the fingerprint map over every orbit representative.

    The witness, present iff the verdict is negative, is the first collision
    met while scanning representatives in lexicographic order: the earliest
    representative carrying the same fingerprint, paired with the current one.
    """
    idx = _normalize_indices(indices, n)
    offsets = [t - 1 for t in idx]
    seen: dict = {}
    witness = None
    total = 0
    for rep in enumerate_orbits(spec, n, bound=bound):
        values = esym_all(rep, spec)
        fp = tuple(values[o] for o in offsets)
        prev = seen.get(fp)
        if prev is None:
            seen[fp] = rep
        elif witness is None:
            witness = (prev, rep)
        total += 1
    distinct = len(seen)
    return SeparationVerdict(separating=distinct == total, witness=witness,
                             orbit_count=total, fingerprint_count=distinct)


def check_minimal(spec: FieldSpec, n: int, indices: Iterable[int],
                  bound: int = DEFAULT_ORBIT_BOUND):
    """(is_minimal, redundant): whether no single index can be dropped.

    Requires a separating input set; each index whose removal leaves the set
    separating is reported as redundant.
    """
    idx = _normalize_indices(indices, n)
    if not check_separating(spec, n, idx, bound=bound).separating:
        raise ParameterError("minimality is defined only for separating sets")
    redundant = [t for t in idx
                 if check_separating(spec, n, tuple(u for u in idx if u != t),
                                     bound=bound).separating]
    return (not redundant, redundant)


def min_separating_size(spec: FieldSpec, n: int, bound: int = DEFAULT_ORBIT_BOUND,
                        max_n: int = MAX_SUBSET_SEARCH_N):
    """Smallest size of a separating index subset, with the first witness.

    Sizes are tried in ascending order starting at gamma(q, n); sets below
    that size cannot separate, since q**|T| fingerprints cannot cover all
    orbits. Within a size, subsets are tried in lexicographic order and the
    first success is returned.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ScaleError(f"subset search over {{1..{n}}} exceeds the bound n <= {max_n}")
    for k in range(gamma(spec.q, n), n + 1):
        for T in itertools.combinations(range(1, n + 1), k):
            if check_separating(spec, n, T, bound=bound).separating:
                return k, T
    raise RuntimeError("no separating subset found, though the full set always separates")
