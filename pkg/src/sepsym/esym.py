"""Elementary symmetric evaluations and the power-scaled index sets.

esym_all reads the values s_1(v), ..., s_n(v) off the coefficients of the
product prod_i (1 + v_i z), built by an in-place convolution. That costs
O(n^2) field multiplications and no divisions, so it is exact in every
characteristic (Newton-style recurrences would divide by small integers
that vanish mod p).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from sepsym.errors import ParameterError
from sepsym.gf import FieldSpec, is_prime


def esym_all(v: Sequence[int], spec: FieldSpec) -> tuple[int, ...]:
    """The full value vector (s_1(v), ..., s_n(v)) over the field."""
    n = len(v)
    q = spec.q
    for x in v:
        if not 0 <= x < q:
            raise ParameterError(f"element index {x} outside [0, {q})")
    out = [0] * (n + 1)
    out[0] = 1
    add_t = spec.add_table
    mul_t = spec.mul_table
    if add_t is not None:
        for i in range(n):
            x = v[i]
            if x:
                mx = mul_t[x]
                for j in range(i + 1, 0, -1):
                    out[j] = add_t[out[j]][mx[out[j - 1]]]
    else:
        add = spec.add
        mul = spec.mul
        for i in range(n):
            x = v[i]
            if x:
                for j in range(i + 1, 0, -1):
                    out[j] = add(out[j], mul(x, out[j - 1]))
    return tuple(out[1:])


def fingerprint(v: Sequence[int], indices: Iterable[int], spec: FieldSpec) -> tuple[int, ...]:
    """Evaluations (s_t(v) for t in indices), in ascending index order."""
    n = len(v)
    idx = sorted(set(indices))
    for t in idx:
        if not 1 <= t <= n:
            raise ParameterError(f"index {t} outside [1, {n}]")
    values = esym_all(v, spec)
    return tuple(values[t - 1] for t in idx)


def index_set_nq(n: int, q: int, p: int) -> tuple[int, ...]:
    """The index set {j * p^m : 1 <= j < q, m >= 0, j * p^m <= n}, sorted.

    These are the degrees kept by the power-scaled separating family; for
    prime q = p the set is the classical {j * p^m : 1 <= j < p} one.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not is_prime(p):
        raise ParameterError(f"p must be prime, got {p}")
    m = q
    while m > 1 and m % p == 0:
        m //= p
    if m != 1 or q < p:
        raise ParameterError(f"q = {q} is not a power of p = {p}")
    vals = set()
    for j in range(1, min(q, n + 1)):
        t = j
        while t <= n:
            vals.add(t)
            t *= p
    return tuple(sorted(vals))
