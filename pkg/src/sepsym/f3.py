"""Interval classification of the ternary defect.

The defect delta3(n) = size_sq(3, 3, n) - gamma(3, n) is predicted without
any counting by locating n between the boundaries

    a_r = 3**(r/2)    and    b_r = (-3 + sqrt(8 * 3**r + 1)) / 2.

Both are irrational for most r, so every membership test is reduced to a
big-integer comparison by monotone squaring: n >= a_r iff n*n >= 3**r, and
n >= b_r iff (2n+3)**2 >= 8*3**r + 1. Integers do land exactly on
boundaries (n = 3**r at even r), which float comparisons would misplace.

For n >= 9, with r chosen so that a_{2r} <= n < a_{2r+2}, the five windows

    A = [a_{2r}, b_{2r})        B = [b_{2r}, a_{2r+1})
    C = [a_{2r+1}, 2*a_{2r})    D = [2*a_{2r}, b_{2r+1})
    E = [b_{2r+1}, a_{2r+2})

carry the term triples below, and the predicted defect is their sum,
1 on A and D and 0 on B, C, E. For 2 <= n <= 8 the defect is constantly 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from sepsym.errors import ParameterError
from sepsym.exactcount import floor_log

# kind -> (alpha, beta, delta)
KIND_TERMS = {
    "A": (0, 0, 1),
    "B": (0, -1, 1),
    "C": (-1, 0, 1),
    "D": (-1, 0, 2),
    "E": (-1, -1, 2),
}


def _sign(d: int) -> int:
    return (d > 0) - (d < 0)


def cmp_ar(n: int, r: int) -> int:
    """Order of n against a_r = 3**(r/2): -1, 0, or +1, decided exactly."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if r < 0:
        raise ParameterError(f"r must be >= 0, got {r}")
    return _sign(n * n - 3 ** r)


def cmp_br(n: int, r: int) -> int:
    """Order of n against b_r = (-3 + sqrt(8*3**r + 1))/2, decided exactly.

    n >= b_r iff 2n+3 >= sqrt(8*3**r + 1); both sides are positive, so one
    squaring settles it in integers.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if r < 0:
        raise ParameterError(f"r must be >= 0, got {r}")
    s = 2 * n + 3
    return _sign(s * s - (8 * 3 ** r + 1))


def alpha_of(n: int) -> int:
    """0 for n in [a_{2r}, a_{2r+1}), -1 for n in [a_{2r+1}, a_{2r+2})."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    r = floor_log(3, n)
    return 0 if cmp_ar(n, 2 * r + 1) < 0 else -1


def beta_of(n: int) -> int:
    """0 for n in [a_r, b_r), -1 for n in [b_r, a_{r+1}); defined for n >= 6."""
    if n < 6:
        raise ParameterError(f"beta is defined for n >= 6, got {n}")
    r = floor_log(3, n * n)
    return 0 if cmp_br(n, r) < 0 else -1


def delta_small_of(n: int) -> int:
    """1 for n in [3**r, 2*3**r), 2 for n in [2*3**r, 3**(r+1))."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    r = floor_log(3, n)
    return 1 if n < 2 * 3 ** r else 2


@dataclass(frozen=True)
class F3Class:
    n: int
    r: int
    kind: str
    alpha: int
    beta: int
    delta: int
    predicted_delta: int


def classify3(n: int) -> F3Class:
    """Locate n >= 9 in the five-window partition and read off the defect terms."""
    if n < 9:
        raise ParameterError(
            f"interval classification applies for n >= 9; got {n} (the defect is 0 below 9)")
    r = floor_log(3, n)
    if cmp_br(n, 2 * r) < 0:
        kind = "A"
    elif cmp_ar(n, 2 * r + 1) < 0:
        kind = "B"
    elif n < 2 * 3 ** r:
        kind = "C"
    elif cmp_br(n, 2 * r + 1) < 0:
        kind = "D"
    else:
        kind = "E"
    alpha, beta, delta = KIND_TERMS[kind]
    return F3Class(n=n, r=r, kind=kind, alpha=alpha, beta=beta, delta=delta,
                   predicted_delta=alpha + beta + delta)


def predicted_delta3(n: int) -> int:
    """Interval prediction of the defect: constantly 0 for 2 <= n <= 8, classified above."""
    if n < 2:
        raise ParameterError(f"the defect is defined for n >= 2, got {n}")
    if n <= 8:
        return 0
    return classify3(n).predicted_delta


def boundary_chain_ok(r: int) -> bool:
    """Exact check of a_r < b_r < a_{r+1}; the chain holds for every r >= 3.

    a_r < b_r unwinds to 12*a_r < 4*3**r - 8 and, squaring once more, to
    144*3**r < (4*3**r - 8)**2. For b_r < a_{r+1} the analogous first step
    leaves 8*3**r + 1 - 4*3**(r+1) - 9 on the small side, which is already
    negative; the second squaring is kept for the general shape.
    """
    if r < 0:
        raise ParameterError(f"r must be >= 0, got {r}")
    pw = 3 ** r
    rhs = 4 * pw - 8
    a_lt_b = rhs > 0 and 144 * pw < rhs * rhs
    lhs = 8 * pw + 1 - 12 * pw - 9
    b_lt_a1 = lhs < 0 or lhs * lhs < 144 * 3 * pw
    return a_lt_b and b_lt_a1
