"""Arithmetic in small finite fields F_q with q = p^k.

Elements travel as integer indices in [0, q). The index encodes the
coefficient vector (c_0, ..., c_{k-1}) of the element in the power basis
1, z, ..., z^{k-1}, packed in base p as sum(c_i * p^i). Index 0 is the
additive identity and index 1 the multiplicative identity, for every field.

The reduction modulus is the lexicographically smallest monic irreducible
polynomial of degree k over F_p, where candidates are ordered by their
low-degree-first coefficient vector read as a base-p integer. For q <= 256
full q x q addition and multiplication tables are precomputed; larger
fields fall back to on-the-fly polynomial arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from sepsym.errors import ParameterError, ScaleError

DEFAULT_MAX_ORDER = 1024
TABLE_MAX_ORDER = 256


def is_prime(m: int) -> bool:
    """Primality by trial division, adequate for the orders in scope."""
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def prime_power(q: int):
    """Return (p, k) with q == p**k and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return (q, 1)
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _poly_rem(f, g, p):
    """Remainder of f by monic g over F_p (coefficient lists, low degree first)."""
    r = list(f)
    dg = len(g) - 1
    for deg in range(len(r) - 1, dg - 1, -1):
        c = r[deg]
        if c:
            off = deg - dg
            for t in range(dg + 1):
                if g[t]:
                    r[off + t] = (r[off + t] - c * g[t]) % p
    return r[:dg]


def _is_irreducible(coeffs, p, k):
    """No monic factor of degree 1..k//2, by exhaustive trial division."""
    for d in range(1, k // 2 + 1):
        for c in range(p ** d):
            g = _digits(c, p, d) + [1]
            if not any(_poly_rem(coeffs, g, p)):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    for c in range(p ** k):
        coeffs = _digits(c, p, k) + [1]
        if _is_irreducible(coeffs, p, k):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{p}")


class FieldSpec:
    """A finite field F_q set up for brute-force scans.

    Instances are immutable after construction and safe to share between
    concurrent consumers. Use make_field or field_for_order to obtain one.
    """

    def __init__(self, p: int, k: int, modulus):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = tuple(modulus)
        self.add_table = None
        self.mul_table = None
        if self.q <= TABLE_MAX_ORDER:
            self._build_tables()

    def __repr__(self):
        return f"FieldSpec(q={self.q}, p={self.p}, k={self.k})"

    def _check(self, a):
        if not 0 <= a < self.q:
            raise ParameterError(f"element index {a} outside [0, {self.q})")

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{k-1}) of the element with index a."""
        self._check(a)
        return tuple(_digits(a, self.p, self.k))

    def elements(self) -> list[int]:
        """All q element indices in canonical order 0, 1, ..., q-1."""
        return list(range(self.q))

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.add_table is not None:
            return self.add_table[a][b]
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.mul_table is not None:
            return self.mul_table[a][b]
        if self.k == 1:
            return (a * b) % self.p
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse by table-derived lookup; a testing helper, not a hot path."""
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.mul_table is not None:
            return self.mul_table[a].index(1)
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise RuntimeError("no inverse found; the modulus cannot be irreducible")

    def _mul_poly(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da = _digits(a, p, k)
        db = _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        m = self.modulus
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                off = deg - k
                for t in range(k):
                    if m[t]:
                        prod[off + t] = (prod[off + t] - c * m[t]) % p
        out = 0
        mult = 1
        for c in prod[:k]:
            out += c * mult
            mult *= p
        return out

    def _find_generator(self) -> int:
        q = self.q
        for cand in range(2, q):
            x = cand
            order = 1
            while x != 1:
                x = self._mul_poly(x, cand)
                order += 1
                if order > q:
                    raise RuntimeError("unit walk did not close; modulus is reducible")
            if order == q - 1:
                return cand
        raise RuntimeError("multiplicative group is not cyclic; modulus is reducible")

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        if k == 1:
            self.add_table = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % p for b in range(q)] for a in range(q)]
            return
        digits = [_digits(a, p, k) for a in range(q)]
        powers = [p ** i for i in range(k)]
        add_rows = []
        for a in range(q):
            da = digits[a]
            row = [0] * q
            for b in range(q):
                db = digits[b]
                s = 0
                for i in range(k):
                    s += ((da[i] + db[i]) % p) * powers[i]
                row[b] = s
            add_rows.append(row)
        self.add_table = add_rows
        # Multiplication through exp/log over the cyclic group of units:
        # one generator walk gives every product as an exponent sum.
        g = self._find_generator()
        exp = [1]
        x = 1
        for _ in range(q - 2):
            x = self._mul_poly(x, g)
            exp.append(x)
        log = {v: i for i, v in enumerate(exp)}
        order = q - 1
        mul_rows = [[0] * q]
        for a in range(1, q):
            la = log[a]
            row = [0] * q
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % order]
            mul_rows.append(row)
        self.mul_table = mul_rows


@lru_cache(maxsize=None)
def _build_field(p: int, k: int) -> FieldSpec:
    return FieldSpec(p, k, _smallest_irreducible(p, k))


def make_field(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """Construct F_{p^k} with the lexicographically smallest monic irreducible modulus.

    Repeated calls with the same (p, k) return the same cached, immutable
    instance. Raises ParameterError for non-prime p or k < 1 and ScaleError
    when p**k exceeds max_order.
    """
    if not is_prime(p):
        raise ParameterError(f"p must be prime, got {p}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if p ** k > max_order:
        raise ScaleError(f"field order {p ** k} exceeds the bound {max_order}")
    return _build_field(p, k)


def field_for_order(q: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """make_field for a prime power given as a single order q."""
    pk = prime_power(q)
    if pk is None:
        raise ParameterError(f"{q} is not a prime power")
    return make_field(pk[0], pk[1], max_order=max_order)
