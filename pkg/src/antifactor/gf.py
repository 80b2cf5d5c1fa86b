"""Arithmetic in the Galois field GF(q) for prime powers q.

Field elements are plain ints in ``[0, q)``.  For q = p**k the int
``sum(c_i * p**i)`` encodes the residue polynomial ``sum(c_i * X**i)``
modulo a fixed monic irreducible reduction polynomial of degree k over
GF(p); the prime subfield is therefore {0, ..., p-1} with its usual
mod-p arithmetic.  The reduction polynomial is the lexicographically
smallest monic irreducible of its degree (ordered by the base-p encoding
of the non-leading coefficients), so a given q always yields the same
field representation.

Keeping elements as bare ints keeps the hot loops in polynomial
evaluation and coloring cheap; all arithmetic goes through a GF context.
"""

from __future__ import annotations


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q == p**k, p prime; raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = None
    for cand in range(2, q + 1):
        if cand * cand > q:
            p = q  # q itself is prime
            break
        if q % cand == 0:
            p = cand
            break
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
        return True
    except ValueError:
        return False


# -- GF(p)[X] helpers on low-to-high coefficient lists ---------------------


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo monic den, coefficients mod p."""
    rem = list(num)
    d = len(den) - 1
    while len(rem) - 1 >= d and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < d:
            break
        factor = rem[-1]
        shift = len(rem) - 1 - d
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Irreducibility over GF(p): no roots, then trial division up to deg/2."""
    k = len(coeffs) - 1
    if k < 1:
        return False
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    if k == 1:
        return True
    for d in range(2, k // 2 + 1):
        for enc in range(p**d):
            den = _digits(enc, p, d) + [1]
            if not _poly_rem(coeffs, den, p):
                return False
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    for enc in range(p**k):
        coeffs = _digits(enc, p, k) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# Log/antilog tables are built up to this field size; beyond it products
# fall back to polynomial multiply-and-reduce.
_TABLE_LIMIT = 2**16


class GF:
    """Context for GF(q) arithmetic on int-encoded elements."""

    __slots__ = ("q", "p", "k", "reduction", "_log", "_exp")

    def __init__(self, q: int):
        p, k = factor_prime_power(q)
        self.q = q
        self.p = p
        self.k = k
        self.reduction = _smallest_irreducible(p, k)
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and self.q == other.q

    def __hash__(self):
        return hash(("GF", self.q))

    def elements(self) -> range:
        """All elements in canonical order 0, 1, ..., q-1."""
        return range(self.q)

    # -- raw polynomial product (used to bootstrap the tables) -------------

    def _mul_poly(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        da = _digits(a, p, k)
        db = _digits(b, p, k)
        conv = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    conv[i + j] = (conv[i + j] + ca * cb) % p
        rem = _poly_rem(conv, list(self.reduction), p)
        value = 0
        for c in reversed(rem):
            value = value * p + c
        return value

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        q = self.q
        if q == 2:
            self._exp = [1]
            self._log = [-1, 0]
            return
        # Multiplicative generator: order q-1 checked against the prime
        # factors of q-1.
        factors = []
        rest = q - 1
        d = 2
        while d * d <= rest:
            if rest % d == 0:
                factors.append(d)
                while rest % d == 0:
                    rest //= d
            d += 1
        if rest > 1:
            factors.append(rest)
        gen = None
        for cand in range(2, q):
            if all(self._pow_poly(cand, (q - 1) // f) != 1 for f in factors):
                gen = cand
                break
        if gen is None:
            raise AssertionError("no generator found")  # unreachable
        exp = [1] * (q - 1)
        log = [-1] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_poly(acc, gen)
        self._exp = exp
        self._log = log

    # -- element arithmetic -------------------------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        p = self.p
        if self.k == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        mul = 1
        while a or b:
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        p = self.p
        if self.k == 1:
            return (p - a) % p
        if p == 2:
            return a
        out = 0
        mul = 1
        while a:
            out += ((p - a % p) % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; e must be nonnegative."""
        self._check(a)
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ValueError("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def from_int(self, n: int) -> int:
        """Embed an integer via repeated addition of 1 (lands in the prime subfield)."""
        return n % self.p

    def indicator(self, i: int, x: int) -> int:
        """1 - (x - i)**(q-1): equals 1 when x == i and 0 otherwise."""
        self._check(i)
        self._check(x)
        return self.sub(1, self.pow(self.sub(x, i), self.q - 1))
