"""Finite fields GF(p^m) as dense lookup tables.

Element labels are 0..q-1; label i stands for the polynomial whose base-p
digits (little-endian) are its coefficients, so 0 and 1 are the additive and
multiplicative identities and labels 0..p-1 are the prime subfield.  The
reducing modulus is the monic irreducible polynomial of degree m whose
non-leading coefficient vector has the smallest base-p little-endian encoding
(found by exhaustive search): x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for
GF(9), x^4+x+1 for GF(16).
"""

from __future__ import annotations

from .errors import NotPrimePower


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q == p**m and p prime, or None."""
    if q < 2:
        return None
    p = None
    n = q
    for d in range(2, q + 1):
        if d * d > q:
            break
        if n % d == 0:
            p = d
            break
    if p is None:
        return (q, 1)  # q itself is prime
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return (p, m) if n == 1 else None


def _digits(value: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(value % base)
        value //= base
    return tuple(out)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(dividend, divisor, p):
    """Remainder of dividend by a monic divisor, coefficients mod p."""
    rem = [c % p for c in dividend]
    d = len(divisor) - 1
    for top in range(len(rem) - 1, d - 1, -1):
        c = rem[top]
        if c:
            rem[top] = 0
            for j in range(d):
                rem[top - d + j] = (rem[top - d + j] - c * divisor[j]) % p
    return rem[:d]


def _monic(value: int, p: int, degree: int) -> list[int]:
    return list(_digits(value, p, degree)) + [1]


def _is_irreducible(poly, p):
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for value in range(p**d):
            if any(_poly_rem(poly, _monic(value, p, d), p)):
                continue
            return False
    return True


def _smallest_irreducible(p: int, m: int) -> list[int]:
    for value in range(p**m):
        candidate = _monic(value, p, m)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    """GF(q) with precomputed addition/multiplication/inverse tables."""

    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise NotPrimePower(f"{q} is not a prime power")
        self.q = q
        self.p, self.m = pm
        self.modulus = tuple(_smallest_irreducible(self.p, self.m))
        coeffs = [_digits(i, self.p, self.m) for i in range(q)]
        index = {c: i for i, c in enumerate(coeffs)}
        self.add_table = tuple(
            tuple(index[tuple((x + y) % self.p for x, y in zip(a, b))] for b in coeffs)
            for a in coeffs
        )
        self.mul_table = tuple(
            tuple(index[tuple(_poly_rem(_poly_mul(a, b, self.p), self.modulus, self.p))]
                  for b in coeffs)
            for a in coeffs
        )
        neg = [0] * q
        inv = [None] * q
        for a in range(q):
            for b in range(q):
                if self.add_table[a][b] == 0:
                    neg[a] = b
                if a and self.mul_table[a][b] == 1:
                    inv[a] = b
        self.neg_table = tuple(neg)
        self.inv_table = tuple(inv)

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"


def field_create(q: int) -> FiniteField:
    """Build GF(q).  Raises NotPrimePower when q is not a prime power >= 2."""
    return FiniteField(q)
