"""Exact arithmetic in small finite fields GF(q) with q = p^e.

Field elements are plain integers ``0..q-1``.  For prime q the integer is
the residue itself; for a prime power the base-p digits of the integer are
the coefficients of the element in the polynomial basis of GF(p)[z] modulo
a fixed irreducible polynomial.  This digit <-> element identification is
the canonical bijection used throughout the package; it sends 0 to the
zero element and, for prime q, is the identity.

Supported non-prime orders ship with a fixed modulus (coefficients listed
low degree first, including the leading 1):

    q = 4  : z^2 + z + 1
    q = 8  : z^3 + z + 1
    q = 9  : z^2 + 1
    q = 16 : z^4 + z + 1

Any other non-prime order is rejected.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

#: Irreducible moduli for the supported prime-power orders, little-endian.
FIELD_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_poly_mod(p: int, num: list[int], den: list[int]) -> list[int]:
    """Remainder of num modulo den over GF(p), coefficient lists low-first."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            factor = (c * inv_lead) % p
            for j, d in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - factor * d) % p
    return [c % p for c in num[:dd]] if dd > 0 else []


def irreducible_over_fp(p: int, coeffs: Iterable[int]) -> bool:
    """Trial-division irreducibility test for a polynomial over GF(p).

    ``coeffs`` lists the coefficients low degree first; the degree must be
    at least 1 and the leading coefficient nonzero.  Intended for the tiny
    moduli shipped with this module.
    """
    coeffs = [c % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    # A reducible polynomial has a factor of degree <= deg // 2.
    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            low, n = [], idx
            for _ in range(d):
                low.append(n % p)
                n //= p
            cand = low + [1]  # monic candidate divisor of degree d
            if not any(_fp_poly_mod(p, coeffs, cand)):
                return False
    return True


class Field:
    """Arithmetic tables for GF(q), q = p^e, with integer element labels.

    Instances are cached; obtain them through :func:`field`.
    """

    __slots__ = ("q", "p", "e", "modulus", "_add", "_mul", "_neg", "_inv")

    def __init__(self, q: int):
        p, e = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        if e == 1:
            self.modulus: tuple[int, ...] | None = None
        else:
            if q not in FIELD_MODULI:
                raise ValueError(f"no modulus shipped for field order {q}")
            self.modulus = FIELD_MODULI[q]
        self._build_tables()

    # -- table construction -------------------------------------------------

    def _build_tables(self) -> None:
        q, p, e = self.q, self.p, self.e
        if e == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            mod = list(self.modulus or ())
            add = [[0] * q for _ in range(q)]
            mul = [[0] * q for _ in range(q)]
            for a in range(q):
                va = self.coeff_vector(a)
                for b in range(q):
                    vb = self.coeff_vector(b)
                    add[a][b] = self.from_coeff_vector(
                        tuple((x + y) % p for x, y in zip(va, vb))
                    )
                    prod = [0] * (2 * e - 1)
                    for i, x in enumerate(va):
                        if x:
                            for j, y in enumerate(vb):
                                prod[i + j] = (prod[i + j] + x * y) % p
                    rem = _fp_poly_mod(p, prod, mod)
                    rem += [0] * (e - len(rem))
                    mul[a][b] = self.from_coeff_vector(tuple(rem))
            self._add = add
            self._mul = mul
        self._neg = [0] * q
        for a in range(q):
            for b in range(q):
                if self._add[a][b] == 0:
                    self._neg[a] = b
                    break
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    # -- element <-> coefficient-vector bijection ---------------------------

    def coeff_vector(self, a: int) -> tuple[int, ...]:
        """Base-p digits of ``a`` (length e), i.e. polynomial-basis coords."""
        v, n = [], a
        for _ in range(self.e):
            v.append(n % self.p)
            n //= self.p
        return tuple(v)

    def from_coeff_vector(self, v: Iterable[int]) -> int:
        n = 0
        for c in reversed(tuple(v)):
            n = n * self.p + c % self.p
        return n

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative inverse")
        return self._inv[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        for _ in range(n):
            r = self._mul[r][a]
        return r

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # -- plumbing ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __reduce__(self):
        return (field, (self.q,))


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"field order must be at least 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                raise ValueError(f"{q} is not a prime power")
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Return the shared :class:`Field` instance of order q."""
    return Field(q)
