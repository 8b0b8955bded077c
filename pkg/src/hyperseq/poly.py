"""Polynomials and truncated power series over GF(q).

Polynomials are immutable coefficient tuples, low degree first, with no
trailing zeros; the zero polynomial has the empty tuple and degree -1.
A :class:`SeriesPrefix` stores the first M coefficients of a formal power
series.  Coefficients beyond the stored precision are *unknown*, never
assumed zero: operations that would need them raise
:class:`~hyperseq.errors.PrecisionError`.

Text form used by the command line and the on-disk formats: comma-separated
digits, low degree first, so ``"1,1"`` is 1+x and ``"1,0,1"`` is 1+x^2.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import PrecisionError
from .fields import Field


class Poly:
    """An element of GF(q)[x]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} out of range for {field}")
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x_pow(cls, field: Field, n: int) -> "Poly":
        return cls(field, (0,) * n + (1,))

    @classmethod
    def parse(cls, field: Field, text: str) -> "Poly":
        """Parse comma-separated digits, low degree first ("1,1" -> 1+x)."""
        digits = [int(tok) for tok in text.strip().split(",") if tok.strip() != ""]
        if not digits:
            raise ValueError(f"empty polynomial text: {text!r}")
        return cls(field, digits)

    # -- basic queries ---------------------------------------------------------

    @property
    def deg(self) -> int:
        """Degree, with deg(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def coprime_to_x(self) -> bool:
        """True iff the constant coefficient is nonzero, i.e. gcd(a, x) = 1."""
        return self.constant_term != 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def padded(self, m: int) -> tuple[int, ...]:
        """Coefficients as a tuple of exactly m digits (requires deg < m)."""
        if self.deg >= m:
            raise ValueError(f"degree {self.deg} does not fit in {m} digits")
        return self.coeffs + (0,) * (m - len(self.coeffs))

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.field is not other.field:
            raise ValueError("mixed-field polynomial arithmetic")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, (F.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, (F.sub(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scaled(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, (F.mul(c, a) for a in self.coeffs))

    def shifted(self, n: int) -> "Poly":
        """Multiply by x^n."""
        if self.is_zero:
            return self
        return Poly(self.field, (0,) * n + self.coeffs)

    def divmod_by(self, den: "Poly") -> tuple["Poly", "Poly"]:
        self._check(den)
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dd = den.deg
        inv_lead = F.inv(den.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                factor = F.mul(c, inv_lead)
                quot[i - dd] = factor
                for j, d in enumerate(den.coeffs):
                    rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(factor, d))
        return Poly(F, quot), Poly(F, rem[:dd])

    def mod(self, den: "Poly") -> "Poly":
        return self.divmod_by(den)[1]

    def mul_mod(self, other: "Poly", modulus: "Poly") -> "Poly":
        """Schoolbook product reduced modulo ``modulus``."""
        return (self * other).mod(modulus)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor via the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.mod(b)
        if a.is_zero:
            return a
        return a.scaled(self.field.inv(a.coeffs[-1]))

    def inverse_mod(self, modulus: "Poly") -> "Poly":
        """Inverse modulo ``modulus`` (extended Euclid); ValueError if none."""
        F = self.field
        r0, r1 = modulus, self.mod(modulus)
        s0, s1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero:
            q, r = r0.divmod_by(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.deg != 0:
            raise ValueError("polynomial is not invertible modulo the given modulus")
        return s0.scaled(F.inv(r0.coeffs[0])).mod(modulus)

    # -- comparisons / rendering -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.field.q == other.field.q
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.coeffs))

    def digits_str(self) -> str:
        """Comma-digit form, low degree first; the zero polynomial is "0"."""
        if self.is_zero:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {self.coeffs!r})"


class SeriesPrefix:
    """The first M coefficients of a formal power series over GF(q).

    The stored length *is* the declared precision; nothing is ever
    zero-extended implicitly.  Use :meth:`from_poly` when a polynomial is
    intentionally read as a series (its tail really is zero).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("series prefix needs at least one coefficient")
        for c in cs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} out of range for {field}")
        self.field = field
        self.coeffs = cs

    @classmethod
    def from_poly(cls, poly: Poly, precision: int) -> "SeriesPrefix":
        """Read a polynomial as a series, zero-extended to ``precision``."""
        if poly.deg >= precision:
            raise ValueError("precision does not cover the polynomial degree")
        return cls(poly.field, poly.padded(precision))

    @classmethod
    def parse(cls, field: Field, text: str, precision: int | None = None) -> "SeriesPrefix":
        digits = [int(tok) for tok in text.strip().split(",") if tok.strip() != ""]
        if precision is not None and len(digits) != precision:
            raise ValueError(
                f"series prefix has {len(digits)} digits, declared precision is {precision}"
            )
        return cls(field, digits)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @property
    def in_y(self) -> bool:
        """Unit test: constant coefficient nonzero.

        Equivalent to every truncation being coprime to x^m; see
        :func:`y_membership_by_gcd` for the independent oracle.
        """
        return self.coeffs[0] != 0

    def coeff(self, i: int) -> int:
        if i >= len(self.coeffs):
            raise PrecisionError(
                f"coefficient {i} beyond stored precision {self.precision}"
            )
        return self.coeffs[i]

    def truncate_poly(self, m: int) -> Poly:
        """The polynomial formed by coefficients 0..m-1 (requires m <= M)."""
        if m < 1:
            raise ValueError("truncation order must be positive")
        if m > self.precision:
            raise PrecisionError(
                f"truncation to {m} digits exceeds stored precision {self.precision}"
            )
        return Poly(self.field, self.coeffs[:m])

    def head(self, m: int) -> "SeriesPrefix":
        if m > self.precision:
            raise PrecisionError(
                f"prefix of {m} digits exceeds stored precision {self.precision}"
            )
        return SeriesPrefix(self.field, self.coeffs[:m])

    def digits_str(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SeriesPrefix)
            and self.field.q == other.field.q
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.coeffs))

    def __repr__(self) -> str:
        return f"SeriesPrefix({self.field!r}, {self.coeffs!r})"


def y_membership_by_gcd(prefix: SeriesPrefix) -> bool:
    """Oracle for the unit test: gcd(prefix mod x^m, x^m) = 1 for every m <= M.

    Slower than reading the constant coefficient but derived directly from
    the coprimality definition; the two are cross-checked in the test suite.
    """
    F = prefix.field
    one = Poly.one(F)
    for m in range(1, prefix.precision + 1):
        g = prefix.truncate_poly(m).gcd(Poly.x_pow(F, m))
        if g != one:
            return False
    return True
