"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Every scalar appearing in the small-index theta-multiplier matrices lives in
Q(zeta_24): i = zeta_24^6, sqrt(i) = zeta_24^3, sqrt(2) = zeta_24^3 +
zeta_24^-3, e^{-pi i/4} = zeta_24^-3, and all the character values built from
them.  That field is the default coefficient ring of the whole package; see
:data:`CYC24` and the module-level helpers :func:`root_of_unity` /
:func:`from_rational`.

Multiplier matrices of index m need 4m-th roots of unity, so for m with
4m not dividing 24 the matrices live in Q(zeta_n) with n = lcm(24, 4m).
:func:`cyclotomic_field` returns the (cached) field of any even order, and
:meth:`CyclotomicField.embed` moves elements up a tower Q(zeta_a) -> Q(zeta_b)
for a | b.

Elements are stored as integer coordinate vectors over the power basis
1, zeta, ..., zeta^(phi(n)-1) with a single positive denominator, reduced so
that gcd(all numerators, denominator) = 1.  The representation is canonical:
equal field elements have identical coordinates.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d of n.
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # Exact division of integer polynomials, b monic.
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1]
        out[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> "CyclotomicField":
    return CyclotomicField(n)


class CyclotomicField:
    """The field Q(zeta_n) with zeta_n = e^{2 pi i / n}.

    Construct through :func:`cyclotomic_field` so each order is built once
    and element identity checks can compare field objects directly.
    """

    def __init__(self, n: int):
        phi = cyclotomic_poly(n)
        self.n = n
        self.degree = len(phi) - 1
        self._phi = phi
        # x^k mod Phi_n as integer vectors, for k up to max(n-1, 2*degree-2);
        # the upper range covers products of two reduced elements.  Phi is
        # monic, so x^degree = -sum(phi[j] x^j, j < degree).
        top = max(n - 1, 2 * self.degree - 2)
        powers = [None] * (top + 1)
        for k in range(self.degree):
            v = [0] * self.degree
            v[k] = 1
            powers[k] = v
        for k in range(self.degree, top + 1):
            prev = powers[k - 1]
            v = [0] + prev[:-1]
            lead = prev[-1]
            if lead:
                for j in range(self.degree):
                    v[j] -= lead * phi[j]
            powers[k] = v
        self._powers = [tuple(v) for v in powers]
        self._conj = [self._powers[(n - k) % n] for k in range(self.degree)]
        self._roots = [cmath.exp(2j * cmath.pi * k / n) for k in range(n)]
        self.zero = CycNumber(self, (0,) * self.degree, 1, _normalized=True)
        one = [0] * self.degree
        one[0] = 1
        self.one = CycNumber(self, tuple(one), 1, _normalized=True)

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def element(self, num, den=1) -> "CycNumber":
        """Element with the given numerator vector and denominator."""
        num = list(num)
        if len(num) > self.degree:
            num = self._reduce(num)
        else:
            num = num + [0] * (self.degree - len(num))
        if den < 0:
            num = [-c for c in num]
            den = -den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        return CycNumber(self, tuple(num), den, _normalized=True)

    def _reduce(self, coeffs: list[int]) -> list[int]:
        out = list(coeffs[: self.degree]) + [0] * (self.degree - min(len(coeffs), self.degree))
        for k in range(self.degree, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._powers[k]
                for j in range(self.degree):
                    out[j] += c * row[j]
        return out

    def zeta(self, k: int = 1) -> "CycNumber":
        """The root of unity zeta_n^k."""
        return self.element(list(self._powers[k % self.n]), 1)

    def from_fraction(self, q) -> "CycNumber":
        q = Fraction(q)
        num = [0] * self.degree
        num[0] = q.numerator
        return self.element(num, q.denominator)

    def embed(self, x: "CycNumber") -> "CycNumber":
        """Map an element of Q(zeta_a) into this field, for a | n."""
        if x.field is self:
            return x
        if self.n % x.field.n:
            raise ValueError(f"no embedding Q(zeta_{x.field.n}) -> Q(zeta_{self.n})")
        step = self.n // x.field.n
        num = [0] * (step * (x.field.degree - 1) + 1)
        for j, c in enumerate(x.num):
            num[step * j] = c
        return self.element(num, x.den)

    def sqrt_int(self, d: int) -> "CycNumber":
        """Exact square root of a positive squarefree integer, via Gauss sums.

        Requires 8 | n for the factor sqrt(2) and p | n for each odd prime
        p | d.
        """
        if d <= 0:
            raise ValueError("need a positive integer")
        out = self.one
        if d % 2 == 0:
            if self.n % 8:
                raise ValueError(f"sqrt(2) not in Q(zeta_{self.n})")
            out = out * (self.zeta(self.n // 8) + self.zeta(-self.n // 8))
            d //= 2
        p = 3
        while d > 1:
            if d % p == 0:
                d //= p
                if d % p == 0:
                    raise ValueError("argument must be squarefree")
                if self.n % p:
                    raise ValueError(f"sqrt({p}) not in Q(zeta_{self.n})")
                w = self.n // p
                g = self.zero
                for a in range(p):
                    g = g + self.zeta(w * (a * a % p))
                if p % 4 == 3:
                    # Gauss sum equals i*sqrt(p); divide out i.
                    g = g * self.zeta(-self.n // 4)
                out = out * g
            p += 2
        return out


class CycNumber:
    """An element of a fixed cyclotomic field, in canonical coordinates."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, _normalized=False):
        if not _normalized:
            x = field.element(num, den)
            num, den = x.num, x.den
        self.field = field
        self.num = num
        self.den = den

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def is_gaussian(self) -> bool:
        """True when the element lies in Q(i) = Q + Q*zeta_n^{n/4}."""
        j4 = self.field.n // 4
        return all(c == 0 for k, c in enumerate(self.num) if k not in (0, j4))

    # -- arithmetic -------------------------------------------------------

    def _pair(self, other):
        """Lift self and other into a common field; None when not coercible."""
        if isinstance(other, (int, Fraction)):
            return self, self.field.from_fraction(other)
        if not isinstance(other, CycNumber):
            return None
        if other.field is self.field:
            return self, other
        a, b = self.field.n, other.field.n
        big = cyclotomic_field(a * b // gcd(a, b))
        return big.embed(self), big.embed(other)

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return a.field.element([x + y for x, y in zip(a.num, b.num)], a.den)
        return a.field.element(
            [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return CycNumber(self.field, tuple(-c for c in self.num), self.den, _normalized=True)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, o = pair
        f = x.field
        a, b = x.num, o.num
        conv = [0] * (2 * f.degree - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return f.element(f._reduce(conv), x.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        # Extended Euclid in Q[x] against Phi_n.
        a = [Fraction(c, self.den) for c in self.num]
        b = [Fraction(c) for c in f._phi]
        sa, sb = [Fraction(1)], [Fraction(0)]
        while True:
            while a and a[-1] == 0:
                a.pop()
            if len(a) == 1:
                inv = 1 / a[0]
                coeffs = [c * inv for c in sa]
                den = 1
                for c in coeffs:
                    den = den * c.denominator // gcd(den, c.denominator)
                return f.element([int(c * den) for c in coeffs], den)
            q, r = _poly_divmod_frac(b, a)
            sq = _poly_sub_frac(sb, _poly_mul_frac(q, sa))
            b, sb = a, sa
            a, sa = r, sq

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "CycNumber":
        """Galois conjugation zeta -> zeta^{-1} (complex conjugation)."""
        f = self.field
        out = [0] * f.degree
        for j, c in enumerate(self.num):
            if c:
                row = f._conj[j]
                for k in range(f.degree):
                    out[k] += c * row[k]
        return f.element(out, self.den)

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        if other.field is not self.field:
            a, b = self.field.n, other.field.n
            big = cyclotomic_field(a * b // gcd(a, b))
            return big.embed(self) == big.embed(other)
        return self.num == other.num and self.den == other.den

    # Cross-field equality makes a consistent hash awkward; these values are
    # never used as dict keys, so hashing is disabled outright.
    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    # -- embeddings ---------------------------------------------------------

    def to_complex(self, precision: int = 53) -> complex:
        """Numeric value under zeta_n = e^{2 pi i / n}.

        With the default 53-bit precision returns a machine complex; higher
        precision goes through mpmath and still returns a machine complex
        after correct rounding of the high-precision value.
        """
        if precision < 53:
            raise ValueError("precision below 53 bits is not supported")
        f = self.field
        if precision == 53:
            s = 0j
            for j, c in enumerate(self.num):
                if c:
                    s += c * f._roots[j]
            return s / self.den
        import mpmath

        with mpmath.workprec(precision):
            s = mpmath.mpc(0)
            for j, c in enumerate(self.num):
                if c:
                    s += c * mpmath.expjpi(mpmath.mpf(2 * j) / f.n)
            s /= self.den
            return complex(s)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        # Shortest of: integer, fraction, Gaussian a+bi, coordinate vector.
        if self.is_rational():
            q = self.rational_value()
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        if self.is_gaussian():
            j4 = self.field.n // 4
            re = Fraction(self.num[0], self.den)
            im = Fraction(self.num[j4], self.den)
            rs = "" if re == 0 else str(re)
            sign = "-" if im < 0 else ("+" if rs else "")
            mag = abs(im)
            ims = "i" if mag == 1 else f"{mag}*i"
            return f"{rs}{sign}{ims}"
        body = ",".join(str(c) for c in self.num)
        return f"cyc{self.field.n}[{body}]/{self.den}" if self.den != 1 else f"cyc{self.field.n}[{body}]"

    def __repr__(self):
        return f"<{self} in Q(zeta_{self.field.n})>"

    # -- serialization -------------------------------------------------------

    def to_json(self):
        """Canonical encoding {"num": [...], "den": d}; gcd(nums, den) = 1."""
        obj = {"num": list(self.num), "den": self.den}
        if self.field.n != 24:
            obj["order"] = self.field.n
        return obj

    @staticmethod
    def from_json(obj) -> "CycNumber":
        field = cyclotomic_field(obj.get("order", 24))
        return field.element(obj["num"], obj["den"])


def _poly_divmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    out = [Fraction(0)] * max(len(a) - db, 1)
    inv = 1 / b[-1]
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] * inv
        out[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return out, a[:db]


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub_frac(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, bj in enumerate(b):
        a[j] -= bj
    return a


# ---------------------------------------------------------------------------
# The default coefficient field Q(zeta_24).

CYC24 = cyclotomic_field(24)

ZERO = CYC24.zero
ONE = CYC24.one


def root_of_unity(k: int) -> CycNumber:
    """zeta_24^k in canonical coordinates."""
    return CYC24.zeta(k)


def from_rational(q) -> CycNumber:
    return CYC24.from_fraction(q)


def imag_unit() -> CycNumber:
    return CYC24.zeta(6)


def sqrt2() -> CycNumber:
    return CYC24.zeta(3) + CYC24.zeta(-3)


def coerce24(x) -> CycNumber:
    """Coerce an int, Fraction, or CycNumber into Q(zeta_24)."""
    if isinstance(x, CycNumber):
        return x
    return CYC24.from_fraction(x)
