"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as a vector of phi(N) rational coordinates with
respect to the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1), always
reduced modulo the N-th cyclotomic polynomial Phi_N.  All arithmetic is
exact: rationals are `fractions.Fraction`, never floats.

Elements of different conductors are deliberately incomparable; use
`embed` (or `common_field`) to move into a larger field first.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

Rational = Fraction


class ConductorMismatch(ValueError):
    """Raised when combining elements of different cyclotomic fields."""


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient.

    >>> [euler_phi(n) for n in (1, 2, 6, 12)]
    [1, 1, 2, 4]
    """
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_exact_div(a: list[int], b: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials, constant term first; b is monic
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("division was not exact")
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    Start from t^n - 1 and divide out Phi_d for every proper divisor d;
    each division is exact over the integers.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be >= 1")
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    deg_b = len(b) - 1
    lead = b[-1]
    if len(a) < len(b):
        return [], a
    out = [Fraction(0)] * (len(a) - deg_b)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + deg_b] / lead
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(out), _trim(a)


def _reduce_mod_phi(conductor: int, vec: list[Fraction]) -> tuple[Fraction, ...]:
    phi_poly = cyclotomic_polynomial(conductor)
    k = len(phi_poly) - 1
    for d in range(len(vec) - 1, k - 1, -1):
        c = vec[d]
        if c:
            vec[d] = Fraction(0)
            base = d - k
            for i in range(k):
                if phi_poly[i]:
                    vec[base + i] -= c * phi_poly[i]
    vec = vec[:k] if len(vec) >= k else vec + [Fraction(0)] * (k - len(vec))
    return tuple(vec)


class CycNumber:
    """An element of Q(zeta_N) in reduced power-basis coordinates.

    Supports field arithmetic through the usual operators; ints and
    Fractions coerce to the element's own field.  Equality means: same
    conductor, identical coordinates.

    >>> z = zeta_power(6, 1)
    >>> z + z**5     # zeta_6^5 = 1 - zeta_6
    CycNumber(6, ['1', '0'])
    >>> (1 + zeta_power(4, 1)).inverse()
    CycNumber(4, ['1/2', '-1/2'])
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs) -> None:
        phi = euler_phi(conductor)
        vec = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        if len(vec) != phi:
            raise ValueError(f"need exactly {phi} coordinates for conductor {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def from_poly(cls, conductor: int, coeffs) -> CycNumber:
        """Build from polynomial coordinates of any length, reducing mod Phi_N."""
        vec = [Fraction(c) for c in coeffs]
        return cls(conductor, _reduce_mod_phi(conductor, vec))

    @classmethod
    def from_rational(cls, conductor: int, value) -> CycNumber:
        return cls.from_poly(conductor, [Fraction(value)])

    @classmethod
    def zero(cls, conductor: int) -> CycNumber:
        return cls.from_rational(conductor, 0)

    @classmethod
    def one(cls, conductor: int) -> CycNumber:
        return cls.from_rational(conductor, 1)

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.conductor, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not any(o.coeffs):
            return self
        if not any(self.coeffs):
            return o
        return CycNumber(self.conductor,
                         [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not any(o.coeffs):
            return self
        return CycNumber(self.conductor,
                         [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        # zero and rational operands cover most matrix-entry products
        if not any(a):
            return self
        if not any(b):
            return o
        if not any(b[1:]):
            c = b[0]
            return CycNumber(self.conductor, [c * v for v in a])
        if not any(a[1:]):
            c = a[0]
            return CycNumber(self.conductor, [c * v for v in b])
        prod = _poly_mul(list(a), list(b))
        return CycNumber(self.conductor, _reduce_mod_phi(self.conductor, prod))

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        """Multiplicative inverse via the extended Euclidean algorithm in Q[t]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = list(self.coeffs), phi_poly
        s0, s1 = [Fraction(1)], []
        r0 = _trim(r0[:])
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            qs = _poly_mul(q, s1) if (q and s1) else []
            new_s = [Fraction(0)] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                new_s[i] += c
            for i, c in enumerate(qs):
                new_s[i] -= c
            s0, s1 = s1, _trim(new_s)
        # r0 = gcd(self, Phi_N); Phi_N is irreducible so r0 is a nonzero constant
        if len(r0) != 1:
            raise ArithmeticError("gcd with the cyclotomic polynomial was not constant")
        inv = [c / r0[0] for c in s0]
        return CycNumber(self.conductor, _reduce_mod_phi(self.conductor, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> CycNumber:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNumber.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, CycNumber) else other
        if not isinstance(o, CycNumber):
            return NotImplemented
        return self.conductor == o.conductor and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def embed(self, conductor: int) -> CycNumber:
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N); needs N | M."""
        if conductor % self.conductor != 0:
            raise ConductorMismatch(
                f"{self.conductor} does not divide {conductor}")
        scale = conductor // self.conductor
        vec = [Fraction(0)] * ((len(self.coeffs) - 1) * scale + 1)
        for i, c in enumerate(self.coeffs):
            vec[i * scale] = c
        return CycNumber(conductor, _reduce_mod_phi(conductor, vec))

    def to_json(self) -> dict:
        return {"conductor": self.conductor,
                "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycNumber:
        return cls(data["conductor"], [Fraction(s) for s in data["coeffs"]])

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mon = f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}"
            if c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{c}*{mon}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"CycNumber({self.conductor}, {[str(c) for c in self.coeffs]})"


def zeta_power(conductor: int, exponent: int) -> CycNumber:
    """zeta_N^j as a reduced element of Q(zeta_N).

    >>> zeta_power(4, 2)
    CycNumber(4, ['-1', '0'])
    """
    j = exponent % conductor
    vec = [Fraction(0)] * (j + 1)
    vec[j] = Fraction(1)
    return CycNumber.from_poly(conductor, vec)


def order_of_unit(a: CycNumber) -> int | None:
    """Smallest k >= 1 with a^k = 1, or None if a is not a root of unity.

    Every root of unity in Q(zeta_N) has order dividing lcm(2, N), so the
    scan stops there.
    """
    if a.is_zero():
        raise ZeroDivisionError("zero is not a unit")
    bound = a.conductor if a.conductor % 2 == 0 else 2 * a.conductor
    one = CycNumber.one(a.conductor)
    acc = a
    for k in range(1, bound + 1):
        if acc == one:
            return k
        acc = acc * a
    return None


def common_field(a: CycNumber, b: CycNumber) -> tuple[CycNumber, CycNumber]:
    """Embed both elements into Q(zeta_lcm) so they can be combined."""
    m = math.lcm(a.conductor, b.conductor)
    return a.embed(m), b.embed(m)


def roots_of_unity(conductor: int) -> list[CycNumber]:
    """All roots of unity in Q(zeta_N): the group generated by -1 and zeta_N."""
    seen = {}
    for j in range(conductor):
        for sign in (1, -1):
            w = sign * zeta_power(conductor, j)
            seen[w.coeffs] = w
    return list(seen.values())


def _integer_nth_root(value: int, n: int) -> int | None:
    # exact n-th root of a nonnegative integer, or None
    if value < 0:
        raise ValueError("negative value")
    if value in (0, 1):
        return value
    r = round(value ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** n == value:
            return cand
    return None


def nth_root_in_field(a: CycNumber, n: int) -> CycNumber | None:
    """Some b in Q(zeta_N) with b^n = a, searching b in Q_{>0} x (roots of unity).

    Covers every product of a positive rational and a root of unity; for
    values whose roots exist in the field but lie outside that set it
    returns None (full number-field factorization is out of scope here).
    """
    if a.is_zero():
        return CycNumber.zero(a.conductor)
    for w in roots_of_unity(a.conductor):
        t = a * (w ** n).inverse()
        if t.is_rational():
            r = t.rational_value()
            if r > 0:
                num = _integer_nth_root(r.numerator, n)
                den = _integer_nth_root(r.denominator, n)
                if num is not None and den is not None:
                    return Fraction(num, den) * w
    return None
