"""Exact arithmetic in rings of cyclotomic integers.

An element of Z[w], with w a primitive N-th root of unity, is stored as an
integer coefficient vector on the power basis 1, w, ..., w^(phi(N)-1) and is
reduced eagerly modulo the N-th cyclotomic polynomial.  On that basis an
element is zero exactly when every stored coefficient is zero, which is what
makes downstream rank and determinant decisions exact.

ExactScalar layers a positive integer denominator on top of CycInt, giving
the field Q(w) so that elimination pivots can be inverted without floating
point.  Inverses are computed by solving c * x = 1 as a rational linear
system on the power basis.
"""

from __future__ import annotations

import cmath
import functools
import math
from fractions import Fraction

from .errors import DivisionByZero

__all__ = [
    "CycInt",
    "ExactScalar",
    "cyclotomic_poly",
    "root_power",
    "euler_phi",
    "divisors",
    "is_prime",
    "is_prime_power",
]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires a positive integer")
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError("divisors requires a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    return n > 1 and _factorize(n) == {n: 1}


def is_prime_power(n: int) -> bool:
    return n > 1 and len(_factorize(n)) == 1


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(num, den):
    # Integer polynomial long division; den must be monic.
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(len(num) - dn, 1)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    return q, num[:dn]


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed as the exact quotient of x^n - 1 by the product of the d-th
    cyclotomic polynomials over the proper divisors d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic_poly requires a positive integer")
    if n == 1:
        return (-1, 1)
    den = [1]
    for d in divisors(n)[:-1]:
        den = _poly_mul(den, cyclotomic_poly(d))
    num = [-1] + [0] * (n - 1) + [1]
    q, r = _poly_divmod(num, den)
    if any(r):
        raise AssertionError("cyclotomic division left a remainder")
    return tuple(q)


class _Ring:
    __slots__ = ("order", "phi", "rows")

    def __init__(self, order, phi, rows):
        self.order = order
        self.phi = phi
        self.rows = rows


@functools.lru_cache(maxsize=None)
def _ring(order: int) -> _Ring:
    # rows[t - phi] holds the basis coefficients of w^t for
    # t = phi .. max(2*phi - 2, order - 1).
    poly = cyclotomic_poly(order)
    phi = len(poly) - 1
    top = [-c for c in poly[:phi]]
    limit = max(2 * phi - 2, order - 1)
    rows = []
    cur = list(top)
    for _ in range(phi, limit + 1):
        rows.append(tuple(cur))
        carry = cur[phi - 1]
        cur = [0] + cur[: phi - 1]
        if carry:
            cur = [x + carry * y for x, y in zip(cur, top)]
    return _Ring(order, phi, tuple(rows))


def _mul_coeffs(ring: _Ring, a, b):
    phi = ring.phi
    conv = [0] * (2 * phi - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
    out = conv[:phi]
    rows = ring.rows
    for t in range(phi, 2 * phi - 1):
        c = conv[t]
        if c:
            row = rows[t - phi]
            for i in range(phi):
                ri = row[i]
                if ri:
                    out[i] += c * ri
    return tuple(out)


class CycInt:
    """A cyclotomic integer, reduced on the power basis of its order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        ring = _ring(order)
        coeffs = tuple(coeffs)
        if len(coeffs) != ring.phi:
            raise ValueError(
                f"order {order} needs exactly {ring.phi} coefficients, "
                f"got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, order: int, value: int) -> "CycInt":
        ring = _ring(order)
        return cls(order, (value,) + (0,) * (ring.phi - 1))

    @classmethod
    def zero(cls, order: int) -> "CycInt":
        return cls.from_int(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycInt":
        return cls.from_int(order, 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, CycInt):
            raise TypeError(f"expected CycInt, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return CycInt(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycInt(self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycInt(self.order, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return CycInt(self.order, _mul_coeffs(_ring(self.order), self.coeffs, other.coeffs))

    def scale(self, k: int) -> "CycInt":
        if k == 1:
            return self
        return CycInt(self.order, tuple(k * x for x in self.coeffs))

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not ring elements")
        result = CycInt.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def to_complex(self) -> complex:
        w = cmath.exp(-2j * cmath.pi / self.order)
        total = 0j
        power = 1 + 0j
        for c in self.coeffs:
            if c:
                total += c * power
            power *= w
        return total

    def __eq__(self, other):
        return (
            isinstance(other, CycInt)
            and other.order == self.order
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.order}, {self.coeffs})"


def root_power(order: int, k: int) -> CycInt:
    """w^k reduced to the power basis, for w a primitive order-th root."""
    ring = _ring(order)
    t = k % order
    if t < ring.phi:
        coeffs = [0] * ring.phi
        coeffs[t] = 1
        return CycInt(order, coeffs)
    return CycInt(order, ring.rows[t - ring.phi])


def _invert_coeffs(order: int, coeffs) -> tuple[tuple[int, ...], int]:
    """Solve c * x = 1 on the power basis; returns (numerators, denominator).

    Forward elimination is fraction-free over the integers; only the back
    substitution touches rationals.
    """
    ring = _ring(order)
    phi = ring.phi
    # Column j of the system is c * w^j.
    cols = []
    cur = list(coeffs)
    for j in range(phi):
        cols.append(tuple(cur))
        if j == phi - 1:
            break
        carry = cur[phi - 1]
        cur = [0] + cur[: phi - 1]
        if carry:
            top = ring.rows[0]
            cur = [x + carry * y for x, y in zip(cur, top)]
    aug = [[cols[j][i] for j in range(phi)] + [1 if i == 0 else 0] for i in range(phi)]

    sign_irrelevant = 0
    prev = 1
    for k in range(phi - 1):
        pivot_row = next((i for i in range(k, phi) if aug[i][k]), None)
        if pivot_row is None:
            raise DivisionByZero("element is not invertible")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
            sign_irrelevant ^= 1
        pk = aug[k][k]
        for i in range(k + 1, phi):
            aik = aug[i][k]
            row_i = aug[i]
            row_k = aug[k]
            for j in range(k + 1, phi + 1):
                row_i[j] = (pk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    if aug[phi - 1][phi - 1] == 0:
        raise DivisionByZero("element is not invertible")

    xs = [Fraction(0)] * phi
    for i in range(phi - 1, -1, -1):
        acc = Fraction(aug[i][phi])
        for j in range(i + 1, phi):
            acc -= aug[i][j] * xs[j]
        xs[i] = acc / aug[i][i]
    den = math.lcm(*(x.denominator for x in xs))
    nums = tuple(int(x * den) for x in xs)
    return nums, den


class ExactScalar:
    """An element of Q(w): a CycInt numerator over a positive integer denominator.

    The stored form is canonical: the denominator is positive and coprime to
    the integer content of the numerator, so equality is componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: CycInt, den: int = 1):
        if not isinstance(num, CycInt):
            raise TypeError("numerator must be a CycInt")
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num = -num
            den = -den
        if den != 1:
            if num.is_zero():
                den = 1
            else:
                g = math.gcd(den, *num.coeffs)
                if g > 1:
                    num = CycInt(num.order, tuple(c // g for c in num.coeffs))
                    den //= g
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, order: int, value: int) -> "ExactScalar":
        return cls(CycInt.from_int(order, value))

    @classmethod
    def zero(cls, order: int) -> "ExactScalar":
        return cls(CycInt.zero(order))

    @classmethod
    def one(cls, order: int) -> "ExactScalar":
        return cls(CycInt.one(order))

    @property
    def order(self) -> int:
        return self.num.order

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, int):
            return ExactScalar.from_int(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ExactScalar(self.num + o.num, self.den)
        return ExactScalar(self.num.scale(o.den) + o.num.scale(self.den), self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ExactScalar(self.num - o.num, self.den)
        return ExactScalar(self.num.scale(o.den) - o.num.scale(self.den), self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ExactScalar(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise DivisionByZero("cannot invert zero")
        nums, den = _invert_coeffs(self.order, self.num.coeffs)
        return ExactScalar(CycInt(self.order, nums).scale(self.den), den)

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

    def to_complex(self) -> complex:
        return self.num.to_complex() / self.den

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExactScalar.from_int(self.order, other)
        return (
            isinstance(other, ExactScalar)
            and other.num == self.num
            and other.den == self.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == 1:
            return f"ExactScalar({self.num!r})"
        return f"ExactScalar({self.num!r}, den={self.den})"
