"""Exact arithmetic in real quadratic fields Q(sqrt(D)).

Every number is stored as ``a + b*sqrt(D)`` with rational ``a`` and ``b``.
Comparisons and floors never touch floating point: signs are settled by
comparing ``a**2`` against ``b**2 * D`` in integers, and floors bracket
``B*sqrt(D)`` between consecutive integer square roots.

>>> phi = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
>>> phi * phi
QuadExt(3/2, 1/2, D=5)
>>> phi.floor()
1
"""

from __future__ import annotations

import decimal
import math
import operator
from fractions import Fraction
from numbers import Rational

from .errors import FieldMismatchError

__all__ = [
    "QuadExt",
    "arith",
    "sign",
    "floor_value",
    "ceil_value",
    "int_pow",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def _floor_sqrt_multiple(B: int, D: int) -> int:
    """floor(B * sqrt(D)) for integer B and non-square D > 0."""
    if B >= 0:
        return math.isqrt(B * B * D)
    # B*sqrt(D) is irrational for B != 0, so the ceiling is isqrt + 1
    return -(math.isqrt(B * B * D) + 1)


class QuadExt:
    """An element ``a + b*sqrt(D)`` of Q(sqrt(D)).

    Instances are immutable. Plain ints and Fractions are promoted into the
    field of the other operand, so ``1 + alpha`` and ``alpha / 3`` work.
    Combining two QuadExt values with different ``D`` raises
    :class:`FieldMismatchError`.
    """

    __slots__ = ("_a", "_b", "_D")

    def __init__(self, a, b, D: int) -> None:
        if not isinstance(D, int) or D <= 0:
            raise ValueError(f"discriminant must be a positive integer, got {D!r}")
        r = math.isqrt(D)
        if r * r == D:
            raise ValueError(f"discriminant {D} is a perfect square")
        self._a = _as_fraction(a)
        self._b = _as_fraction(b)
        self._D = D

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, D: int) -> QuadExt:
        # skips validation; only for results of field operations
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._D = D
        return obj

    @classmethod
    def rational(cls, value, D: int) -> QuadExt:
        return cls(value, 0, D)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def D(self) -> int:
        return self._D

    def is_rational(self) -> bool:
        return self._b == 0

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other._D != self._D:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(sqrt({self._D})) and Q(sqrt({other._D}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._raw(Fraction(other), Fraction(0), self._D)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self._a + o._a, self._b + o._b, self._D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self._a - o._a, self._b - o._b, self._D)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, o._a, o._b
        return QuadExt._raw(a * c + b * d * self._D, a * d + b * c, self._D)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt._raw(-self._a, -self._b, self._D)

    def __pos__(self):
        return self

    def conjugate(self) -> QuadExt:
        return QuadExt._raw(self._a, -self._b, self._D)

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._D

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            # norm vanishes only at zero because D is not a square
            raise ZeroDivisionError("inverse of zero in quadratic field")
        return QuadExt._raw(self._a / n, -self._b / n, self._D)

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

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return int_pow(self, k)

    # -- order ----------------------------------------------------------------

    def sign(self) -> int:
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: whichever of a^2, b^2 D dominates decides
        lhs = a.numerator ** 2 * b.denominator ** 2
        rhs = b.numerator ** 2 * a.denominator ** 2 * self._D
        return sa if lhs > rhs else sb

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self._D == other._D and self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._D))

    def _ordering(op):
        def method(self, other):
            try:
                return op(self._cmp(other), 0)
            except TypeError:
                return NotImplemented

        return method

    __lt__ = _ordering(operator.lt)
    __le__ = _ordering(operator.le)
    __gt__ = _ordering(operator.gt)
    __ge__ = _ordering(operator.ge)
    del _ordering

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # -- integer parts ----------------------------------------------------------

    def floor(self) -> int:
        a, b, D = self._a, self._b, self._D
        if b == 0:
            return math.floor(a)
        # write the value as (A + B sqrt(D)) / C with C > 0
        C = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        A = a.numerator * (C // a.denominator)
        B = b.numerator * (C // b.denominator)
        s = _floor_sqrt_multiple(B, D)
        # s < B sqrt(D) < s + 1, and no multiple of C lies strictly inside
        # (A + s, A + s + 1), so the floor is decided by A + s alone
        return (A + s) // C

    def ceil(self) -> int:
        return -((-self).floor())

    __floor__ = floor
    __ceil__ = ceil

    def frac(self) -> QuadExt:
        return self - self.floor()

    # -- display ------------------------------------------------------------------

    def __float__(self):
        # display and rendering only
        return float(self.to_decimal(30))

    def to_decimal(self, digits: int = 20) -> decimal.Decimal:
        """Value rounded to ``digits`` significant digits."""
        ctx = decimal.Context(prec=digits + 15)
        root = ctx.sqrt(decimal.Decimal(self._D))
        a = ctx.divide(decimal.Decimal(self._a.numerator), decimal.Decimal(self._a.denominator))
        b = ctx.divide(decimal.Decimal(self._b.numerator), decimal.Decimal(self._b.denominator))
        value = ctx.add(a, ctx.multiply(b, root))
        return decimal.Context(prec=digits).plus(value)

    def __repr__(self):
        return f"QuadExt({self._a}, {self._b}, D={self._D})"

    def __str__(self):
        if self._b == 0:
            return str(self._a)
        op = "+" if self._b > 0 else "-"
        return f"{self._a} {op} {abs(self._b)}*sqrt({self._D})"


def arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two field elements."""
    if not isinstance(x, QuadExt) or not isinstance(y, QuadExt):
        raise TypeError("arith expects two QuadExt values")
    if x.D != y.D:
        raise FieldMismatchError(f"D mismatch: {x.D} vs {y.D}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("division by zero in quadratic field")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def sign(x: QuadExt) -> int:
    return x.sign()


def floor_value(x: QuadExt) -> int:
    return x.floor()


def ceil_value(x: QuadExt) -> int:
    return x.ceil()


def int_pow(x: QuadExt, k: int) -> QuadExt:
    """x**k by repeated squaring; negative exponents go through the inverse."""
    if k < 0:
        if not x:
            raise ZeroDivisionError("zero raised to a negative power")
        x = x.inverse()
        k = -k
    result = QuadExt._raw(Fraction(1), Fraction(0), x.D)
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result
