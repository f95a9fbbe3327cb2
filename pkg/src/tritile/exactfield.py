"""Exact arithmetic in the quadratic field Q(sqrt 3).

Every coordinate, squared length and area handled by the package is a
:class:`QS3` value ``p + q*sqrt(3)`` with rational ``p`` and ``q``.  Rationals
are plain :class:`fractions.Fraction` objects.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Fraction
Scalar = Union[int, Fraction, "QS3"]


class QS3:
    """Immutable element ``(pn + qn*sqrt(3)) / d`` of Q(sqrt 3).

    Internally both components share one positive denominator and
    ``gcd(pn, qn, d) == 1``, so the representation is canonical and equality
    is structural.  ``.p`` and ``.q`` expose the rational components.
    """

    __slots__ = ("_pn", "_qn", "_d", "_hash")

    def __init__(self, p: int | Fraction = 0, q: int | Fraction = 0) -> None:
        p = Fraction(p)
        q = Fraction(q)
        d = p.denominator * q.denominator // math.gcd(p.denominator, q.denominator)
        self._set(p.numerator * (d // p.denominator), q.numerator * (d // q.denominator), d)

    def _set(self, pn: int, qn: int, d: int) -> None:
        g = math.gcd(pn, qn, d)
        if g != 1:
            pn //= g
            qn //= g
            d //= g
        self._pn = pn
        self._qn = qn
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, pn: int, qn: int, d: int) -> QS3:
        # d must be positive; reduction happens here
        obj = cls.__new__(cls)
        obj._set(pn, qn, d)
        return obj

    @classmethod
    def coerce(cls, x: Scalar) -> QS3:
        if isinstance(x, QS3):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1)
        if isinstance(x, Fraction):
            return cls._raw(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to QS3")

    @classmethod
    def sqrt3(cls) -> QS3:
        return cls._raw(0, 1, 1)

    # -- components -------------------------------------------------------
    @property
    def p(self) -> Fraction:
        return Fraction(self._pn, self._d)

    @property
    def q(self) -> Fraction:
        return Fraction(self._qn, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """Raw ``(pn, qn, d)`` with value ``(pn + qn*sqrt3) / d``."""
        return self._pn, self._qn, self._d

    def is_rational(self) -> bool:
        return self._qn == 0

    def conjugate(self) -> QS3:
        return QS3._raw(self._pn, -self._qn, self._d)

    def norm(self) -> Fraction:
        """Field norm ``p^2 - 3 q^2``."""
        return Fraction(self._pn * self._pn - 3 * self._qn * self._qn, self._d * self._d)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> QS3:
        if not isinstance(other, QS3):
            if isinstance(other, (int, Fraction)):
                other = QS3.coerce(other)
            else:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return QS3._raw(self._pn + other._pn, self._qn + other._qn, d1)
        return QS3._raw(self._pn * d2 + other._pn * d1, self._qn * d2 + other._qn * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> QS3:
        return QS3._raw(-self._pn, -self._qn, self._d)

    def __sub__(self, other: Scalar) -> QS3:
        if not isinstance(other, QS3):
            if isinstance(other, (int, Fraction)):
                other = QS3.coerce(other)
            else:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return QS3._raw(self._pn - other._pn, self._qn - other._qn, d1)
        return QS3._raw(self._pn * d2 - other._pn * d1, self._qn * d2 - other._qn * d1, d1 * d2)

    def __rsub__(self, other: Scalar) -> QS3:
        return QS3.coerce(other) - self

    def __mul__(self, other: Scalar) -> QS3:
        if isinstance(other, int):
            return QS3._raw(self._pn * other, self._qn * other, self._d)
        if not isinstance(other, QS3):
            if isinstance(other, Fraction):
                other = QS3.coerce(other)
            else:
                return NotImplemented
        a, b, d1 = self._pn, self._qn, self._d
        c, e, d2 = other._pn, other._qn, other._d
        return QS3._raw(a * c + 3 * b * e, a * e + b * c, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> QS3:
        if not isinstance(other, QS3):
            if isinstance(other, (int, Fraction)):
                other = QS3.coerce(other)
            else:
                return NotImplemented
        c, e, d2 = other._pn, other._qn, other._d
        n = c * c - 3 * e * e
        if n == 0:
            # sqrt(3) is irrational, so the norm vanishes only at zero
            raise ZeroDivisionError("QS3 division by zero")
        a, b, d1 = self._pn, self._qn, self._d
        pn = (a * c - 3 * b * e) * d2
        qn = (b * c - a * e) * d2
        d = d1 * n
        if d < 0:
            pn, qn, d = -pn, -qn, -d
        return QS3._raw(pn, qn, d)

    def __rtruediv__(self, other: Scalar) -> QS3:
        return QS3.coerce(other) / self

    def __pow__(self, k: int) -> QS3:
        if k < 0:
            return QS3._raw(1, 0, 1) / (self ** -k)
        result = QS3._raw(1, 0, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def sign(self) -> int:
        return qs3_sign(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QS3):
            return self._pn == other._pn and self._qn == other._qn and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == QS3.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self._pn, self._qn, self._d))
        return h

    def __lt__(self, other: Scalar) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Scalar) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Scalar) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Scalar) -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return self._pn != 0 or self._qn != 0

    def __float__(self) -> float:
        return self._pn / self._d + (self._qn / self._d) * math.sqrt(3.0)

    def __repr__(self) -> str:
        return f"QS3({self.p}, {self.q})"

    def __str__(self) -> str:
        p, q = self.p, self.q
        if q == 0:
            return str(p)
        if p == 0:
            return f"{q}√3"
        return f"{p}{'+' if q > 0 else '-'}{abs(q)}√3"

    # -- serialization ----------------------------------------------------
    def to_strings(self) -> list[str]:
        """``[p_num, p_den, q_num, q_den]`` as decimal strings."""
        p, q = self.p, self.q
        return [str(p.numerator), str(p.denominator), str(q.numerator), str(q.denominator)]

    @classmethod
    def from_strings(cls, parts: list[str]) -> QS3:
        if len(parts) != 4:
            raise ValueError(f"expected 4 integer strings, got {len(parts)}")
        pn, pd, qn, qd = (int(s) for s in parts)
        if pd <= 0 or qd <= 0:
            raise ValueError("denominators must be positive")
        return cls(Fraction(pn, pd), Fraction(qn, qd))


ZERO = QS3(0)
ONE = QS3(1)
SQRT3 = QS3.sqrt3()


def qs3_arith(op: str, x: Scalar, y: Scalar) -> QS3:
    x = QS3.coerce(x)
    y = QS3.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def _sign_parts(pn: int, qn: int) -> int:
    if pn >= 0 and qn >= 0:
        return 1 if (pn or qn) else 0
    if pn <= 0 and qn <= 0:
        return -1
    # opposite signs: compare pn^2 with 3 qn^2
    diff = pn * pn - 3 * qn * qn
    s = 1 if pn > 0 else -1
    return s if diff > 0 else -s


def qs3_sign(x: QS3) -> int:
    """Exact sign of ``p + q*sqrt(3)``."""
    return _sign_parts(x._pn, x._qn)


def qs3_sqrt(x: QS3) -> QS3 | None:
    """Exact square root inside Q(sqrt 3), or None when it is not in the field."""
    s = x.sign()
    if s < 0:
        return None
    if s == 0:
        return ZERO
    p, q = x.p, x.q
    # (u + v sqrt3)^2 = u^2 + 3v^2 + 2uv sqrt3; u^2 is a root of t^2 - p t + 3q^2/4
    disc = p * p - 3 * q * q
    r = _rational_sqrt(disc)
    if r is None:
        return None
    for u2 in ((p + r) / 2, (p - r) / 2):
        u = _rational_sqrt(u2)
        if u is None:
            continue
        if u == 0:
            v = _rational_sqrt(p / 3)
            cand = None if v is None else QS3(0, v)
        else:
            cand = QS3(u, q / (2 * u))
        if cand is not None and cand * cand == x:
            return cand if cand.sign() > 0 else -cand
    return None


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def qs3_approx(x: Scalar, digits: int) -> str:
    """Decimal expansion of ``x`` correctly rounded to ``digits`` fractional digits.

    sqrt(3) is bracketed by integer square roots at increasing precision until
    the bracket decides the rounding.  Ties (possible only for rational
    values) round away from zero.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = QS3.coerce(x)
    pn, qn, d = x.parts
    scale = 10 ** digits
    if qn == 0:
        n = abs(pn) * scale
        whole, rem = divmod(n, d)
        if 2 * rem >= d:
            whole += 1
        return _format(-1 if pn < 0 else 1, whole, digits)

    guard = 4
    while True:
        g = 10 ** guard
        big = scale * g
        # floor(|qn| * sqrt3 * big) is exact via isqrt
        s = math.isqrt(3 * qn * qn * big * big)
        sq_lo = s if qn > 0 else -(s + 1)
        sq_hi = s + 1 if qn > 0 else -s
        # value * big * d lies strictly inside (pn*big + sq_lo, pn*big + sq_hi)
        lo = pn * big + sq_lo
        hi = pn * big + sq_hi
        r_lo = _round_div(lo, d * g)
        r_hi = _round_div(hi, d * g)
        if r_lo == r_hi:
            r = r_lo
            break
        guard *= 2
    sign = -1 if r < 0 else 1
    if r == 0:
        # the value is irrational here, so its sign is never zero
        sign = x.sign()
    return _format(sign, abs(r), digits)


def _round_div(n: int, d: int) -> int:
    # nearest integer to n/d, ties away from zero; d > 0
    q, r = divmod(abs(n), d)
    if 2 * r >= d:
        q += 1
    return q if n >= 0 else -q


def _format(sign: int, whole: int, digits: int) -> str:
    s = str(whole).rjust(digits + 1, "0")
    body = f"{s[:-digits]}.{s[-digits:]}"
    return f"-{body}" if sign < 0 and whole != 0 else body
