"""Exact scalars: the field Q(q) of rational functions in one indeterminate.

Every coefficient in the package lives here (or in its subfield Q via
``fractions.Fraction``), so computations are exact and can be specialized
at any rational value of q where the denominator does not vanish.  The
canonical form (numerator and denominator coprime, denominator monic)
makes equality structural, which the symbolic checks rely on.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction | int

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomial helpers: tuples of Fraction, constant coefficient first
# ---------------------------------------------------------------------------

def _trim(coeffs) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _padd(a, b):
    out = [_ZERO] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    """Polynomial division; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    if len(a) < len(b):
        return (), _trim(a)
    quot = [_ZERO] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            quot[i] = c
            for j, cb in enumerate(b):
                a[i + j] -= c * cb
    return _trim(quot), _trim(a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _peval(a, x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pstr(a, var: str = "q") -> str:
    """Human-readable form, highest power first; coefficients are integers
    by the time this is called."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}{var}" + (f"^{k}" if k > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class ParametricScalar:
    """An element of Q(q), kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(_ONE,)):
        if isinstance(num, (int, Fraction)):
            num = (Fraction(num),)
        if isinstance(den, (int, Fraction)):
            den = (Fraction(den),)
        num = _trim(tuple(Fraction(c) for c in num))
        den = _trim(tuple(Fraction(c) for c in den))
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not num:
            den = (_ONE,)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("ParametricScalar is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def q(cls) -> "ParametricScalar":
        """The indeterminate itself."""
        return cls((_ZERO, _ONE))

    # -- queries -------------------------------------------------------------

    @property
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == (_ONE,)

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant rational: {self}")
        return self.num[0] if self.num else _ZERO

    def evaluate(self, value: Rational) -> Fraction:
        x = Fraction(value)
        d = _peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={x}")
        return _peval(self.num, x) / d

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, ParametricScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return ParametricScalar(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ParametricScalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return ParametricScalar(_pneg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ParametricScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return ParametricScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.num:
                raise ZeroDivisionError("0 ** negative in Q(q)")
            return ParametricScalar(self.den, self.num) ** (-exponent)
        out = ParametricScalar(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- protocol ------------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        num, den = self.num, self.den
        if not num:
            return "0"
        # clear coefficient denominators for display only
        scale = 1
        for c in (*num, *den):
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        inum = [c * scale for c in num]
        iden = [c * scale for c in den]
        g = 0
        for c in (*inum, *iden):
            g = math.gcd(g, c.numerator)
        if g > 1:
            inum = [c / g for c in inum]
            iden = [c / g for c in iden]
        if iden == [1]:
            return _pstr(inum)
        top = _pstr(inum)
        if len([c for c in inum if c]) > 1:
            top = f"({top})"
        bottom = _pstr(iden)
        if len([c for c in iden if c]) > 1 or (iden[-1] != 1):
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __repr__(self):
        return f"ParametricScalar({self})"


#: additive and multiplicative units, shared across the package
ZERO = ParametricScalar(0)
ONE = ParametricScalar(1)


def rational_sqrt(value: Rational) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if it has none."""
    x = Fraction(value)
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None
