"""Exact scalars: rationals, Gaussian rationals, and one quadratic extension.

Every sign decision in this package bottoms out here.  All three scalar
kinds are immutable values with structural equality, so they can be shared
freely (including across threads) and used as dict keys.

``Rational`` is an alias for :class:`fractions.Fraction`, which already
guarantees the invariants we need: arbitrary-precision integers, positive
denominator, and storage in lowest terms.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Union

Rational = Fraction

NEGATIVE = -1
ZERO = 0
POSITIVE = 1


class ScalarParseError(ValueError):
    """A scalar literal did not match the text grammar.

    ``offset`` is the byte offset of the first offending character.
    """

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


_RATIONAL_RE = _re.compile(r"(-?)([0-9]+)(?:/([0-9]+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``['-'] digits ['/' digits]`` into a reduced Fraction.

    The grammar is deliberately strict: no whitespace, no leading '+',
    no decimals.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ScalarParseError(f"malformed rational {text!r}", 0)
    if m.end() != len(text):
        raise ScalarParseError(f"malformed rational {text!r}", m.end())
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}", len(sign) + len(num) + 1)
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign else value


def format_rational(q: Fraction) -> str:
    """Inverse of :func:`parse_rational`."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign_of_real(q) -> int:
    """Exact trichotomy: -1, 0, or +1."""
    num = Fraction(q).numerator
    return (num > 0) - (num < 0)


class GaussianRational:
    """An element a + b*i of Q(i), with exact rational a and b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- coercion -----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    # -- field operations ---------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nrm = other.re * other.re + other.im * other.im
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / nrm,
            (self.im * other.re - self.re * other.im) / nrm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates and hashing ---------------------------------------

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # real values hash like their Fraction so x == q implies equal hashes
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sep = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sep}{format_rational(abs(self.im))}i"


I = GaussianRational(0, 1)


def parse_gaussian(pair) -> GaussianRational:
    """Parse the serialized form of a Gaussian rational: a [re, im] pair of
    rational strings."""
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ScalarParseError(f"expected a [re, im] pair, got {pair!r}")
    return GaussianRational(parse_rational(pair[0]), parse_rational(pair[1]))


def format_gaussian(z: GaussianRational) -> list:
    return [format_rational(z.re), format_rational(z.im)]


class Sqrt5Rational:
    """An element a + b*sqrt(5) of Q(sqrt 5), with exact rational a and b.

    Exists solely for the one catalog witness whose defining parameter is
    2 + sqrt(5).  Complex conjugation is the identity (these are real
    numbers), and the sign of any element is decided exactly: sqrt(5) is
    irrational, so a + b*sqrt(5) = 0 only when a = b = 0, and otherwise the
    sign follows from comparing a**2 with 5*b**2.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Sqrt5Rational is immutable")

    @staticmethod
    def _coerce(value) -> "Sqrt5Rational | None":
        if isinstance(value, Sqrt5Rational):
            return value
        if isinstance(value, (int, Fraction)):
            return Sqrt5Rational(value)
        if isinstance(value, GaussianRational) and value.im == 0:
            return Sqrt5Rational(value.re)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Sqrt5Rational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Sqrt5Rational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Sqrt5Rational(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nrm = other.a * other.a - 5 * other.b * other.b
        if nrm == 0:
            if other.a == 0 and other.b == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt 5)")
            raise ArithmeticError("a**2 = 5*b**2 with b != 0 is impossible")
        # multiply by the algebraic conjugate a - b*sqrt(5)
        return Sqrt5Rational(
            (self.a * other.a - 5 * self.b * other.b) / nrm,
            (self.b * other.a - self.a * other.b) / nrm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Sqrt5Rational(-self.a, -self.b)

    def conjugate(self) -> "Sqrt5Rational":
        # complex conjugation; these values are real
        return self

    def sign(self) -> int:
        """Certified sign: exact, never approximate."""
        sa, sb = sign_of_real(self.a), sign_of_real(self.b)
        if sa == 0 and sb == 0:
            return 0
        if sa >= 0 and sb >= 0:
            return 1
        if sa <= 0 and sb <= 0:
            return -1
        # opposite signs: compare |a| with |b|*sqrt(5) via squares
        cmp = sign_of_real(self.a * self.a - 5 * self.b * self.b)
        if cmp == 0:
            raise ArithmeticError("a**2 = 5*b**2 with a, b != 0 is impossible")
        return cmp if sa > 0 else -cmp

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, "sqrt5"))

    def __repr__(self):
        return f"Sqrt5Rational({self.a!r}, {self.b!r})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        tail = f"{format_rational(abs(self.b))}*sqrt(5)"
        if self.a == 0:
            return tail if self.b > 0 else f"-{tail}"
        sep = "+" if self.b > 0 else "-"
        return f"{format_rational(self.a)}{sep}{tail}"


RealValue = Union[Fraction, int, Sqrt5Rational]


def real_sign(value) -> int:
    """Sign of an exactly-represented real value.

    Accepts ints, Fractions, Sqrt5Rationals, and real GaussianRationals.
    """
    if isinstance(value, (int, Fraction)):
        return sign_of_real(value)
    if isinstance(value, Sqrt5Rational):
        return value.sign()
    if isinstance(value, GaussianRational):
        if value.im != 0:
            raise ValueError(f"{value} is not real")
        return sign_of_real(value.re)
    raise TypeError(f"cannot take the sign of {type(value).__name__}")
