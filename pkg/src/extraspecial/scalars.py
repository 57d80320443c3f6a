"""Exact field arithmetic over the rationals and odd prime fields.

Rational scalars are plain `fractions.Fraction` objects (always in lowest
terms with positive denominator).  Prime-field scalars are `Fp` instances
carrying their modulus, so that arithmetic between different fields fails
loudly instead of silently reducing.  Every other module treats scalars
generically through the `Field` handle: `field.zero`, `field.one`,
`field.coerce`, `field.parse`, `field.format`.

Fields of characteristic 2 are rejected outright; the whole theory assumes
2 is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, UnsupportedField


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Fp:
    """An element of GF(p), stored as the residue in 0..p-1.

    Immutable; arithmetic only combines with other `Fp` of the same modulus.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _check(self, other) -> "Fp":
        if not isinstance(other, Fp):
            raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")
        if other.p != self.p:
            raise FieldMismatch(f"cannot combine GF({self.p}) with GF({other.p})")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Fp(self.value + other.value, self.p)

    def __sub__(self, other):
        other = self._check(other)
        return Fp(self.value - other.value, self.p)

    def __mul__(self, other):
        other = self._check(other)
        return Fp(self.value * other.value, self.p)

    def __truediv__(self, other):
        other = self._check(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Fp(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Field:
    """Handle for a base field: the rationals, or GF(p) with p an odd prime."""

    kind: str  # "Q" or "GF"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise UnsupportedField("the rational field takes no modulus")
        elif self.kind == "GF":
            if self.p is None or not _is_prime(self.p):
                raise UnsupportedField(f"GF modulus must be prime, got {self.p}")
            if self.p == 2:
                raise UnsupportedField("GF(2) is out of scope: 2 must be invertible")
        else:
            raise UnsupportedField(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls("Q")

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("GF", p)

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else Fp(0, self.p)

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else Fp(1, self.p)

    def coerce(self, x):
        """Bring an int, Fraction, Fp, or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "Q":
            if isinstance(x, Fp):
                raise FieldMismatch("cannot coerce a GF(p) element into the rationals")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"element of GF({x.p}) used in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        if isinstance(x, int):
            return Fp(x, self.p)
        raise FieldMismatch(f"cannot coerce {x!r} into {self}")

    def parse(self, text: str):
        """Parse "n" or "n/d" (rationals) or a decimal residue (GF(p))."""
        text = text.strip()
        try:
            if self.kind == "Q":
                return Fraction(text)
            if "/" in text:
                num, den = text.split("/", 1)
                return self.coerce(Fraction(int(num), int(den)))
            return Fp(int(text), self.p)
        except (ValueError, ZeroDivisionError) as exc:
            raise UnsupportedField(f"cannot parse scalar {text!r} over {self}: {exc}") from exc

    def format(self, x) -> str:
        x = self.coerce(x)
        return str(x)

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, Fraction)
        return isinstance(x, Fp) and x.p == self.p

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"


def field_of(x) -> Field:
    """Recover the field a scalar belongs to."""
    if isinstance(x, Fraction):
        return Field.rationals()
    if isinstance(x, Fp):
        return Field.gf(x.p)
    raise FieldMismatch(f"{x!r} is not a scalar of a supported field")


def scalar_arith(a, b, op: str):
    """Checked scalar arithmetic: op is one of "add", "sub", "mul", "div".

    Both operands must already be scalars of the same field; division by
    zero raises `ZeroDivisionError`.
    """
    fa, fb = field_of(a), field_of(b)
    if fa != fb:
        raise FieldMismatch(f"operands live in {fa} and {fb}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("scalar division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")
