"""Exact coefficient fields: the rationals, and prime fields F_p.

Scalars are plain Python objects: ``fractions.Fraction`` for Q (always in
lowest terms with positive denominator) and :class:`ModP` for F_p (residues
kept in [0, p)).  A :class:`FieldSpec` coerces, parses and prints them; all
arithmetic goes through the ordinary operators, so downstream code never
branches on the field.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/-?\d+)?$")


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModP:
    """An element of F_p.  Residue is reduced into [0, p) at construction."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError("mixed prime fields: %d vs %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return ModP(self.v + o.v, self.p) if o is not NotImplemented else o

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return ModP(self.v - o.v, self.p) if o is not NotImplemented else o

    def __rsub__(self, other):
        o = self._lift(other)
        return ModP(o.v - self.v, self.p) if o is not NotImplemented else o

    def __mul__(self, other):
        o = self._lift(other)
        return ModP(self.v * o.v, self.p) if o is not NotImplemented else o

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n):
        if n < 0:
            return ModP(pow(self.v, n, self.p), self.p)
        return ModP(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


class FieldSpec:
    """The coefficient field: ``FieldSpec.rationals()`` or ``FieldSpec.prime(p)``.

    ``p`` must be prime (trial division) and below 2**31 so residue products
    fit comfortably in machine words.
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if p >= 2 ** 31:
                raise FieldError("prime too large: %d >= 2**31" % p)
            if not _is_prime(p):
                raise FieldError("%d is not prime" % p)
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    @property
    def zero(self):
        return Fraction(0) if self.p is None else ModP(0, self.p)

    @property
    def one(self):
        return Fraction(1) if self.p is None else ModP(1, self.p)

    def of(self, x):
        """Coerce an int, Fraction, ModP or scalar string into this field."""
        if self.p is None:
            if isinstance(x, ModP):
                raise FieldError("cannot coerce F_p element into Q")
            if isinstance(x, str):
                # exact strings only: "n" or "n/d"; no decimals
                if not _RATIONAL_RE.match(x.strip()):
                    raise FieldError("not an exact rational string: %r" % x)
                return Fraction(x.strip())
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
        else:
            if isinstance(x, ModP):
                if x.p != self.p:
                    raise FieldError("mixed prime fields")
                return x
            if isinstance(x, str):
                x = int(x)
            if isinstance(x, int):
                return ModP(x, self.p)
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise FieldError("denominator divisible by p")
                return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)
        raise FieldError("cannot coerce %r into %s" % (x, self))

    def to_str(self, x) -> str:
        """Canonical scalar string: "n" or "n/d" over Q, bare residue over F_p."""
        if self.p is None:
            if x.denominator == 1:
                return str(x.numerator)
            return "%d/%d" % (x.numerator, x.denominator)
        return str(x.v)

    def to_json(self, x):
        return self.to_str(x) if self.p is None else x.v

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return "Q" if self.p is None else "F_%d" % self.p


def same_field(*specs: FieldSpec) -> FieldSpec:
    first = specs[0]
    for s in specs[1:]:
        if s != first:
            raise FieldError("field mismatch: %r vs %r" % (first, s))
    return first
