"""
Exact scalar fields.

A field object carries the arithmetic; scalars are plain Python values
(``Fraction`` over the rationals, ``int`` residues over F_p). Matrices and
forms keep a reference to their field so the mode is never mixed.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from sympy import isprime

from hstrata.models.errors import InputError

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647


class Field:
    """Base class for the two scalar modes."""

    name = "field"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def random(self, rng):
        raise NotImplementedError

    def encode(self, value) -> Any:
        raise NotImplementedError

    def decode(self, raw):
        raise NotImplementedError

    def describe(self) -> Any:
        raise NotImplementedError


class RationalField(Field):
    name = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def random(self, rng):
        # small integers keep rational runs readable
        return Fraction(int(rng.integers(-9, 10)))

    def encode(self, value):
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def decode(self, raw):
        try:
            return Fraction(raw) if isinstance(raw, (int, str)) else Fraction(str(raw))
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"not a rational number: {raw!r}") from e

    def describe(self):
        return "rational"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "RationalField()"


class PrimeField(Field):
    name = "prime"

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isprime(p):
            raise InputError(f"modulus {p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random(self, rng):
        return int(rng.integers(0, self.p))

    def encode(self, value):
        return int(value)

    def decode(self, raw):
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise InputError(f"modular coefficients must be integers, got {raw!r}")
        return raw % self.p

    def describe(self):
        return {"prime": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((self.name, self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


@dataclass(frozen=True)
class DualScalar:
    """primal + tangent·ε over F_p with ε² = 0."""

    primal: int
    tangent: int = 0


class DualRing:
    """Ring of dual numbers over a prime field, used for first-order Jacobians."""

    name = "dual"

    def __init__(self, base: PrimeField):
        if not isinstance(base, PrimeField):
            raise InputError("dual arithmetic needs a prime field")
        self.base = base
        self.p = base.p

    def zero(self):
        return DualScalar(0, 0)

    def one(self):
        return DualScalar(1, 0)

    def coerce(self, value):
        if isinstance(value, DualScalar):
            return value
        return DualScalar(self.base.coerce(value), 0)

    def variable(self, value):
        return DualScalar(self.base.coerce(value), 1)

    def add(self, a, b):
        p = self.p
        return DualScalar((a.primal + b.primal) % p, (a.tangent + b.tangent) % p)

    def sub(self, a, b):
        p = self.p
        return DualScalar((a.primal - b.primal) % p, (a.tangent - b.tangent) % p)

    def neg(self, a):
        p = self.p
        return DualScalar((-a.primal) % p, (-a.tangent) % p)

    def mul(self, a, b):
        p = self.p
        return DualScalar(
            (a.primal * b.primal) % p,
            (a.primal * b.tangent + a.tangent * b.primal) % p,
        )

    def is_zero(self, a) -> bool:
        return a.primal == 0 and a.tangent == 0

    def __repr__(self):
        return f"DualRing({self.p})"


def field_from_spec(spec, default_prime: int = DEFAULT_PRIME) -> Field:
    """Build a field from the document notation: "rational" or {"prime": p}."""
    if spec == "rational":
        return RationalField()
    if isinstance(spec, dict) and set(spec) == {"prime"}:
        p = spec["prime"]
        if isinstance(p, bool) or not isinstance(p, int):
            raise InputError(f"prime must be an integer, got {p!r}")
        return PrimeField(p)
    if spec is None:
        return PrimeField(default_prime)
    raise InputError(f"unknown field specification: {spec!r}")
