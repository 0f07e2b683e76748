"""
Binary forms, subspaces of R_j and graded slices of ideals in k[x,y].

``coeffs[i]`` multiplies x^(degree-i) y^i. The zero form keeps its nominal
degree so graded data stays aligned.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Sequence, Tuple

from hstrata.models.errors import InputError
from hstrata.models.fields import Field
from hstrata.utils.linalg import Matrix, row_basis, span_contains

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryForm:
    field: Field = dc_field(compare=False, repr=False)
    degree: int
    coeffs: Tuple

    def __post_init__(self):
        if self.degree < 0:
            raise InputError(f"negative degree {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise InputError(f"degree {self.degree} form needs {self.degree + 1} coefficients, "
                             f"got {len(self.coeffs)}")

    @classmethod
    def zero(cls, field: Field, degree: int) -> 'BinaryForm':
        return cls(field, degree, (field.zero(),) * (degree + 1))

    @classmethod
    def monomial(cls, field: Field, degree: int, y_power: int) -> 'BinaryForm':
        """x^(degree - y_power) y^y_power"""
        coeffs = [field.zero()] * (degree + 1)
        coeffs[y_power] = field.one()
        return cls(field, degree, tuple(coeffs))

    @classmethod
    def from_ints(cls, field: Field, coeffs: Sequence) -> 'BinaryForm':
        return cls(field, len(coeffs) - 1, tuple(field.coerce(c) for c in coeffs))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def _check_same_degree(self, other):
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: 'BinaryForm') -> 'BinaryForm':
        self._check_same_degree(other)
        f = self.field
        return BinaryForm(f, self.degree, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'BinaryForm') -> 'BinaryForm':
        self._check_same_degree(other)
        f = self.field
        return BinaryForm(f, self.degree, tuple(f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'BinaryForm':
        f = self.field
        return BinaryForm(f, self.degree, tuple(f.neg(a) for a in self.coeffs))

    def __mul__(self, other: 'BinaryForm') -> 'BinaryForm':
        f = self.field
        out = [f.zero()] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if f.is_zero(a):
                continue
            for k, b in enumerate(other.coeffs):
                if f.is_zero(b):
                    continue
                out[i + k] = f.add(out[i + k], f.mul(a, b))
        return BinaryForm(f, self.degree + other.degree, tuple(out))

    def scale(self, c) -> 'BinaryForm':
        f = self.field
        return BinaryForm(f, self.degree, tuple(f.mul(c, a) for a in self.coeffs))

    def shift(self, s: int, y_power: int) -> 'BinaryForm':
        """Multiply by the monomial x^(s - y_power) y^y_power."""
        z = self.field.zero()
        coeffs = (z,) * y_power + self.coeffs + (z,) * (s - y_power)
        return BinaryForm(self.field, self.degree + s, coeffs)

    def x_valuation(self) -> int:
        """Largest k with x^k dividing the form; degree+1 for the zero form."""
        nonzero = [i for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)]
        if not nonzero:
            return self.degree + 1
        return self.degree - max(nonzero)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            xp, yp = self.degree - i, i
            mono = "".join(
                part for part in (
                    "" if xp == 0 else ("x" if xp == 1 else f"x^{xp}"),
                    "" if yp == 0 else ("y" if yp == 1 else f"y^{yp}"),
                )
            )
            terms.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class FormSpace:
    """
    A subspace of R_j held by its reduced row-echelon basis (d x (j+1)).
    d = 0 is allowed only for the zero components of graded slices.
    """

    j: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.ncols != self.j + 1:
            raise InputError(f"basis of a subspace of R_{self.j} needs {self.j + 1} columns")

    @classmethod
    def span(cls, field: Field, j: int, forms: Iterable) -> 'FormSpace':
        rows = []
        for f in forms:
            coeffs = f.coeffs if isinstance(f, BinaryForm) else tuple(f)
            if len(coeffs) != j + 1:
                raise InputError(f"form of length {len(coeffs)} does not lie in R_{j}")
            rows.append(list(coeffs))
        return cls(j, row_basis(field, rows, j + 1))

    @classmethod
    def zero_space(cls, field: Field, j: int) -> 'FormSpace':
        return cls(j, Matrix(field, [], j + 1))

    @classmethod
    def full(cls, field: Field, j: int) -> 'FormSpace':
        return cls(j, Matrix.identity(field, j + 1))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def d(self) -> int:
        return self.basis.nrows

    def forms(self) -> List[BinaryForm]:
        return [BinaryForm(self.field, self.j, row) for row in self.basis.entries]

    def contains(self, forms: Iterable[BinaryForm]) -> bool:
        return span_contains(self.basis, [f.coeffs for f in forms])

    def contains_space(self, other: 'FormSpace') -> bool:
        return other.j == self.j and self.contains(other.forms())

    def __eq__(self, other):
        return isinstance(other, FormSpace) and self.j == other.j and self.basis == other.basis

    def __hash__(self):
        return hash((self.j, self.basis))

    def __repr__(self):
        return f"FormSpace(j={self.j}, d={self.d})"


@dataclass(frozen=True)
class GradedIdealSlice:
    """Degree-wise components of a graded ideal for degrees lo..hi."""

    lo: int
    hi: int
    components: Dict[int, FormSpace]

    def component(self, degree: int) -> FormSpace:
        return self.components[degree]

    def dims(self) -> List[int]:
        return [self.components[i].d for i in range(self.lo, self.hi + 1)]

    def generator_counts(self) -> Dict[int, int]:
        """Minimal generators per degree: dim I_i - dim R_1·I_(i-1)."""
        from hstrata.services.binary_forms import product_space

        counts = {}
        for i in range(self.lo, self.hi + 1):
            comp = self.components[i]
            if i == self.lo or self.components[i - 1].d == 0:
                counts[i] = comp.d
            else:
                counts[i] = comp.d - product_space(self.components[i - 1], 1).d
        return counts
