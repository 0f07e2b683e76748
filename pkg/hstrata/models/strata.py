"""Records describing Hilbert-function strata of Grass(R_j, d)."""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from hstrata.models.errors import InputError
from hstrata.models.forms import BinaryForm
from hstrata.models.partition import Partition
from hstrata.utils.common import pad_to


@dataclass(frozen=True)
class HilbertTail:
    """
    (h_j, h_(j+1), ...) cut at its stable value c. Trailing repetitions in
    the input are collapsed.
    """

    j: int
    values: Tuple[int, ...]

    def __post_init__(self):
        values = list(int(v) for v in self.values)
        if not values:
            raise InputError("a Hilbert tail needs at least h_j")
        while len(values) > 1 and values[-1] == values[-2]:
            values.pop()
        object.__setattr__(self, 'values', tuple(values))

    @property
    def c(self) -> int:
        return self.values[-1]

    def value_at(self, i: int) -> int:
        """h_i for i >= j."""
        if i < self.j:
            raise IndexError(f"tail starts at degree {self.j}")
        k = i - self.j
        return self.values[k] if k < len(self.values) else self.c

    def differences(self) -> Tuple[int, ...]:
        """(e_(j+1), e_(j+2), ...) up to stabilization."""
        return tuple(a - b for a, b in zip(self.values, self.values[1:]))

    def padded(self, length: int) -> List[int]:
        return pad_to(self.values, length)

    def __ge__(self, other: 'HilbertTail') -> bool:
        if self.j != other.j:
            return NotImplemented
        n = max(len(self.values), len(other.values))
        return all(a >= b for a, b in zip(self.padded(n), other.padded(n)))

    def __le__(self, other: 'HilbertTail') -> bool:
        if self.j != other.j:
            return NotImplemented
        return other >= self

    def as_text(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"

    def __str__(self):
        return self.as_text()


@dataclass(frozen=True)
class MuBasis:
    """
    Minimal relations of the base-point-free quotient V : g, one column per
    relation; ``columns[u][i]`` multiplies basis form i.
    """

    j: int
    d: int
    columns: Tuple[Tuple[BinaryForm, ...], ...]
    col_degrees: Partition
    gcd: BinaryForm

    @property
    def c(self) -> int:
        return self.gcd.degree


@dataclass(frozen=True)
class StratumDescriptor:
    j: int
    d: int
    c: int
    tau: int
    lam: Partition
    D: Partition
    tail: HilbertTail
    dim_stratum: int
    cod_in_G: int
    cod_tau: int
    cod_in_tau: int

    @property
    def lam_conjugate(self) -> Partition:
        return self.lam.conjugate()

    @property
    def key(self) -> Tuple[int, ...]:
        return self.tail.values


@dataclass(frozen=True)
class NoseStratumDescriptor:
    j: int
    d: int
    A: Partition
    tau: int
    N: Tuple[int, ...]
    ancestor_dims: Tuple[int, ...]
    c: int
    dim: int
    cod_tau: int
    cod_in_tau: int

    @property
    def A_conjugate(self) -> Partition:
        return self.A.conjugate()

    def window(self, lo: int) -> Tuple[int, ...]:
        return self.N[lo:]


@dataclass
class StrataPoset:
    """
    Strata of one (j, d). ``order`` has an edge H -> H' whenever H' >= H
    termwise and H' != H, so the closure of a stratum is itself plus its
    descendants; ``hasse`` is the transitive reduction.
    """

    j: int
    d: int
    strata: List[StratumDescriptor]
    order: nx.DiGraph = dc_field(repr=False)
    hasse: nx.DiGraph = dc_field(repr=False)

    def by_tail(self, values) -> StratumDescriptor:
        values = HilbertTail(self.j, tuple(values)).values
        for s in self.strata:
            if s.tail.values == values:
                return s
        raise KeyError(values)

    def by_lambda(self, lam: Partition, c: Optional[int] = None) -> StratumDescriptor:
        for s in self.strata:
            if s.lam == lam and (c is None or s.c == c):
                return s
        raise KeyError(lam)

    def closure_set(self, stratum: StratumDescriptor) -> List[StratumDescriptor]:
        keys = nx.descendants(self.order, stratum.key) | {stratum.key}
        return [s for s in self.strata if s.key in keys]

    def covers(self) -> Dict[Tuple[int, ...], List[Tuple[int, ...]]]:
        return {n: sorted(self.hasse.successors(n)) for n in self.hasse.nodes}
