from dataclasses import dataclass
from typing import Iterable, Tuple

from hstrata.models.errors import InputError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition is the partition of 0."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InputError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, values: Iterable[int]) -> 'Partition':
        """Sort and drop zeros."""
        return cls(tuple(sorted((v for v in values if v != 0), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> 'Partition':
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.largest())))

    def prefix_sums(self, length: int) -> Tuple[int, ...]:
        sums, acc = [], 0
        for i in range(length):
            acc += self.parts[i] if i < len(self.parts) else 0
            sums.append(acc)
        return tuple(sums)

    def as_text(self, empty: str = "()") -> str:
        if not self.parts:
            return empty
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __str__(self):
        return self.as_text()
