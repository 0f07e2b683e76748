from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from hstrata.models.forms import BinaryForm, FormSpace
from hstrata.models.partition import Partition
from hstrata.models.strata import HilbertTail

SUCCESS = 'success'
OVERFLOW = 'overflow'
RETRIES_EXHAUSTED = 'retries-exhausted'


@dataclass(frozen=True)
class HBSample:
    seed: int
    j: int
    d: int
    target_D: Partition
    target_c: int
    matrix: Tuple[Tuple[BinaryForm, ...], ...]
    gcd: BinaryForm
    V: FormSpace
    tail: HilbertTail
    attempts: int


@dataclass(frozen=True)
class PencilReport:
    t_samples: Tuple[int, ...]
    H_generic: HilbertTail
    H_special: HilbertTail

    @property
    def semicontinuous(self) -> bool:
        return self.H_special >= self.H_generic


@dataclass
class ClosureCertificate:
    V_special: FormSpace
    target: HilbertTail
    outcome: str
    added: Dict[int, int] = dc_field(default_factory=dict)
    overflow_degree: Optional[int] = None
    # overflow forced by R_s·V alone, independent of any random choice
    certified: bool = False
    attempts: int = 0
    history: List[str] = dc_field(default_factory=list)

    @property
    def succeeded(self) -> bool:
        return self.outcome == SUCCESS
