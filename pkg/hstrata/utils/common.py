import os
import logging
from typing import List, Sequence

import numpy as np

logger = logging.getLogger(__name__)

_debug_checks = os.environ.get('HSTRATA_DEBUG', 'False').lower() == 'true'


def set_debug_checks(enabled: bool):
    global _debug_checks
    _debug_checks = bool(enabled)


def debug_checks_enabled() -> bool:
    return _debug_checks


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    """
    Counter-based stream derivation: the same (seed, keys...) always yields
    the same generator, independent of how many other streams were drawn.
    """
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(k) & 0xFFFFFFFFFFFFFFFF for k in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def pad_to(values: Sequence[int], length: int) -> List[int]:
    """Pad a stabilized sequence with its last value."""
    values = list(values)
    if not values:
        raise ValueError("cannot pad an empty sequence")
    return values + [values[-1]] * max(0, length - len(values))


def positive_part(n: int) -> int:
    return n if n > 0 else 0


def trial_seed(seed: int, *keys: int) -> int:
    """An integer seed for one trial, derived the same way as ``derive_rng``."""
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(k) & 0xFFFFFFFFFFFFFFFF for k in keys]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])
