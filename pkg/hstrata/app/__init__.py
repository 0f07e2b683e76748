import os
import logging
from dataclasses import dataclass, replace
from threading import Lock

from hstrata.models.errors import InputError
from hstrata.models.fields import DEFAULT_PRIME, PrimeField
from hstrata.utils.common import set_debug_checks

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AppContext:
    prime: int
    debug: bool
    log_level: str
    max_resamples: int

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.prime)

    def with_prime(self, prime: int) -> 'AppContext':
        PrimeField(prime)
        return replace(self, prime=prime)


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}")


def configure_logging(level: str = None):
    level = (level or os.environ.get('HSTRATA_LOG_LEVEL', 'WARNING')).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT)


def create_context() -> AppContext:
    prime = _int_from_env('HSTRATA_PRIME', DEFAULT_PRIME)
    # validates primality
    PrimeField(prime)

    debug = os.environ.get('HSTRATA_DEBUG', 'False').lower() == 'true'
    set_debug_checks(debug)

    max_resamples = _int_from_env('HSTRATA_MAX_RESAMPLES', 25)
    if max_resamples < 0:
        raise InputError(f"HSTRATA_MAX_RESAMPLES must be >= 0, got {max_resamples}")

    context = AppContext(
        prime=prime,
        debug=debug,
        log_level=os.environ.get('HSTRATA_LOG_LEVEL', 'WARNING').upper(),
        max_resamples=max_resamples,
    )
    logger.info(f"Context: prime={prime}, debug={debug}, max_resamples={max_resamples}")
    return context


_context = None
_context_lock = Lock()


def get_context() -> AppContext:
    global _context
    with _context_lock:
        if _context is None:
            _context = create_context()
        return _context


def reset_context():
    global _context
    with _context_lock:
        _context = None
