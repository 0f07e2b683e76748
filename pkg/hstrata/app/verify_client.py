import logging
from threading import Lock
from typing import Any, Dict, List

from hstrata.app import AppContext
from hstrata.models.errors import InputError
from hstrata.services.suites import (
    run_closure, run_dims, run_hitting, run_mu, run_oracle, run_orders, run_semicontinuity, run_suite,
)

logger = logging.getLogger(__name__)

# Available verification suites
AVAILABLE_SUITES = {
    "orders": {
        "description": "order predicates and dimension identities, exhaustive up to --max-j",
        "runner": run_orders,
        "randomized": False,
    },
    "dims": {
        "description": "Jacobian rank of the minors map on base-point-free strata",
        "runner": run_dims,
        "randomized": True,
    },
    "oracle": {
        "description": "syzygy degrees and Hilbert-Burch round trip on sampled spaces",
        "runner": run_oracle,
        "randomized": True,
    },
    "hitting": {
        "description": "share of unconstrained random spaces in the dense stratum",
        "runner": run_hitting,
        "randomized": True,
    },
    "semicontinuity": {
        "description": "tails along random pencils",
        "runner": run_semicontinuity,
        "randomized": True,
    },
    "closure": {
        "description": "closure certification on every ordered stratum pair",
        "runner": run_closure,
        "randomized": True,
    },
    "mu": {
        "description": "dimension counts of the mu-basis loci",
        "runner": run_mu,
        "randomized": False,
    },
}


class VerifyClient:

    def __init__(self, context: AppContext):
        self.context = context
        self.lock = Lock()

    def get_available_suites(self) -> Dict[str, str]:
        return {name: config["description"] for name, config in AVAILABLE_SUITES.items()}

    def run(self, name: str, **params) -> Dict[str, Any]:
        """Run one suite, or every suite in registry order for ``all``."""
        if name == "all":
            summaries = [self.run(suite, **params) for suite in AVAILABLE_SUITES]
            return {
                'suite': 'all',
                'passed': all(s['passed'] for s in summaries),
                'checks': sum(s['checks'] for s in summaries),
                'suites': summaries,
            }
        if name not in AVAILABLE_SUITES:
            raise InputError(f"unknown suite {name!r}; choose from {', '.join(AVAILABLE_SUITES)} or all")

        config = AVAILABLE_SUITES[name]
        kwargs = {k: v for k, v in params.items() if v is not None}
        if config["randomized"]:
            kwargs.setdefault('field', self.context.field)
            kwargs.setdefault('max_resamples', self.context.max_resamples)
        with self.lock:
            logger.info(f"Running suite {name} with {sorted(k for k in kwargs if k != 'field')}")
            summary = run_suite(config["runner"], **kwargs)
        logger.info(f"Suite {name} {'passed' if summary['passed'] else 'failed'}")
        return summary

    @staticmethod
    def failures_of(summary: Dict[str, Any]) -> List[Dict[str, Any]]:
        if summary['suite'] == 'all':
            return [f for s in summary['suites'] for f in s['failures']]
        return summary['failures']
