from typing import Optional
import logging

import numpy as np

from ..domain.interfaces import McspitSolver, RiovsptSolver
from ..domain.models import GeneratorConfig, Instance, TreeShape, VerificationOutcome
from ..domain.services import BinarySearchMcspitSolver, BinarySearchRiovsptSolver
from ..infrastructure.services.instance_generator import generate_instance
from ..infrastructure.services.oracle import BruteForceMcspitSolver, BruteForceRiovsptSolver
from config import get_config

logger = logging.getLogger(__name__)

SHAPES = tuple(TreeShape)


class VerifySolversUseCase:
    """Use case for checking the fast solvers against the brute-force oracles"""

    def __init__(
        self,
        riovspt_solver: Optional[RiovsptSolver] = None,
        mcspit_solver: Optional[McspitSolver] = None,
        riovspt_oracle: Optional[RiovsptSolver] = None,
        mcspit_oracle: Optional[McspitSolver] = None,
    ):
        self.config = get_config()
        self.riovspt_pair = (
            riovspt_solver or BinarySearchRiovsptSolver(),
            riovspt_oracle or BruteForceRiovsptSolver(),
        )
        self.mcspit_pair = (
            mcspit_solver or BinarySearchMcspitSolver(),
            mcspit_oracle or BruteForceMcspitSolver(),
        )

    def run(self, count: int, max_n: int, seed: int) -> VerificationOutcome:
        """Generate ``count`` seeded instances with 2 <= n <= max_n and stop at the first disagreement"""
        outcome = VerificationOutcome()
        rng = np.random.default_rng(seed)
        regime_weights = tuple(self.config.GENERATOR_REGIME_WEIGHTS)

        for i in range(count):
            instance = generate_instance(GeneratorConfig(
                node_count=int(rng.integers(2, max(2, max_n), endpoint=True)),
                seed=int(rng.integers(2**31)),
                shape=SHAPES[i % len(SHAPES)],
                regime_weights=regime_weights,
            ))
            outcome.checked += 1
            mismatch = self._compare(instance)
            if mismatch is not None:
                logger.warning(f"Instance {i}: {mismatch}")
                outcome.counterexample = instance
                outcome.details.append(mismatch)
                return outcome
            outcome.agreed += 1
            if (i + 1) % 100 == 0:
                logger.info(f"Verified {i + 1}/{count} instances")

        logger.info(f"All {outcome.agreed} instances agree")
        return outcome

    def _compare(self, instance: Instance) -> Optional[str]:
        for problem, (solver, oracle) in (("riovspt", self.riovspt_pair), ("mcspit", self.mcspit_pair)):
            fast = solver.solve(instance)
            slow = oracle.solve(instance)
            if fast.status != slow.status or fast.objective != slow.objective:
                return (
                    f"{problem}: {solver.name} gave {fast.status.value}/{fast.objective}, "
                    f"{oracle.name} gave {slow.status.value}/{slow.objective}"
                )
        return None
