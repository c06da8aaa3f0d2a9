from typing import Optional

from ..api.schemas import SolveResultSchema, to_scaled
from ..domain.interdiction import shortest_root_leaf, solve_mspit
from ..domain.interfaces import InstanceRepository, McspitSolver, RiovsptSolver
from ..domain.models import InterdictionReport, SolveStatus
from ..domain.services import BinarySearchMcspitSolver, BinarySearchRiovsptSolver
from ..domain.tree import bottleneck_cost, describe_changes
from ..infrastructure.repositories.instance_repository import InstanceFileRepository
import logging

logger = logging.getLogger(__name__)


class SolveInstanceUseCase:
    """Use case for solving one instance document"""

    def __init__(
        self,
        repository: Optional[InstanceRepository] = None,
        riovspt_solver: Optional[RiovsptSolver] = None,
        mcspit_solver: Optional[McspitSolver] = None,
    ):
        self.repository = repository or InstanceFileRepository()
        self.riovspt_solver = riovspt_solver or BinarySearchRiovsptSolver()
        self.mcspit_solver = mcspit_solver or BinarySearchMcspitSolver()

    def solve_riovspt(self, source: str, scale: Optional[int] = None) -> SolveResultSchema:
        instance = self.repository.load(source, scale)
        report = self.riovspt_solver.solve(instance)
        logger.info(f"{self.riovspt_solver.name}: {report.status.value} after {report.iterations} checks")
        return SolveResultSchema.from_report("riovspt", instance, report)

    def solve_mcspit(self, source: str, scale: Optional[int] = None) -> SolveResultSchema:
        instance = self.repository.load(source, scale)
        report = self.mcspit_solver.solve(instance)
        logger.info(f"{self.mcspit_solver.name}: {report.status.value} after {report.iterations} upgrades")
        return SolveResultSchema.from_report("mcspit", instance, report)

    def solve_mspit(self, source: str, budget: str, scale: Optional[int] = None) -> SolveResultSchema:
        """Best full upgrade for a fixed bottleneck budget given as a decimal"""
        instance = self.repository.load(source, scale)
        budget = to_scaled(budget, instance.scale, "--budget")
        assignment = solve_mspit(instance, budget)
        reached = shortest_root_leaf(instance, assignment)
        report = InterdictionReport(
            status=SolveStatus.SOLVED if assignment.changed else SolveStatus.ALREADY_OPTIMAL,
            objective=bottleneck_cost(instance, assignment.values),
            assignment=assignment,
            achieved_shortest=reached.length,
            changed_edges=describe_changes(instance, assignment),
            iterations=1,
        )
        logger.info(f"Budget {budget} upgrades {len(assignment.changed)} edges, shortest path {reached.length}")
        return SolveResultSchema.from_report("mspit", instance, report)
