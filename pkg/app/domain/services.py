from .interdiction import solve_mcspit
from .interfaces import McspitSolver, RiovsptSolver
from .models import Instance, InterdictionReport, SolveReport
from .riovspt import solve_riovspt


class BinarySearchRiovsptSolver(RiovsptSolver):
    """Feasibility-test binary search over the cost ladder, O(n log n)"""

    name = "binary-search riovspt"

    def solve(self, instance: Instance) -> SolveReport:
        return solve_riovspt(instance)


class BinarySearchMcspitSolver(McspitSolver):
    """Full-upgrade binary search over the cost ladder, O(n log n)"""

    name = "binary-search mcspit"

    def solve(self, instance: Instance) -> InterdictionReport:
        return solve_mcspit(instance)
