"""Shortest-path interdiction on trees by upgrading edges under bottleneck Hamming cost.

With a budget M every edge with c(e) <= M may be raised, and raising it all
the way to u(e) never shortens a root-leaf path, so the best response to M is
the full upgrade of {e : c(e) <= M}. D_k, the shortest root-leaf length after
upgrading E_k, is nondecreasing in k; the minimum-cost problem is the least k
with D_k >= D.
"""
import logging
from typing import Dict, NamedTuple, Sequence, Union

from .exceptions import InstanceInputError
from .feasibility import build_cost_ladder
from .models import Instance, InterdictionReport, SolveStatus, WeightAssignment
from .tree import describe_changes, path_aggregates

logger = logging.getLogger(__name__)


class ShortestPath(NamedTuple):
    leaf: str
    length: int


def shortest_root_leaf(instance: Instance, assignment: Union[WeightAssignment, Sequence[int]]) -> ShortestPath:
    """Shortest root-leaf path under an assignment (ties go to the first leaf in canonical order)"""
    values: Sequence[int] = assignment.values if isinstance(assignment, WeightAssignment) else assignment
    leaf, length = path_aggregates(instance, values).shortest()
    return ShortestPath(leaf=leaf, length=length)


def solve_mspit(instance: Instance, budget: int) -> WeightAssignment:
    """Upgrade every edge with c(e) <= budget to u(e); the rest keep w"""
    if budget < 0:
        raise InstanceInputError(f"budget must be nonnegative, got {budget}")
    return WeightAssignment.derive(
        instance, (a.u if a.c <= budget else a.w for a in instance.attrs)
    )


def solve_mcspit(instance: Instance) -> InterdictionReport:
    """Least-cost upgrade making every root-leaf path at least D"""
    if instance.target is None:
        raise InstanceInputError("MCSPIT needs a target value D")
    target = instance.target
    ladder = build_cost_ladder(instance)
    evaluated: Dict[int, tuple] = {}

    def upgrade(k: int):
        if k not in evaluated:
            assignment = solve_mspit(instance, ladder.cost(k))
            evaluated[k] = (assignment, shortest_root_leaf(instance, assignment))
        return evaluated[k]

    logger.info(f"Solving MCSPIT on {instance.tree.node_count} nodes, D={target}, {ladder.top} distinct costs")

    current, current_path = upgrade(0)
    if target <= current_path.length:
        logger.info(f"Shortest path {current_path.length} at {current_path.leaf} already reaches D")
        return InterdictionReport(
            status=SolveStatus.ALREADY_OPTIMAL,
            objective=0,
            assignment=current,
            achieved_shortest=current_path.length,
            iterations=len(evaluated),
            rung=0,
        )

    _, best_path = upgrade(ladder.top)
    if target > best_path.length:
        logger.info(f"Full upgrade reaches only {best_path.length} < D={target}; instance is infeasible")
        return InterdictionReport(status=SolveStatus.INFEASIBLE, objective=None, iterations=len(evaluated))

    # D_a < D <= D_b
    a, b = 0, ladder.top
    while b - a > 1:
        k = (a + b) // 2
        if upgrade(k)[1].length >= target:
            b = k
        else:
            a = k
        logger.debug(f"Search bracket now ({a}, {b}]")

    assignment, reached = upgrade(b)
    logger.info(f"Optimal rung {b} with objective {ladder.cost(b)}, shortest path {reached.length} at {reached.leaf}")
    return InterdictionReport(
        status=SolveStatus.SOLVED,
        objective=ladder.cost(b),
        assignment=assignment,
        achieved_shortest=reached.length,
        changed_edges=describe_changes(instance, assignment),
        iterations=len(evaluated),
        rung=b,
    )
