"""Minimum bottleneck Hamming cost for the restricted inverse optimal value problem on tree shortest paths.

The search keeps the invariant "rung a infeasible, rung b feasible". Rung 0
(nothing may change) seeds ``a``, so an instance already satisfying
w(P0) = D <= w(P_i) is reported at objective 0, and the smallest rung C_1 is
tested like any other. Rung a is never assumed feasible, so the returned
rung is always the least feasible one.
"""
import logging

from .feasibility import build_cost_ladder, construct_riovspt_solution, is_feasible_cost, restricted_edge_set
from .models import Instance, SolveReport, SolveStatus, WeightAssignment
from .tree import describe_changes

logger = logging.getLogger(__name__)


def solve_riovspt(instance: Instance) -> SolveReport:
    """Binary search over the cost ladder for the least feasible rung, then construct its solution"""
    ladder = build_cost_ladder(instance)
    iterations = 0

    def feasible(k: int) -> bool:
        nonlocal iterations
        iterations += 1
        return is_feasible_cost(instance, restricted_edge_set(ladder, k))

    logger.info(
        f"Solving RIOVSPT on {instance.tree.node_count} nodes, t0={instance.t0}, D={instance.target}, "
        f"{ladder.top} distinct costs"
    )

    if feasible(0):
        logger.info("Unmodified weights are already feasible")
        return SolveReport(
            status=SolveStatus.ALREADY_OPTIMAL,
            objective=0,
            assignment=WeightAssignment.derive(instance, instance.weights),
            iterations=iterations,
            rung=0,
        )

    if not feasible(ladder.top):
        logger.info(f"Largest cost C={ladder.cost(ladder.top)} is infeasible; instance has no solution")
        return SolveReport(status=SolveStatus.INFEASIBLE, objective=None, iterations=iterations)

    a, b = 0, ladder.top
    while b - a > 1:
        k = (a + b) // 2
        if feasible(k):
            b = k
        else:
            a = k
        logger.debug(f"Search bracket now ({a}, {b}]")

    assignment = construct_riovspt_solution(instance, restricted_edge_set(ladder, b))
    logger.info(f"Optimal rung {b} with objective {ladder.cost(b)} after {iterations} feasibility checks")
    return SolveReport(
        status=SolveStatus.SOLVED,
        objective=ladder.cost(b),
        assignment=assignment,
        changed_edges=describe_changes(instance, assignment),
        iterations=iterations,
        rung=b,
    )
