"""Brute-force reference solvers.

Nothing here evaluates the two-condition feasibility test or the
full-upgrade search of the fast solvers; only the tree model is shared.
"""
from collections import defaultdict
from itertools import product
from typing import Dict, List, Optional, Tuple
import logging
import math

from ...domain.exceptions import InstanceInputError, OracleDisagreementError, OracleScaleError
from ...domain.interfaces import McspitSolver, RiovsptSolver
from ...domain.models import Instance, InterdictionReport, SolveReport, SolveStatus, WeightAssignment
from ...domain.tree import bottleneck_cost, describe_changes, path_aggregates, path_to
from config import get_config

logger = logging.getLogger(__name__)


def _budget(budget: Optional[int]) -> int:
    return get_config().ORACLE_BUDGET if budget is None else budget


def _masks_by_cost(instance: Instance) -> Dict[int, List[int]]:
    """Every change-set as a bitmask, grouped by its bottleneck cost"""
    costs = instance.costs
    groups: Dict[int, List[int]] = defaultdict(list)
    for mask in range(1 << len(costs)):
        level = max((c for i, c in enumerate(costs) if mask >> i & 1), default=0)
        groups[level].append(mask)
    return groups


def _riovspt_report(instance: Instance, values: Optional[List[int]], objective: Optional[int], examined: int):
    if values is None:
        return SolveReport(status=SolveStatus.INFEASIBLE, objective=None, iterations=examined)
    assignment = WeightAssignment.derive(instance, values)
    return SolveReport(
        status=SolveStatus.ALREADY_OPTIMAL if objective == 0 else SolveStatus.SOLVED,
        objective=objective,
        assignment=assignment,
        changed_edges=describe_changes(instance, assignment),
        iterations=examined,
    )


def _require(instance: Instance, designated: bool) -> int:
    if designated and instance.t0 is None:
        raise InstanceInputError("oracle needs a designated leaf t0")
    if instance.target is None:
        raise InstanceInputError("oracle needs a target value D")
    return instance.target


def brute_force_riovspt(instance: Instance, budget: Optional[int] = None) -> SolveReport:
    """Exhaustive RIOVSPT optimum over every change-set.

    Change-sets are visited by increasing bottleneck cost. For a fixed set S the
    edges of S off P0 take u (they only lengthen paths other than P0) and every
    integer choice of the P0 edges in S is explored as a set of reachable prefix
    sums, keeping prefixes under which every branch leaving P0 still reaches D.
    """
    target = _require(instance, designated=True)
    tree = instance.tree
    m = tree.edge_count
    p0 = [tree.edge_index[edge] for edge in path_to(tree, instance.t0)]
    work = (1 << m) * sum(instance.attrs[i].u - instance.attrs[i].l + 1 for i in p0)
    if work > _budget(budget):
        raise OracleScaleError(f"RIOVSPT oracle needs {work} steps, budget is {_budget(budget)}")

    on_p0 = set(p0)
    children: Dict[str, List[int]] = defaultdict(list)
    for i, edge in enumerate(tree.edges):
        children[tree.parent[edge]].append(i)

    examined = 0
    groups = _masks_by_cost(instance)
    for level in sorted(groups):
        for mask in groups[level]:
            examined += 1
            values = _riovspt_feasible_values(instance, mask, p0, on_p0, children, target)
            if values is not None:
                logger.debug(f"RIOVSPT oracle: feasible change-set {mask:b} at cost {level}")
                return _riovspt_report(instance, values, level, examined)
    return _riovspt_report(instance, None, None, examined)


def _riovspt_feasible_values(instance, mask, p0, on_p0, children, target) -> Optional[List[int]]:
    tree = instance.tree
    attrs = instance.attrs
    values = [a.u if mask >> i & 1 else a.w for i, a in enumerate(attrs)]

    # shortest descent below each off-P0 node, deepest edges first
    descent: Dict[str, int] = {}
    for i in reversed(tree.top_down):
        if i in on_p0:
            continue
        node = tree.edges[i]
        below = [values[j] + descent[tree.edges[j]] for j in children.get(node, [])]
        descent[node] = min(below) if below else 0

    def side_branch(node: str) -> float:
        lengths = [values[j] + descent[tree.edges[j]] for j in children.get(node, []) if j not in on_p0]
        return min(lengths) if lengths else math.inf

    if side_branch(tree.root) < target:
        return None

    # prefix sum -> (previous prefix sum, value chosen for this edge)
    layers: List[Dict[int, Tuple[int, int]]] = []
    reachable = {0}
    for i in p0:
        a = attrs[i]
        node = tree.edges[i]
        choices = range(a.l, a.u + 1) if mask >> i & 1 else (a.w,)
        branch = side_branch(node)
        layer: Dict[int, Tuple[int, int]] = {}
        for prefix in reachable:
            for value in choices:
                total = prefix + value
                if total > target or total in layer:
                    continue
                if total + branch < target:
                    continue
                layer[total] = (prefix, value)
        if not layer:
            return None
        layers.append(layer)
        reachable = set(layer)

    if target not in reachable:
        return None
    total = target
    for i, layer in zip(reversed(p0), reversed(layers)):
        total, values[i] = layer[total]
    return values


def brute_force_mcspit(instance: Instance, budget: Optional[int] = None) -> InterdictionReport:
    """Least threshold whose full upgrade reaches D, cross-checked against every upgraded subset"""
    target = _require(instance, designated=False)
    m = instance.tree.edge_count
    if (1 << m) > _budget(budget):
        raise OracleScaleError(f"MCSPIT oracle needs {1 << m} subsets, budget is {_budget(budget)}")

    def shortest(values) -> int:
        return path_aggregates(instance, values).shortest()[1]

    attrs = instance.attrs
    chosen = None
    examined = 0
    for threshold in [0] + sorted({a.c for a in attrs}):
        examined += 1
        values = [a.u if a.c <= threshold else a.w for a in attrs]
        if shortest(values) >= target:
            chosen = (threshold, values)
            break

    best_subset = None
    for mask in range(1 << m):
        values = [a.u if mask >> i & 1 else a.w for i, a in enumerate(attrs)]
        if shortest(values) >= target:
            cost = bottleneck_cost(instance, values)
            best_subset = cost if best_subset is None else min(best_subset, cost)

    if best_subset is not None and (chosen is None or best_subset < chosen[0]):
        raise OracleDisagreementError(
            f"subset upgrade of cost {best_subset} beats every threshold upgrade "
            f"({'none feasible' if chosen is None else chosen[0]})"
        )

    if chosen is None:
        return InterdictionReport(status=SolveStatus.INFEASIBLE, objective=None, iterations=examined)
    threshold, values = chosen
    assignment = WeightAssignment.derive(instance, values)
    return InterdictionReport(
        status=SolveStatus.ALREADY_OPTIMAL if threshold == 0 else SolveStatus.SOLVED,
        objective=threshold,
        assignment=assignment,
        achieved_shortest=shortest(values),
        changed_edges=describe_changes(instance, assignment),
        iterations=examined,
    )


def _enumerate_box(instance: Instance, lows, highs, budget: Optional[int]):
    size = math.prod(h - lo + 1 for lo, h in zip(lows, highs))
    if size > _budget(budget):
        raise OracleScaleError(f"raw enumeration needs {size} vectors, budget is {_budget(budget)}")
    return product(*(range(lo, h + 1) for lo, h in zip(lows, highs)))


def raw_vector_riovspt(instance: Instance, budget: Optional[int] = None) -> SolveReport:
    """Literal enumeration of every integer vector in the [l, u] box"""
    target = _require(instance, designated=True)
    leaf_position = instance.tree.leaves.index(instance.t0)
    best = None
    examined = 0
    lows = [a.l for a in instance.attrs]
    highs = [a.u for a in instance.attrs]
    for vector in _enumerate_box(instance, lows, highs, budget):
        examined += 1
        sums = path_aggregates(instance, vector).sums
        if sums[leaf_position] != target or min(sums) < target:
            continue
        cost = bottleneck_cost(instance, vector)
        if best is None or cost < best[0]:
            best = (cost, list(vector))
    if best is None:
        return _riovspt_report(instance, None, None, examined)
    return _riovspt_report(instance, best[1], best[0], examined)


def raw_vector_mcspit(instance: Instance, budget: Optional[int] = None) -> InterdictionReport:
    """Literal enumeration of every integer vector in the [w, u] box"""
    target = _require(instance, designated=False)
    best = None
    examined = 0
    lows = [a.w for a in instance.attrs]
    highs = [a.u for a in instance.attrs]
    for vector in _enumerate_box(instance, lows, highs, budget):
        examined += 1
        reached = path_aggregates(instance, vector).shortest()[1]
        if reached < target:
            continue
        cost = bottleneck_cost(instance, vector)
        if best is None or cost < best[0]:
            best = (cost, list(vector), reached)
    if best is None:
        return InterdictionReport(status=SolveStatus.INFEASIBLE, objective=None, iterations=examined)
    cost, values, reached = best
    assignment = WeightAssignment.derive(instance, values)
    return InterdictionReport(
        status=SolveStatus.ALREADY_OPTIMAL if cost == 0 else SolveStatus.SOLVED,
        objective=cost,
        assignment=assignment,
        achieved_shortest=reached,
        changed_edges=describe_changes(instance, assignment),
        iterations=examined,
    )


class BruteForceRiovsptSolver(RiovsptSolver):
    """Change-set enumeration oracle for RIOVSPT"""

    name = "brute-force riovspt"

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget

    def solve(self, instance: Instance) -> SolveReport:
        return brute_force_riovspt(instance, self.budget)


class BruteForceMcspitSolver(McspitSolver):
    """Threshold scan plus subset enumeration oracle for MCSPIT"""

    name = "brute-force mcspit"

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget

    def solve(self, instance: Instance) -> InterdictionReport:
        return brute_force_mcspit(instance, self.budget)
