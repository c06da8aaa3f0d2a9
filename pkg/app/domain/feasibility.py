"""Cost ladder, restricted edge sets, the two-condition feasibility test and the solution constructor.

For a rung k the edges of E_k may change freely inside [l, u] and every other
edge keeps w. A rung is feasible iff, with lo0 = l(P0 & E_k) + w(P0 - E_k):

1. lo0 <= D <= u(P_i & E_k) + w(P_i - E_k) for every leaf t_i, and
2. lo0 <= l(P_i & P0 & E_k) + u((P_i - P0) & E_k) + w(P_i - E_k) for every leaf t_i.

Both conditions are evaluated from one top-down pass over the tree.
"""
import logging
from typing import List, Optional

import numpy as np

from .exceptions import ContractViolationError, InstanceInputError
from .models import CostLadder, DeltaEdge, Instance, MixedPathSums, RestrictedEdgeSet, WeightAssignment
from .tree import designated_path_mask, path_to

logger = logging.getLogger(__name__)


def build_cost_ladder(instance: Instance) -> CostLadder:
    """Sorted distinct edge costs and the rung of every edge"""
    rungs, inverse = np.unique(np.asarray(instance.costs, dtype=np.int64), return_inverse=True)
    return CostLadder(
        rungs=tuple(int(c) for c in rungs),
        rung_of_edge=tuple(int(k) + 1 for k in inverse.ravel()),
    )


def restricted_edge_set(ladder: CostLadder, k: int) -> RestrictedEdgeSet:
    """E_k = {e : c(e) <= C_k}; k = 0 gives the empty set"""
    if not 0 <= k <= ladder.top:
        raise InstanceInputError(f"rung {k} outside [0, {ladder.top}]")
    return RestrictedEdgeSet(
        rung=k,
        cost_bound=ladder.cost(k),
        membership=tuple(rung <= k for rung in ladder.rung_of_edge),
    )


def _require_designated(instance: Instance) -> int:
    if instance.t0 is None:
        raise InstanceInputError("RIOVSPT needs a designated leaf t0")
    if instance.target is None:
        raise InstanceInputError("RIOVSPT needs a target value D")
    return instance.target


def mixed_path_sums(instance: Instance, restricted: RestrictedEdgeSet) -> MixedPathSums:
    tree = instance.tree
    member = restricted.membership
    if len(member) != tree.edge_count:
        raise InstanceInputError("restricted edge set does not belong to this instance")
    on_p0 = designated_path_mask(instance)

    hi = [0] * tree.edge_count
    mix = [0] * tree.edge_count
    lo0 = 0
    for i in tree.top_down:
        a = instance.attrs[i]
        above = tree.parent_edge[i]
        base_hi = hi[above] if above >= 0 else 0
        base_mix = mix[above] if above >= 0 else 0
        if member[i]:
            hi[i] = base_hi + a.u
            mix[i] = base_mix + (a.l if on_p0[i] else a.u)
            if on_p0[i]:
                lo0 += a.l
        else:
            hi[i] = base_hi + a.w
            mix[i] = base_mix + a.w
            if on_p0[i]:
                lo0 += a.w

    positions = [tree.edge_index[leaf] for leaf in tree.leaves]
    return MixedPathSums(
        lo0=lo0,
        leaves=tree.leaves,
        hi=tuple(hi[p] for p in positions),
        mix=tuple(mix[p] for p in positions),
    )


def is_feasible_cost(instance: Instance, restricted: RestrictedEdgeSet) -> bool:
    """Whether objective C_k admits a feasible weight vector"""
    target = _require_designated(instance)
    sums = mixed_path_sums(instance, restricted)
    feasible = (
        sums.lo0 <= target
        and all(target <= h for h in sums.hi)
        and all(sums.lo0 <= m for m in sums.mix)
    )
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            f"Rung {restricted.rung} (C={restricted.cost_bound}): lo0={sums.lo0}, "
            f"min hi={min(sums.hi)}, min mix={min(sums.mix)} -> {'feasible' if feasible else 'infeasible'}"
        )
    return feasible


def find_delta_edge(instance: Instance, restricted: RestrictedEdgeSet) -> Optional[DeltaEdge]:
    """First edge e_j = (v_i, v_j) of P0 & E_k from the root whose bracket contains D.

    The bracket of e_j is [U(v_i) + L(v_i), U(v_j) + L(v_j)] where U(x) sums u on
    E_k and w elsewhere from the root to x, and L(x) sums l on E_k and w elsewhere
    from x to t0. Returns None when P0 & E_k is empty.
    """
    target = _require_designated(instance)
    tree = instance.tree
    member = restricted.membership
    path = [tree.edge_index[edge] for edge in path_to(tree, instance.t0)]

    suffix_low: List[int] = [0] * (len(path) + 1)
    for p in range(len(path) - 1, -1, -1):
        a = instance.attrs[path[p]]
        suffix_low[p] = suffix_low[p + 1] + (a.l if member[path[p]] else a.w)

    prefix_up = 0
    for p, i in enumerate(path):
        a = instance.attrs[i]
        if not member[i]:
            prefix_up += a.w
            continue
        lower = prefix_up + suffix_low[p]
        upper = prefix_up + a.u + suffix_low[p + 1]
        if lower <= target <= upper:
            edge = tree.edges[i]
            return DeltaEdge(
                edge=edge,
                parent=tree.parent[edge],
                position=p,
                delta=target - prefix_up - suffix_low[p + 1],
            )
        prefix_up += a.u
    return None


def construct_riovspt_solution(instance: Instance, restricted: RestrictedEdgeSet) -> WeightAssignment:
    """Feasible weight vector changing only edges of E_k.

    E_k edges below e_j on P0 drop to l, e_j takes delta, every other E_k edge
    rises to u and edges outside E_k keep w.
    """
    if not is_feasible_cost(instance, restricted):
        raise ContractViolationError(
            f"rung {restricted.rung} (C={restricted.cost_bound}) is infeasible; no solution to construct"
        )
    tree = instance.tree
    member = restricted.membership
    on_p0 = designated_path_mask(instance)
    pivot = find_delta_edge(instance, restricted)

    values = list(instance.weights)
    if pivot is None:
        if any(m and p for m, p in zip(member, on_p0)):
            raise ContractViolationError("no delta edge found on P0 although P0 meets E_k")
        # P0 & E_k is empty, so w(P0) = D already
        for i, a in enumerate(instance.attrs):
            if member[i]:
                values[i] = a.u
        return WeightAssignment.derive(instance, values)

    below = set(path_to(tree, instance.t0)[pivot.position + 1:])
    pivot_index = tree.edge_index[pivot.edge]
    for i, a in enumerate(instance.attrs):
        if not member[i]:
            continue
        if i == pivot_index:
            values[i] = pivot.delta
        elif on_p0[i] and tree.edges[i] in below:
            values[i] = a.l
        else:
            values[i] = a.u

    logger.debug(f"Constructed solution with delta edge {pivot.edge} = {pivot.delta}")
    return WeightAssignment.derive(instance, values)
