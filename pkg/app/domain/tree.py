"""Rooted-tree construction, root-leaf paths and path sums shared by every solver"""
import logging
import re
from collections import deque
from types import MappingProxyType
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .exceptions import AttributeBoundsError, InstanceInputError, StructureError
from .models import (
    ChangedEdge,
    EdgeAttributes,
    Instance,
    PathAggregates,
    PathView,
    RootedTree,
    WeightAssignment,
    WeightVector,
)

logger = logging.getLogger(__name__)

EdgeRecord = Tuple[object, object, int, int, int, int]

_DIGITS = re.compile(r"(\d+)")


def natural_key(label: str):
    """Sort key comparing digit runs numerically, so that v2 < v10"""
    return tuple((0, int(tok), "") if tok.isdigit() else (1, 0, tok) for tok in _DIGITS.split(label) if tok)


def build_instance(
    edge_records: Iterable[EdgeRecord],
    root,
    t0=None,
    target: Optional[int] = None,
    scale: int = 1,
) -> Instance:
    """Validate edge records (parent, child, w, l, u, c) and build an immutable Instance"""
    records = [tuple(r) for r in edge_records]
    if not records:
        raise StructureError("at least one edge record is required")

    root = str(root)
    parent: Dict[str, str] = {}
    raw_attrs: Dict[str, EdgeAttributes] = {}
    for record in records:
        if len(record) != 6:
            raise StructureError(f"edge record {record!r} must have 6 fields (parent, child, w, l, u, c)")
        head, tail = str(record[0]), str(record[1])
        if tail in parent:
            raise StructureError(f"duplicate edge into child {tail}")
        if tail == root:
            raise StructureError(f"root {root} cannot be the child of an edge ({head}, {tail})")
        parent[tail] = head
        raw_attrs[tail] = _validate_attributes(tail, record[2:])

    _validate_structure(root, parent)

    if scale < 1:
        raise InstanceInputError(f"scale must be a positive integer, got {scale}")

    tree = _assemble_tree(root, parent)
    attrs = tuple(raw_attrs[edge] for edge in tree.edges)

    if t0 is not None:
        t0 = str(t0)
        if t0 not in tree.leaves:
            raise InstanceInputError(f"t0 {t0} is not a leaf of the tree")
    if target is not None and (isinstance(target, bool) or not isinstance(target, int)):
        raise InstanceInputError(f"D must be a scaled integer, got {target!r}")

    logger.debug(f"Built instance with {tree.node_count} nodes and {len(tree.leaves)} leaves")
    return Instance(tree=tree, attrs=attrs, t0=t0, target=target, scale=scale)


def _validate_attributes(edge: str, values: Sequence) -> EdgeAttributes:
    for name, value in zip("wluc", values):
        if isinstance(value, bool) or not isinstance(value, int):
            raise AttributeBoundsError(f"edge {edge}: {name}={value!r} is not a scaled integer", edge=edge)
    w, lower, upper, cost = values
    if lower < 0:
        raise AttributeBoundsError(f"edge {edge}: negative lower bound l={lower}", edge=edge)
    if lower > w:
        raise AttributeBoundsError(f"edge {edge}: l={lower} exceeds w={w}", edge=edge)
    if w > upper:
        raise AttributeBoundsError(f"edge {edge}: w={w} exceeds u={upper}", edge=edge)
    if cost <= 0:
        raise AttributeBoundsError(f"edge {edge}: cost c={cost} must be positive", edge=edge)
    return EdgeAttributes(w=w, l=lower, u=upper, c=cost)


def _validate_structure(root: str, parent: Dict[str, str]) -> None:
    graph = nx.DiGraph()
    graph.add_node(root)
    graph.add_edges_from((head, tail) for tail, head in parent.items())

    if nx.is_arborescence(graph):
        return
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        nodes = " -> ".join(str(head) for head, _ in cycle)
        raise StructureError(f"edge records contain a cycle: {nodes}")

    roots = sorted((node for node, degree in graph.in_degree() if degree == 0), key=natural_key)
    stray = [node for node in roots if node != root]
    raise StructureError(
        f"edge records are disconnected from root {root}: unreachable subtree(s) at {', '.join(stray)}"
    )


def _assemble_tree(root: str, parent: Dict[str, str]) -> RootedTree:
    edges = tuple(sorted(parent, key=natural_key))
    edge_index = {edge: i for i, edge in enumerate(edges)}

    children: Dict[str, List[str]] = {}
    for edge in edges:
        children.setdefault(parent[edge], []).append(edge)

    parent_edge = tuple(edge_index.get(parent[edge], -1) for edge in edges)

    top_down: List[int] = []
    queue = deque(children.get(root, []))
    while queue:
        node = queue.popleft()
        top_down.append(edge_index[node])
        queue.extend(children.get(node, []))

    leaves = tuple(edge for edge in edges if edge not in children)
    return RootedTree(
        root=root,
        parent=MappingProxyType(dict(parent)),
        leaves=leaves,
        edges=edges,
        edge_index=MappingProxyType(edge_index),
        parent_edge=parent_edge,
        top_down=tuple(top_down),
    )


def root_leaf_path(instance: Instance, leaf) -> PathView:
    """Edges of P_{root, leaf}, ordered from the root"""
    leaf = str(leaf)
    if leaf not in instance.tree.leaves:
        raise InstanceInputError(f"{leaf} is not a leaf of the tree")
    return PathView(leaf=leaf, edges=path_to(instance.tree, leaf))


def path_to(tree: RootedTree, node: str) -> Tuple[str, ...]:
    """Edges from the root down to any node (empty for the root)"""
    edges = []
    while node != tree.root:
        edges.append(node)
        node = tree.parent[node]
    return tuple(reversed(edges))


def path_sum(instance: Instance, path: Union[PathView, Sequence[str]], vector_selector) -> int:
    """Sum of w, l or u over the edges of a path"""
    vector = WeightVector(vector_selector)
    edges = path.edges if isinstance(path, PathView) else path
    return sum(instance.attr(edge).value(vector) for edge in edges)


def path_aggregates(instance: Instance, values: Sequence[int]) -> PathAggregates:
    """Root-leaf sums of an arbitrary per-edge vector for every leaf, in one top-down pass"""
    tree = instance.tree
    if len(values) != tree.edge_count:
        raise InstanceInputError(f"vector has {len(values)} entries, tree has {tree.edge_count} edges")
    depth = [0] * tree.edge_count
    for i in tree.top_down:
        above = tree.parent_edge[i]
        depth[i] = values[i] + (depth[above] if above >= 0 else 0)
    sums = tuple(depth[tree.edge_index[leaf]] for leaf in tree.leaves)
    return PathAggregates(leaves=tree.leaves, sums=sums)


def bottleneck_cost(instance: Instance, values: Sequence[int]) -> int:
    """Weighted bottleneck Hamming distance between ``values`` and w"""
    return max((a.c for a, v in zip(instance.attrs, values) if v != a.w), default=0)


def designated_path_mask(instance: Instance) -> Tuple[bool, ...]:
    """Per-edge membership in P0 = P_{root, t0}"""
    if instance.t0 is None:
        raise InstanceInputError("instance has no designated leaf t0")
    on_path = [False] * instance.tree.edge_count
    for edge in path_to(instance.tree, instance.t0):
        on_path[instance.tree.edge_index[edge]] = True
    return tuple(on_path)


def describe_changes(instance: Instance, assignment: WeightAssignment) -> Tuple[ChangedEdge, ...]:
    """Changed edges of an assignment, canonical order"""
    return tuple(
        ChangedEdge(
            edge=edge,
            parent=instance.tree.parent[edge],
            old=instance.attr(edge).w,
            new=assignment.of(instance, edge),
        )
        for edge in assignment.changed
    )
