from dataclasses import dataclass, field
from enum import Enum
from typing import List, Mapping, Optional, Tuple


class SolveStatus(Enum):
    """Outcome of a solver run"""
    SOLVED = "solved"
    INFEASIBLE = "infeasible"
    ALREADY_OPTIMAL = "already_optimal"


class WeightVector(Enum):
    """Selects one of the per-edge weight vectors of an instance"""
    W = "w"
    L = "l"
    U = "u"


class TreeShape(Enum):
    """Tree topologies the instance generator can produce"""
    RANDOM_ATTACHMENT = "random-attachment"
    PATH = "path"
    STAR = "star"
    CATERPILLAR = "caterpillar"


class Algorithm(Enum):
    """Solvers covered by the benchmark harness"""
    RIOVSPT = "riovspt"
    MCSPIT = "mcspit"


@dataclass(frozen=True)
class EdgeAttributes:
    """Scaled-integer attributes of one edge"""
    w: int
    l: int  # noqa: E741
    u: int
    c: int

    def value(self, vector: WeightVector) -> int:
        return getattr(self, vector.value)


@dataclass(frozen=True)
class RootedTree:
    """Immutable rooted tree; edge e_v is identified by its child node v.

    Edge positions follow the canonical (natural) order of child labels.
    ``parent_edge[i]`` is the position of the edge above edge ``i`` or -1 when
    the edge leaves the root, and ``top_down`` lists edge positions so that
    every edge appears after its parent edge.
    """
    root: str
    parent: Mapping[str, str]
    leaves: Tuple[str, ...]
    edges: Tuple[str, ...]
    edge_index: Mapping[str, int]
    parent_edge: Tuple[int, ...]
    top_down: Tuple[int, ...]

    @property
    def node_count(self) -> int:
        return len(self.edges) + 1

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Instance:
    """Complete problem input: tree, per-edge attributes, designated leaf and target D"""
    tree: RootedTree
    attrs: Tuple[EdgeAttributes, ...]
    t0: Optional[str] = None
    target: Optional[int] = None
    scale: int = 1

    def attr(self, edge: str) -> EdgeAttributes:
        return self.attrs[self.tree.edge_index[edge]]

    def vector(self, vector: WeightVector) -> Tuple[int, ...]:
        return tuple(a.value(vector) for a in self.attrs)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(a.w for a in self.attrs)

    @property
    def costs(self) -> Tuple[int, ...]:
        return tuple(a.c for a in self.attrs)


@dataclass(frozen=True)
class PathView:
    """Root-to-leaf edge sequence P_k"""
    leaf: str
    edges: Tuple[str, ...]


@dataclass(frozen=True)
class PathAggregates:
    """Per-leaf root-leaf sums of one value vector, leaves in canonical order"""
    leaves: Tuple[str, ...]
    sums: Tuple[int, ...]

    def of(self, leaf: str) -> int:
        return self.sums[self.leaves.index(leaf)]

    def shortest(self) -> Tuple[str, int]:
        """Minimizing leaf (first in canonical order on ties) and its length"""
        best = min(range(len(self.sums)), key=self.sums.__getitem__)
        return self.leaves[best], self.sums[best]


@dataclass(frozen=True)
class CostLadder:
    """Distinct edge costs C_1 < ... < C_n*; ``rung_of_edge`` holds 1-based rungs per edge position"""
    rungs: Tuple[int, ...]
    rung_of_edge: Tuple[int, ...]

    @property
    def top(self) -> int:
        return len(self.rungs)

    def cost(self, k: int) -> int:
        """C_k, with C_0 = 0 for the empty restricted set"""
        return self.rungs[k - 1] if k > 0 else 0


@dataclass(frozen=True)
class RestrictedEdgeSet:
    """E_k = {e : c(e) <= C_k}; rung 0 is the empty set"""
    rung: int
    cost_bound: int
    membership: Tuple[bool, ...]

    @property
    def size(self) -> int:
        return sum(self.membership)


@dataclass(frozen=True)
class MixedPathSums:
    """Feasibility-test aggregates of a fixed E_k.

    lo0 = l(P0 & E_k) + w(P0 - E_k); per leaf i:
    hi_i = u(P_i & E_k) + w(P_i - E_k) and
    mix_i = l(P_i & P0 & E_k) + u((P_i - P0) & E_k) + w(P_i - E_k).
    """
    lo0: int
    leaves: Tuple[str, ...]
    hi: Tuple[int, ...]
    mix: Tuple[int, ...]


@dataclass(frozen=True)
class DeltaEdge:
    """The edge e_j = (v_i, v_j) on P0 that receives the interior value delta"""
    edge: str
    parent: str
    position: int
    delta: int


@dataclass(frozen=True)
class WeightAssignment:
    """Full edge-weight vector with the edges whose weight differs from w"""
    values: Tuple[int, ...]
    changed: Tuple[str, ...]

    @classmethod
    def derive(cls, instance: Instance, values) -> "WeightAssignment":
        values = tuple(values)
        changed = tuple(
            edge for edge, value, attrs in zip(instance.tree.edges, values, instance.attrs)
            if value != attrs.w
        )
        return cls(values=values, changed=changed)

    def of(self, instance: Instance, edge: str) -> int:
        return self.values[instance.tree.edge_index[edge]]


@dataclass(frozen=True)
class ChangedEdge:
    """One modified edge of a solution"""
    edge: str
    parent: str
    old: int
    new: int


@dataclass(frozen=True)
class SolveReport:
    """Result of a RIOVSPT_BH solve"""
    status: SolveStatus
    objective: Optional[int]
    assignment: Optional[WeightAssignment] = None
    changed_edges: Tuple[ChangedEdge, ...] = ()
    iterations: int = 0
    rung: Optional[int] = None


@dataclass(frozen=True)
class InterdictionReport:
    """Result of an MCSPIT_BH solve"""
    status: SolveStatus
    objective: Optional[int]
    assignment: Optional[WeightAssignment] = None
    achieved_shortest: Optional[int] = None
    changed_edges: Tuple[ChangedEdge, ...] = ()
    iterations: int = 0
    rung: Optional[int] = None


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a seeded random instance"""
    node_count: int
    seed: int
    weight_range: Tuple[int, int] = (0, 6)
    slack_range: Tuple[int, int] = (0, 4)
    cost_range: Tuple[int, int] = (1, 10)
    shape: TreeShape = TreeShape.RANDOM_ATTACHMENT
    regime_weights: Tuple[float, float, float] = (0.1, 0.1, 0.8)
    scale: int = 1


@dataclass(frozen=True)
class BenchRecord:
    """Wall-clock statistics of one algorithm at one tree size"""
    n: int
    algorithm: Algorithm
    trials: int
    t_avg: float
    t_max: float
    t_min: float


@dataclass
class VerificationOutcome:
    """Summary of a solver-versus-oracle run"""
    checked: int = 0
    agreed: int = 0
    counterexample: Optional[Instance] = None
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.checked == self.agreed
