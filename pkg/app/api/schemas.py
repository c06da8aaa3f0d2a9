from decimal import Decimal, Inexact, InvalidOperation, Rounded, localcontext
import json
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator

from ..domain.exceptions import DocumentParseError
from ..domain.models import BenchRecord, Instance, InterdictionReport, SolveReport

FORMAT_VERSION = 1

DecimalField = Union[StrictInt, str]


def to_scaled(raw: DecimalField, scale: int, where: str) -> int:
    """Exact scaled integer of a decimal field"""
    try:
        value = Decimal(raw) if isinstance(raw, int) else Decimal(raw.strip())
    except InvalidOperation:
        raise DocumentParseError(f"{where}: {raw!r} is not a decimal number")
    if not value.is_finite():
        raise DocumentParseError(f"{where}: {raw!r} is not a finite decimal")
    shift = len(str(scale)) - 1
    with localcontext() as ctx:
        # wide enough for every digit of the input, then trap anything that still rounds
        ctx.prec = max(ctx.prec, len(value.as_tuple().digits) + shift + 1)
        ctx.traps[Inexact] = True
        ctx.traps[Rounded] = True
        try:
            scaled = value.scaleb(shift)
        except (Inexact, Rounded):
            raise DocumentParseError(f"{where}: {raw!r} cannot be scaled exactly")
        if scaled != scaled.to_integral_value():
            raise DocumentParseError(f"{where}: {raw!r} has more fractional digits than scale {scale} allows")
    return int(scaled)


def format_scaled(value: int, scale: int) -> str:
    """Decimal text of a scaled integer with exactly log10(scale) fractional digits"""
    digits = len(str(scale)) - 1
    if digits == 0:
        return str(value)
    whole, fraction = divmod(abs(value), scale)
    sign = "-" if value < 0 else ""
    return f"{sign}{whole}.{fraction:0{digits}d}"


def is_power_of_ten(scale: int) -> bool:
    return scale >= 1 and str(scale).rstrip("0") == "1"


class EdgeRecordSchema(BaseModel):
    """Schema for one edge record"""
    model_config = ConfigDict(extra="forbid")

    parent: str = Field(..., min_length=1, description="Parent node label")
    child: str = Field(..., min_length=1, description="Child node label, also the edge id")
    w: DecimalField = Field(..., description="Current weight")
    l: DecimalField = Field(..., description="Lower bound of the adjusted weight")  # noqa: E741
    u: DecimalField = Field(..., description="Upper bound of the adjusted weight")
    c: DecimalField = Field(..., description="Cost of changing the edge")


class InstanceDocument(BaseModel):
    """Schema for an instance document"""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    format_version: int = Field(FORMAT_VERSION, description="Document format version")
    scale: Optional[int] = Field(None, description="Decimal scale factor (power of ten)")
    root: str = Field(..., min_length=1, description="Root node label")
    t0: Optional[str] = Field(None, description="Designated leaf for RIOVSPT")
    target: Optional[DecimalField] = Field(None, alias="D", description="Target value D")
    edges: List[EdgeRecordSchema] = Field(..., min_length=1, description="Edge records")

    @field_validator("format_version")
    @classmethod
    def supported_version(cls, value: int) -> int:
        if value != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {value}, expected {FORMAT_VERSION}")
        return value

    @field_validator("scale")
    @classmethod
    def power_of_ten(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not is_power_of_ten(value):
            raise ValueError(f"scale must be a positive power of ten, got {value}")
        return value

    @classmethod
    def from_instance(cls, instance: Instance) -> "InstanceDocument":
        scale = instance.scale
        tree = instance.tree
        return cls(
            format_version=FORMAT_VERSION,
            scale=scale,
            root=tree.root,
            t0=instance.t0,
            target=None if instance.target is None else format_scaled(instance.target, scale),
            edges=[
                EdgeRecordSchema(
                    parent=tree.parent[edge],
                    child=edge,
                    w=format_scaled(a.w, scale),
                    l=format_scaled(a.l, scale),
                    u=format_scaled(a.u, scale),
                    c=format_scaled(a.c, scale),
                )
                for edge, a in zip(tree.edges, instance.attrs)
            ],
        )


class ChangedEdgeSchema(BaseModel):
    """Schema for one modified edge"""
    edge: str
    parent: str
    old: str
    new: str


class EdgeValueSchema(BaseModel):
    """Schema for one entry of an assignment"""
    edge: str
    value: str


class SolveResultSchema(BaseModel):
    """Schema for a solve result document"""
    problem: str = Field(..., description="riovspt, mcspit or mspit")
    status: str = Field(..., description="solved, infeasible or already_optimal")
    objective: Optional[str] = Field(None, description="Bottleneck Hamming cost")
    rung: Optional[int] = Field(None, description="Index k of the optimal cost C_k")
    iterations: int = Field(0, description="Feasibility checks or upgrade evaluations performed")
    achieved_shortest: Optional[str] = Field(None, description="Shortest root-leaf length under the assignment")
    changed_edges: List[ChangedEdgeSchema] = Field(default_factory=list)
    assignment: List[EdgeValueSchema] = Field(default_factory=list)

    @classmethod
    def from_report(
        cls, problem: str, instance: Instance, report: Union[SolveReport, InterdictionReport]
    ) -> "SolveResultSchema":
        scale = instance.scale
        assignment = report.assignment
        shortest = None
        if isinstance(report, InterdictionReport) and report.achieved_shortest is not None:
            shortest = format_scaled(report.achieved_shortest, scale)
        return cls(
            problem=problem,
            status=report.status.value,
            objective=None if report.objective is None else format_scaled(report.objective, scale),
            rung=report.rung,
            iterations=report.iterations,
            achieved_shortest=shortest,
            changed_edges=[
                ChangedEdgeSchema(
                    edge=change.edge,
                    parent=change.parent,
                    old=format_scaled(change.old, scale),
                    new=format_scaled(change.new, scale),
                )
                for change in report.changed_edges
            ],
            assignment=[]
            if assignment is None
            else [
                EdgeValueSchema(edge=edge, value=format_scaled(value, scale))
                for edge, value in zip(instance.tree.edges, assignment.values)
            ],
        )

    def to_document(self) -> str:
        """Deterministic JSON text; achieved_shortest only appears for interdiction problems"""
        exclude = {"achieved_shortest"} if self.problem == "riovspt" else set()
        return json.dumps(self.model_dump(exclude=exclude), indent=2) + "\n"


class BenchRecordSchema(BaseModel):
    """Schema for one benchmark row"""
    n: int = Field(..., ge=2)
    algorithm: str
    trials: int = Field(..., ge=1)
    t_avg: float
    t_max: float
    t_min: float

    @classmethod
    def from_record(cls, record: BenchRecord) -> "BenchRecordSchema":
        return cls(
            n=record.n,
            algorithm=record.algorithm.value,
            trials=record.trials,
            t_avg=record.t_avg,
            t_max=record.t_max,
            t_min=record.t_min,
        )
