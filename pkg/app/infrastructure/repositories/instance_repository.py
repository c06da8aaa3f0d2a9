import json
import logging
import sys
from typing import Optional, TextIO

from pydantic import ValidationError

from ...api.schemas import InstanceDocument, is_power_of_ten, to_scaled
from ...domain.exceptions import AttributeBoundsError, DocumentParseError, InstanceError
from ...domain.interfaces import InstanceRepository
from ...domain.models import Instance
from ...domain.tree import build_instance
from config import get_config

logger = logging.getLogger(__name__)


def parse_instance(text: str, scale: Optional[int] = None) -> Instance:
    """Validate an instance document and convert its decimals to scaled integers.

    The scale comes from the argument, then the document, then DEFAULT_SCALE.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")

    try:
        document = InstanceDocument.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "document"
        raise DocumentParseError(f"{where}: {first['msg']}")

    if scale is None:
        scale = document.scale if document.scale is not None else get_config().DEFAULT_SCALE
    if not is_power_of_ten(scale):
        raise DocumentParseError(f"scale must be a positive power of ten, got {scale}")

    records = []
    for idx, edge in enumerate(document.edges):
        where = f"edges.{idx} ({edge.parent} -> {edge.child})"
        records.append((
            edge.parent,
            edge.child,
            to_scaled(edge.w, scale, f"{where}.w"),
            to_scaled(edge.l, scale, f"{where}.l"),
            to_scaled(edge.u, scale, f"{where}.u"),
            to_scaled(edge.c, scale, f"{where}.c"),
        ))
    target = None if document.target is None else to_scaled(document.target, scale, "D")

    try:
        instance = build_instance(records, document.root, t0=document.t0, target=target, scale=scale)
    except AttributeBoundsError as e:
        idx = next((i for i, edge in enumerate(document.edges) if edge.child == e.edge), None)
        raise DocumentParseError(f"edges.{idx}: {e}" if idx is not None else str(e)) from e
    except InstanceError as e:
        raise DocumentParseError(str(e)) from e

    logger.info(f"Parsed instance with {instance.tree.node_count} nodes at scale {scale}")
    return instance


def serialize_instance(instance: Instance) -> str:
    """Canonical document text: canonical edge order, fixed decimals, two-space indent"""
    document = InstanceDocument.from_instance(instance)
    payload = document.model_dump(by_alias=True, exclude_none=True)
    return json.dumps(payload, indent=2) + "\n"


class InstanceFileRepository(InstanceRepository):
    """Instance documents stored as JSON files"""

    def __init__(self, stdin: Optional[TextIO] = None):
        self.stdin = stdin

    def load(self, source: str, scale: Optional[int] = None) -> Instance:
        if source == "-":
            text = (self.stdin or sys.stdin).read()
        else:
            try:
                with open(source, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as e:
                raise DocumentParseError(f"cannot read {source}: {e.strerror}")
        logger.debug(f"Loading instance from {'stdin' if source == '-' else source}")
        return parse_instance(text, scale)

    def save(self, instance: Instance, destination: TextIO) -> None:
        destination.write(serialize_instance(instance))
