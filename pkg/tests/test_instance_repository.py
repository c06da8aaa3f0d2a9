import io
import json

import pytest

from app.api.schemas import format_scaled, to_scaled
from app.domain.exceptions import DocumentParseError
from app.infrastructure.repositories.instance_repository import (
    InstanceFileRepository,
    parse_instance,
    serialize_instance,
)

SINGLE_EDGE = """{
  "format_version": 1,
  "scale": 1,
  "root": "v1",
  "t0": "v2",
  "D": "7",
  "edges": [
    {
      "parent": "v1",
      "child": "v2",
      "w": "5",
      "l": "3",
      "u": "9",
      "c": "2"
    }
  ]
}
"""


def _document(**overrides):
    payload = json.loads(SINGLE_EDGE)
    edge = overrides.pop("edge", {})
    payload["edges"][0].update(edge)
    payload.update(overrides)
    return json.dumps(payload)


def test_single_edge_round_trip():
    instance = parse_instance(SINGLE_EDGE)
    assert instance.tree.edges == ("v2",)
    assert instance.target == 7
    assert serialize_instance(instance) == SINGLE_EDGE


def test_example1_document(example1, example1_text):
    assert example1.tree.node_count == 17
    assert example1.tree.edge_count == 16
    assert serialize_instance(example1) == example1_text


def test_integer_fields_are_accepted():
    instance = parse_instance(_document(D=7, edge={"w": 5, "l": 3, "u": 9, "c": 2}))
    assert instance.attrs[0].w == 5
    assert serialize_instance(instance) == SINGLE_EDGE


def test_decimal_scale():
    instance = parse_instance(_document(scale=10, D="6.5", edge={"w": "5.5", "l": 3, "u": "9.0", "c": "0.2"}))
    assert instance.target == 65
    assert (instance.attrs[0].w, instance.attrs[0].l, instance.attrs[0].u, instance.attrs[0].c) == (55, 30, 90, 2)
    text = serialize_instance(instance)
    assert '"w": "5.5"' in text
    assert '"l": "3.0"' in text
    assert serialize_instance(parse_instance(text)) == text


def test_scale_argument_overrides_document():
    instance = parse_instance(SINGLE_EDGE, scale=100)
    assert instance.scale == 100
    assert instance.attrs[0].w == 500
    assert '"w": "5.00"' in serialize_instance(instance)


def test_optional_t0_and_target():
    payload = json.loads(SINGLE_EDGE)
    del payload["t0"], payload["D"]
    instance = parse_instance(json.dumps(payload))
    assert instance.t0 is None and instance.target is None
    assert '"D"' not in serialize_instance(instance)


def test_l_above_w_names_the_edge():
    with pytest.raises(DocumentParseError, match=r"edges\.0.*v2"):
        parse_instance(_document(edge={"l": "6"}))


@pytest.mark.parametrize(
    "text, where",
    [
        ("{not json", "line 1"),
        (_document(edge={"w": "five"}), "edges.0"),
        (_document(edge={"w": 5.5}), "edges.0.w"),
        (_document(edge={"w": "5.25"}), "edges.0"),
        (_document(edge={"extra": 1}), "edges.0.extra"),
        (_document(format_version=2), "format_version"),
        (_document(scale=3), "scale"),
        (_document(edges=[]), "edges"),
        (_document(t0="v1"), "leaf"),
    ],
)
def test_parse_errors(text, where):
    with pytest.raises(DocumentParseError) as info:
        parse_instance(text)
    assert where in str(info.value)


def test_missing_field_path():
    payload = json.loads(SINGLE_EDGE)
    del payload["edges"][0]["c"]
    with pytest.raises(DocumentParseError, match=r"edges\.0\.c"):
        parse_instance(json.dumps(payload))


def test_structure_errors_become_parse_errors():
    payload = json.loads(SINGLE_EDGE)
    payload["edges"].append(dict(payload["edges"][0]))
    with pytest.raises(DocumentParseError, match="duplicate"):
        parse_instance(json.dumps(payload))


def test_decimal_helpers():
    assert to_scaled("1.25", 100, "x") == 125
    assert to_scaled(3, 10, "x") == 30
    assert format_scaled(125, 100) == "1.25"
    assert format_scaled(5, 100) == "0.05"
    assert format_scaled(7, 1) == "7"
    with pytest.raises(DocumentParseError):
        to_scaled("1.25", 10, "x")
    with pytest.raises(DocumentParseError):
        to_scaled("nan", 10, "x")


def test_wide_decimals_scale_exactly():
    assert to_scaled("1234567890123456789012345678.9", 10, "x") == 12345678901234567890123456789
    assert to_scaled("-98765432109876543210987654321.25", 100, "x") == -9876543210987654321098765432125
    assert to_scaled(10**40 + 1, 1000, "x") == (10**40 + 1) * 1000
    with pytest.raises(DocumentParseError, match="fractional digits"):
        to_scaled("1234567890123456789012345678.95", 10, "x")


def test_wide_target_survives_parsing():
    payload = json.loads(SINGLE_EDGE)
    payload["D"] = "123456789012345678901234567890123"
    instance = parse_instance(json.dumps(payload))
    assert instance.target == 123456789012345678901234567890123 * instance.scale


def test_file_repository(tmp_path, example1):
    repository = InstanceFileRepository(stdin=io.StringIO(SINGLE_EDGE))
    assert repository.load("-").tree.edges == ("v2",)

    target = tmp_path / "copy.json"
    with open(target, "w", encoding="utf-8") as handle:
        repository.save(example1, handle)
    assert serialize_instance(repository.load(str(target))) == serialize_instance(example1)

    with pytest.raises(DocumentParseError, match="cannot read"):
        repository.load(str(tmp_path / "missing.json"))
