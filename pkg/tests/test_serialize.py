"""JSON algebra documents: parsing, validation, canonical round trips."""

import json

import pytest

from extraspecial.algebra import Algebra
from extraspecial.catalog import BlockDescriptor, central_sum, make_canonical
from extraspecial.cohomology import cover
from extraspecial.dialg import Dialgebra, embed_associative
from extraspecial.errors import ParseError, UnsupportedField
from extraspecial.scalars import Field
from extraspecial.serialize import algebra_to_doc, parse_algebra, write_algebra

Q = Field.rationals()

J2_DOC = """
{
  "field": {"kind": "Q"},
  "dim": 3,
  "basis": ["x1", "x2", "z"],
  "products": [[0, 1, 2, "1"]]
}
"""


def test_parse_j2_document():
    a = parse_algebra(J2_DOC)
    assert isinstance(a, Algebra)
    assert a.dim == 3
    assert a == make_canonical(BlockDescriptor("j", 2), Q)


def test_parse_empty_products_is_zero_algebra():
    a = parse_algebra('{"field": {"kind": "Q"}, "dim": 2, "products": []}')
    assert list(a.nonzero_products()) == []


def test_parse_rejects_characteristic_two():
    with pytest.raises(UnsupportedField):
        parse_algebra('{"field": {"kind": "GF", "p": 2}, "dim": 2, "products": []}')


def test_parse_rejects_out_of_range_indices():
    with pytest.raises(ParseError):
        parse_algebra('{"field": {"kind": "Q"}, "dim": 2, "products": [[0, 2, 0, "1"]]}')


def test_parse_rejects_duplicate_cells():
    doc = '{"field": {"kind": "Q"}, "dim": 2, "products": [[0, 1, 0, "1"], [0, 1, 0, "2"]]}'
    with pytest.raises(ParseError):
        parse_algebra(doc)


def test_parse_rejects_bad_json_with_location():
    with pytest.raises(ParseError):
        parse_algebra("{not json")


def test_parse_rejects_bad_coefficient():
    doc = '{"field": {"kind": "Q"}, "dim": 2, "products": [[0, 1, 0, "x"]]}'
    with pytest.raises((ParseError, UnsupportedField)):
        parse_algebra(doc)


def test_parse_gf_coefficients():
    doc = '{"field": {"kind": "GF", "p": 5}, "dim": 2, "products": [[0, 0, 1, "7"]]}'
    a = parse_algebra(doc)
    assert a.structure_constant(0, 0, 1).value == 2


def test_round_trip_catalog_instances():
    for args in [("j", 1), ("j", 4), ("gamma", 3), ("h", 1, 3), ("h", 2, 5)]:
        a = make_canonical(BlockDescriptor(*args), Q)
        assert parse_algebra(write_algebra(a)) == a


def test_round_trip_central_sum_and_cover():
    s = central_sum(
        make_canonical(BlockDescriptor("j", 2), Q),
        make_canonical(BlockDescriptor("h", 1, 3), Q),
    )
    assert parse_algebra(write_algebra(s)) == s
    total = cover(make_canonical(BlockDescriptor("j", 1), Q)).total
    assert parse_algebra(write_algebra(total)) == total


def test_cover_of_j1_serializes_three_products():
    total = cover(make_canonical(BlockDescriptor("j", 1), Q)).total
    doc = json.loads(write_algebra(total))
    assert len(doc["products"]) == 3


def test_j1_document_single_entry():
    a = make_canonical(BlockDescriptor("j", 1), Q)
    doc = json.loads(write_algebra(a))
    assert doc["products"] == [[0, 0, 1, "1"]]


def test_write_is_canonical():
    a = parse_algebra(J2_DOC)
    assert write_algebra(parse_algebra(write_algebra(a))) == write_algebra(a)


def test_dialgebra_round_trip():
    d = embed_associative(make_canonical(BlockDescriptor("h", 1, 3), Q))
    text = write_algebra(d)
    parsed = parse_algebra(text)
    assert isinstance(parsed, Dialgebra)
    assert parsed == d


def test_negative_rational_coefficients_round_trip():
    a = make_canonical(BlockDescriptor("gamma", 4), Q)
    assert parse_algebra(write_algebra(a)) == a
