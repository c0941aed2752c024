"""JSON serialization, normal forms and invariant validation."""

import json

import pytest

from splitkit.core import (
    BipartitePoset,
    Graph,
    KSPartition,
    ParseError,
    SetCover,
    ValidationError,
    XYGraph,
    parse_object,
    serialize_object,
    validate,
)


def test_parse_object_examples():
    cover = parse_object('{"class":"cover","n":3,"sets":[[0,1],[1,2]]}')
    assert cover == SetCover(3, ((0, 1), (1, 2)))

    xy = parse_object('{"class":"xy","nx":1,"ny":1,"edges":[[0,0]]}')
    assert xy == XYGraph(1, 1, frozenset({(0, 0)}))

    poset = parse_object('{"class":"poset","n0":2,"n1":1,"below":[[0,0],[1,0]]}')
    assert poset == BipartitePoset(2, 1, frozenset({(0, 0), (1, 0)}))


def test_roundtrip_field_identity():
    objects = [
        SetCover(0, ()),
        SetCover(4, ((0, 1), (1, 2), (2, 3))),
        XYGraph(0, 0, frozenset()),
        XYGraph(2, 3, frozenset({(0, 0), (1, 2), (0, 2)})),
        BipartitePoset(0, 0, frozenset()),
        BipartitePoset(3, 2, frozenset({(0, 0), (1, 0), (2, 1)})),
    ]
    for obj in objects:
        assert parse_object(serialize_object(obj)) == obj


def test_serialized_normal_form_is_sorted():
    # field identity <=> byte identity: scrambled input serializes the same
    a = SetCover(3, ((1, 0), (2, 1)))
    b = SetCover(3, ((1, 2), (0, 1)))
    assert serialize_object(a) == serialize_object(b)
    doc = json.loads(serialize_object(a))
    assert doc["sets"] == [[0, 1], [1, 2]]

    xy = XYGraph(2, 2, frozenset({(1, 1), (0, 0)}))
    assert json.loads(serialize_object(xy))["edges"] == [[0, 0], [1, 1]]


def test_parse_rejects_invalid_structure():
    with pytest.raises(ValidationError) as err:
        parse_object('{"class":"cover","n":3,"sets":[[0,1]]}')
    assert "element 2 uncovered" in str(err.value)

    with pytest.raises(ValidationError):
        parse_object('{"class":"xy","nx":1,"ny":1,"edges":[[0,5]]}')

    with pytest.raises(ValidationError) as err:
        parse_object('{"class":"poset","n0":1,"n1":1,"below":[]}')
    assert "empty down-set" in str(err.value)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_object("{not json")
    with pytest.raises(ParseError):
        parse_object('{"class":"widget","n":1}')
    with pytest.raises(ParseError):
        parse_object('{"n":3,"sets":[]}')
    with pytest.raises(ParseError):
        parse_object('{"class":"cover","n":3}')


def test_validate_cover_examples():
    assert validate(SetCover(3, ((0, 1),))) == ["union ≠ ground set: element 2 uncovered"]
    assert validate(SetCover(3, ((0, 1), (1, 2)))) == []
    dup = SetCover(2, ((0, 1), (0, 1)))
    assert any("duplicate" in v for v in validate(dup))
    bad = SetCover(2, ((0, 5),))
    assert any("out-of-range" in v for v in validate(bad))


def test_validate_partition_examples():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    good = KSPartition(p4, frozenset({1, 2}), frozenset({0, 3}))
    assert validate(good) == []

    bad_clique = KSPartition(p4, frozenset({0, 3}), frozenset({1, 2}))
    problems = validate(bad_clique)
    assert any("K not a clique" in v for v in problems)
    assert any("S not stable" in v for v in problems)

    overlapping = KSPartition(p4, frozenset({0, 1}), frozenset({1, 2, 3}))
    assert any("∩" in v for v in validate(overlapping))

    incomplete = KSPartition(p4, frozenset({1}), frozenset({0}))
    assert any("misses" in v for v in validate(incomplete))


def test_validate_is_total_on_odd_values():
    # arbitrary well-typed fields never raise, they report
    assert validate(Graph(2, (2, 0))) == ["adjacency not symmetric: (0,1)"]
    assert validate(Graph(1, (1,))) == ["self-loop at 0"]
    assert any("beyond" in v for v in validate(Graph(1, (2,))))
    assert validate(XYGraph(1, 1, frozenset({(0, 3)}))) != []
    assert validate(BipartitePoset(1, 2, frozenset({(0, 0)}))) == [
        "height-1 point 1 has empty down-set"
    ]


def test_n_zero_objects_are_legal():
    for text in (
        '{"class":"cover","n":0,"sets":[]}',
        '{"class":"xy","nx":0,"ny":0,"edges":[]}',
        '{"class":"poset","n0":0,"n1":0,"below":[]}',
    ):
        obj = parse_object(text)
        assert validate(obj) == []
