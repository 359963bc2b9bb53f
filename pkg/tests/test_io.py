import json

import pytest
from hypothesis import given, strategies as st

from lie_breadth import catalog
from lie_breadth.errors import DuplicateBracket, IndexOutOfRange, JacobiViolation, ParseError
from lie_breadth.io import (
    parse_algebra,
    parse_cochain,
    read_algebra,
    serialize_algebra,
    serialize_cochain,
    write_text,
)
from lie_breadth.lie import Cochain2, LieAlgebra


def doc(brackets, dim=3, **extra):
    return json.dumps({"name": "t", "dim": dim, "brackets": brackets, **extra})


def test_serialize_g_1_0_4():
    text = serialize_algebra(catalog.build("g_1_0_k", 5))
    assert json.loads(text) == {
        "name": "g_1_0_4", "dim": 5,
        "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
                     {"i": 1, "j": 3, "terms": [{"k": 4, "c": "1"}]}],
    }
    assert text.endswith("}\n") and "\n  " in text


def test_round_trip_full_catalog():
    for entry, n, params in catalog.instances(range(4, 11)):
        g = entry.build(n, params)
        text = serialize_algebra(g)
        h = parse_algebra(text)
        assert h == g and h.name == g.name
        assert serialize_algebra(h) == text


def test_alpha_half_preserved():
    g = catalog.build("n7_117", params={"alpha": "1/2"})
    text = serialize_algebra(g)
    assert '"c": "1/2"' in text
    assert parse_algebra(text) == g


def test_serialization_canonical_order():
    # input order and sign convention are normalised
    text = doc([{"i": 2, "j": 3, "terms": [{"k": 1, "c": "2"}]},
                {"i": 1, "j": 2, "terms": [{"k": 3, "c": "-1/3"}, {"k": 1, "c": "0"}]}])
    out = json.loads(serialize_algebra(parse_algebra(text)))
    assert [(r["i"], r["j"]) for r in out["brackets"]] == [(1, 2), (2, 3)]
    assert out["brackets"][0]["terms"] == [{"k": 3, "c": "-1/3"}]


@pytest.mark.parametrize("brackets, err, where", [
    ([{"i": 2, "j": 2, "terms": []}], IndexOutOfRange, "$.brackets[0]"),
    ([{"i": 3, "j": 1, "terms": []}], IndexOutOfRange, "$.brackets[0]"),
    ([{"i": 1, "j": 4, "terms": []}], IndexOutOfRange, "$.brackets[0]"),
    ([{"i": 1, "j": 2, "terms": [{"k": 9, "c": "1"}]}], IndexOutOfRange, "$.brackets[0].terms[0].k"),
    ([{"i": 1, "j": 2, "terms": []}, {"i": 1, "j": 2, "terms": []}], DuplicateBracket, "$.brackets[1]"),
    ([{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}, {"k": 3, "c": "2"}]}], DuplicateBracket,
     "$.brackets[0].terms[1].k"),
    ([{"i": 1, "j": 2, "terms": [{"k": 3, "c": "2/4"}]}], ParseError, "$.brackets[0].terms[0].c"),
    ([{"i": 1, "j": 2, "terms": [{"k": 3, "c": 1}]}], ParseError, "$.brackets[0].terms[0].c"),
    ([{"i": True, "j": 2, "terms": []}], ParseError, "$.brackets[0].i"),
    ([{"i": 1, "j": 2}], ParseError, "$.brackets[0].terms"),
    ([{"i": 1, "j": 2, "terms": [], "x": 0}], ParseError, "$.brackets[0].x"),
])
def test_parse_errors_carry_paths(brackets, err, where):
    with pytest.raises(err) as info:
        parse_algebra(doc(brackets))
    assert where in str(info.value)


def test_parse_document_errors():
    with pytest.raises(ParseError, match="line 1, column"):
        parse_algebra("{")
    with pytest.raises(ParseError, match=r"\$\.dim"):
        parse_algebra(json.dumps({"name": "t", "brackets": []}))
    with pytest.raises(ParseError, match=r"\$\.extra"):
        parse_algebra(doc([], extra=1))
    with pytest.raises(ParseError):
        parse_algebra("[]")


def test_parse_strict_checks_jacobi():
    text = doc([{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}, {"i": 2, "j": 3, "terms": [{"k": 2, "c": "1"}]}])
    parse_algebra(text)
    with pytest.raises(JacobiViolation):
        parse_algebra(text, strict=True)


def test_cochain_file_round_trip():
    phi = Cochain2.from_dict(5, {(2, 3): {5: 1}})
    text = serialize_cochain(phi, "phi23to5", base="g_1_0_4")
    f = parse_cochain(text)
    assert f.name == "phi23to5" and f.base == "g_1_0_4" and f.cochain == phi
    assert serialize_cochain(f.cochain, f.name, f.base) == text
    assert parse_cochain(serialize_cochain(phi, "x")).base is None
    with pytest.raises(ParseError, match=r"\$\.base"):
        parse_cochain(doc([], base=3))
    with pytest.raises(ParseError, match=r"\$\.base"):
        parse_algebra(doc([], base="g"))


def test_files_are_utf8(tmp_path):
    g = LieAlgebra.from_brackets("𝔤_ü", 3, {(1, 2): {3: 1}})
    p = tmp_path / "g.json"
    write_text(p, serialize_algebra(g))
    assert "𝔤_ü" in p.read_text(encoding="utf-8")
    assert read_algebra(p) == g


@st.composite
def tables(draw):
    n = draw(st.integers(1, 6))
    q = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    table = {}
    for pair in draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []:
        table[pair] = draw(st.dictionaries(st.integers(1, n), q, max_size=3))
    return n, table


@given(tables())
def test_fixed_point(case):
    n, table = case
    g = LieAlgebra.from_brackets("r", n, table, strict=False)
    s = serialize_algebra(g)
    assert serialize_algebra(parse_algebra(s)) == s
    assert parse_algebra(s) == g
