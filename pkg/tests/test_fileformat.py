import pytest

from conormal.errors import AmbiguousAdjacencyError, ParseError, ValidationError
from conormal.fileformat import dump, load, parse, serialize
from conormal.poset import simplex

from conftest import bigon

SIMPLEX2_NO_ADJ = """\
corners 1   # header
n 3
face X 0
face H1 1 1
face H2 1 2
face H3 1 3

# corners
face F1_2 2 1 2
face F1_3 2 1 3
face F2_3 2 2 3
"""


def test_round_trip_every_builder(builders):
    for name, poset in builders.items():
        assert parse(serialize(poset)) == poset, name


def test_round_trip_random_products(products100):
    for name, poset in products100[:25]:
        text = serialize(poset)
        assert parse(text.encode()) == poset, name
        assert serialize(parse(text)) == text


def test_auto_adjacency_when_no_adj_lines():
    assert parse(SIMPLEX2_NO_ADJ) == simplex(2)


def test_bigon_needs_explicit_adjacency():
    text = serialize(bigon())
    assert parse(text) == bigon()
    stripped = "\n".join(line for line in text.splitlines() if not line.startswith("adj"))
    with pytest.raises(AmbiguousAdjacencyError, match="ambiguous adjacency"):
        parse(stripped)


def test_codim_mismatch_is_rejected():
    with pytest.raises(ParseError) as exc:
        parse("corners 1\nn 2\nface X 0\nface v 2 1\n")
    assert exc.value.lineno == 4


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("", None),
        ("corner 1\nn 0\nface X 0\n", 1),
        ("corners 1\nm 0\n", 2),
        ("corners 1\nn x\n", 2),
        ("corners 1\nn 1\nface X 0\nface H1 1 one\n", 4),
        ("corners 1\nn 2\nface X 0\nface v 2 2 1\n", 4),
        ("corners 1\nn 1\nface X 0\nface H1 1 1\nface H1 1 1\n", 5),
        ("corners 1\nn 1\nface X 0\nface H1 1 1\nadj H1 X\nface Y 0\n", 6),
        ("corners 1\nn 1\nface X 0\nface H1 1 1\nadj H1 Z\n", 5),
        ("corners 1\nn 1\nface X 0\nface H1 1 1\nadj X H1\n", 5),
        ("corners 1\nn 1\nface X 0\nhello\n", 4),
    ],
)
def test_syntax_errors(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.lineno == lineno


def test_validation_failure_is_distinct_from_syntax():
    text = "corners 1\nn 2\nface X 0\nface H1 1 1\n"
    with pytest.raises(ValidationError) as exc:
        parse(text)
    assert "hypersurface 2 missing" in str(exc.value)
    assert not isinstance(exc.value, ParseError)
    assert len(parse(text, check=False).faces) == 2


def test_non_utf8_bytes():
    with pytest.raises(ParseError):
        parse(b"corners 1\nn 0\nface \xff 0\n")


def test_load_and_dump(tmp_path):
    path = tmp_path / "s.corners"
    dump(simplex(3), path)
    assert load(path) == simplex(3)
