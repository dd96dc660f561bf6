"""Complex file grammar: round trips and located parse errors."""

import pytest

from aufhebung.bounds import (
    build_counterexample,
    random_skeletal_complex,
)
from aufhebung.fileio import (
    ParseError,
    parse_cell,
    parse_complex,
    parse_sphere,
    serialize_complex,
)
from aufhebung.fillers import boundary, cell_literal


CUBICAL = """\
# two squares on a point
shape cubical
skeletal 1
truncate 4
gen v dim 0
gen x dim 1 faces v v
gen y dim 1 faces v v
"""


def test_parse_basic():
    X = parse_complex(CUBICAL)
    assert X.shape == "cubical"
    assert X.skeletal_level == 1 and X.truncation == 4
    assert list(X.generators) == ["v", "x", "y"]
    assert X.validate().ok


def test_round_trip_all_builders():
    for shape, n in (("cubical", 1), ("cubical", 2), ("simplicial", 3),
                     ("globular", 2), ("cyclic", 1), ("cyclic", 2)):
        X, _ = build_counterexample(shape, n)
        text = serialize_complex(X)
        Y = parse_complex(text)
        assert serialize_complex(Y) == text
        assert list(Y.generators) == list(X.generators)
        for a, b in zip(X.generators.values(), Y.generators.values()):
            assert (a.name, a.dim, a.faces) == (b.name, b.dim, b.faces)


def test_round_trip_random_complexes():
    for seed in range(3):
        for shape in ("simplicial", "cubical", "globular", "cyclic"):
            X = random_skeletal_complex(shape, 1, seed=seed)
            text = serialize_complex(X)
            Y = parse_complex(text)
            assert serialize_complex(Y) == text


def test_cell_literals():
    X = parse_complex(CUBICAL)
    c = parse_cell(X, "x[b1]")
    assert c.generator == "x" and c.dim == 2
    assert cell_literal(c) == "x[b1]"
    v = parse_cell(X, "v")
    assert v.epi.is_identity
    assert cell_literal(v) == "v"


def test_sphere_literal_round_trip():
    X = parse_complex(CUBICAL)
    s = boundary(X, parse_cell(X, "x[b1]"))
    text = s.literal()
    t = parse_sphere(X, text)
    assert t == s


def test_unknown_generator_rejected_with_line():
    bad = CUBICAL + "gen z dim 1 faces v w\n"
    with pytest.raises(ParseError) as err:
        parse_complex(bad)
    assert err.value.line == 8


def test_arity_mismatch_rejected():
    bad = "shape simplicial\nskeletal 1\ngen v dim 0\ngen e dim 1 faces v\n"
    with pytest.raises(ParseError) as err:
        parse_complex(bad)
    assert err.value.line == 4
    assert "2 faces" in str(err.value)


def test_bad_directives_rejected():
    with pytest.raises(ParseError):
        parse_complex("shape octahedral\nskeletal 0\n")
    with pytest.raises(ParseError):
        parse_complex("skeletal 0\n")
    with pytest.raises(ParseError):
        parse_complex("shape simplicial\n")
    with pytest.raises(ParseError):
        parse_complex("shape simplicial\nskeletal 0\nfrob v\n")
    with pytest.raises(ParseError):
        parse_complex("shape simplicial\nskeletal x\n")


def test_bad_cell_word_rejected():
    bad = "shape simplicial\nskeletal 1\ngen v dim 0\ngen e dim 1 faces v[d0 v\n"
    with pytest.raises(ParseError):
        parse_complex(bad)


def test_comments_and_blank_lines_ignored():
    text = "\n# header\nshape globular\n\nskeletal 0\n  # indented comment\ngen v dim 0  # trailing\n"
    X = parse_complex(text)
    assert X.shape == "globular" and list(X.generators) == ["v"]
