import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moyweb.moygraph import (
    Edge,
    MoyGraph,
    ParseError,
    ValidationError,
    Vertex,
    connected_components,
    disjoint_union,
    find_top_colour_pattern,
    genus,
    link_genus,
    parse_lnk,
    parse_moy,
    render_lnk,
    render_moy,
    smooth_unit_and_zero,
    top_colour_patterns,
    validate,
    with_n,
)
from moyweb.moves import all_fixtures, make_move_fixture

THETA = "n 4\nedge a 2\nedge b 1\nedge c 1\nvertex v1 a.h b.t c.t\nvertex v2 c.h b.h a.t\n"
# same edges, but the cyclic order (a, b, c) at both vertices: a torus theta
TORUS_THETA = THETA.replace("vertex v2 c.h b.h a.t", "vertex v2 b.h c.h a.t")


def test_parse_circle():
    g = parse_moy("n 4\ncircle c 2\n")
    assert (len(g.circles), len(g.edges), len(g.vertices)) == (1, 0, 0)


def test_parse_theta_sample():
    g = parse_moy(THETA.encode())
    assert len(g.vertices) == 2 and len(g.edges) == 3
    assert sorted(v.kind for v in g.vertices) == ["merge", "split"]
    assert genus(g) == 0


def test_torus_rotation_parses_but_has_genus_one():
    # planarity is trusted by the parser; genus is the diagnostic
    assert genus(parse_moy(TORUS_THETA)) == 1


def test_comments_and_blank_lines():
    g = parse_moy("# theta\n\n" + THETA.replace("edge a 2", "edge a 2   # thick"))
    assert g == parse_moy(THETA)


def test_flow_violation_names_vertex():
    text = "n 4\nedge a 1\nedge b 1\nedge d 3\nvertex v1 d.h b.t a.t\nvertex v2 d.t a.h b.h\n"
    with pytest.raises(ValidationError, match="v1"):
        parse_moy(text)


@pytest.mark.parametrize("text, pattern", [
    ("edge a 1\n", "first line"),
    ("n 3\nn 3\n", "twice"),
    ("n x\n", "integer"),
    ("n 3\nedge a\n", "id and a colour"),
    ("n 3\nvertex v a.t b.h\n", "three references"),
    ("n 3\nedge a 1\nvertex v a.q a.h a.t\n", "half-edge"),
    ("n 3\nblob a\n", "unknown keyword"),
    ("", "missing"),
])
def test_parse_errors(text, pattern):
    with pytest.raises(ParseError, match=pattern):
        parse_moy(text)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as exc:
        parse_moy("n 3\n\nedge a one\n")
    assert exc.value.line == 3


def test_bad_utf8():
    with pytest.raises(ParseError):
        parse_moy(b"n 3\n\xff\n")


def test_validation_errors():
    with pytest.raises(ValidationError, match="a"):
        parse_moy("n 2\nedge a 3\n")
    # head used twice
    with pytest.raises(ValidationError):
        parse_moy(THETA.replace("vertex v2 c.h b.h a.t", "vertex v2 b.h b.h a.t"))
    # dangling tail
    with pytest.raises(ValidationError):
        parse_moy("n 3\nedge a 1\nedge b 1\nedge c 2\nvertex v a.h b.h c.t\n")


def test_empty_graph_valid():
    validate(MoyGraph(3))
    assert parse_moy("n 3\n").is_empty()


def test_vertex_rotation_is_cyclic():
    a = Vertex("v", (("x", "t"), ("y", "h"), ("z", "h")))
    b = Vertex("v", (("z", "h"), ("x", "t"), ("y", "h")))
    assert a == b
    c = Vertex("v", (("x", "t"), ("z", "h"), ("y", "h")))
    assert a != c


def test_render_parse_roundtrip():
    for f in all_fixtures(4):
        for g in (f.lhs, *(h for _, h in f.rhs)):
            assert parse_moy(render_moy(g)) == g


def test_components():
    theta = parse_moy(THETA)
    assert len(connected_components(theta)) == 1
    two = parse_moy("n 3\ncircle a 1\ncircle b 2\n")
    assert len(connected_components(two)) == 2
    both = disjoint_union(theta, parse_moy("n 4\ncircle c 1\n"))
    parts = connected_components(both)
    assert len(parts) == 2
    assert sum(len(p.edges) for p in parts) == 3 and sum(len(p.circles) for p in parts) == 1


def test_with_n():
    g = parse_moy(THETA)
    assert with_n(g, 2).n == 2
    with pytest.raises(ValidationError):
        with_n(g, 1)


def test_top_colour_pattern_digon():
    g = make_move_fixture(2, (3, 1), 4).lhs
    p = find_top_colour_pattern(g)
    assert p.m == 3
    assert {p.j, p.m - p.j} == {1, 2} and {p.l, p.m - p.l} == {1, 2}


def test_top_colour_pattern_absent_and_circle():
    assert find_top_colour_pattern(parse_moy(THETA)) is None
    with pytest.raises(ValueError):
        find_top_colour_pattern(parse_moy("n 4\ncircle c 3\n"))


def test_pattern_exists_whenever_top_colour_above_two(corpus):
    for _, g in corpus:
        if g.max_colour() > 2 and not any(c.colour == g.max_colour() for c in g.circles):
            pats = top_colour_patterns(g)
            assert len(pats) == g.count_colour(g.max_colour())


def test_merges_equal_splits():
    for f in all_fixtures(5):
        kinds = [v.kind for v in f.lhs.vertices]
        assert kinds.count("merge") == kinds.count("split")


def test_smoothing():
    g = MoyGraph(3, (Edge("a", 1), Edge("b", 1), Edge("z", 0)),
                 (), (Vertex("v", (("a", "h"), ("b", "t"), ("z", "t"))),
                      Vertex("w", (("b", "h"), ("a", "t"), ("z", "h")))))
    s = smooth_unit_and_zero(g)
    assert not s.edges and not s.vertices and [c.colour for c in s.circles] == [1]
    theta = parse_moy(THETA)
    assert smooth_unit_and_zero(theta) == theta


def test_fixture_genus_zero():
    for f in all_fixtures(4):
        assert genus(f.lhs) == 0, f.name
        assert all(genus(g) == 0 for _, g in f.rhs), f.name


def test_non_planar_rotation_has_genus():
    # swapping two slots at one vertex of a square fixture breaks planarity
    g = make_move_fixture(4, (1,), 3).lhs
    v = g.vertices[0]
    flipped = Vertex(v.id, (v.slots[0], v.slots[2], v.slots[1]))
    bad = MoyGraph(g.n, g.edges, g.circles, (flipped, *g.vertices[1:]))
    assert genus(bad) > 0


KINK = "n 2\narc a 1\narc b 1\nxing x + a b b a\n"
R2 = "n 3\narc a 1\narc b 1\narc c 1\narc d 1\nxing x1 + a b c d\nxing x2 - c d a b\n"


def test_link_parse_roundtrip():
    for text in (KINK, R2):
        d = parse_lnk(text)
        assert parse_lnk(render_lnk(d)) == d
        assert link_genus(d) == 0
    assert link_genus(parse_lnk(R2.replace("x2 - c d a b", "x2 - d c b a"))) > 0


@pytest.mark.parametrize("text, pattern", [
    ("n 2\narc a 1\nxing x + a a a a\n", "more than one"),
    ("n 2\narc a 1\narc b 2\nxing x + a b b a\n", "colour changes"),
    ("n 2\narc a 1\narc b 1\nxing x + a b z a\n", "unknown arc"),
    ("n 2\narc a 1\n", "not closed"),
])
def test_link_validation(text, pattern):
    with pytest.raises(ValidationError, match=pattern):
        parse_lnk(text)


def test_link_parse_error():
    with pytest.raises(ParseError):
        parse_lnk("n 2\nxing x * a b c d\n")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_random_webs_valid_and_planar(seed):
    import random

    from moyweb.moves import random_web

    g = random_web(random.Random(seed), 5, steps=6)
    validate(g)
    assert genus(g) == 0
    assert parse_moy(render_moy(g)) == g
