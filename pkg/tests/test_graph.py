import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rescurv.errors import Disconnected, DuplicateEdge, EmptyInput, MalformedLine, SelfLoop
from rescurv.families import FamilySpec, generate
from rescurv.graph import (
    Graph,
    bfs_distances,
    dumps_json,
    is_bipartite,
    laplacian,
    parse_edge_list,
    render_edge_list,
)


def test_parse_path():
    g = parse_edge_list("a b\nb c")
    assert g.n == 3
    assert g.labels == ("a", "b", "c")
    assert g.degree == (1, 2, 1)


def test_parse_triangle():
    g = parse_edge_list("0 1\n1 2\n2 0")
    assert g.n == 3 and g.m == 3
    assert g.degree == (2, 2, 2)


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# header\n\nx y  # trailing\n   \ny z\n")
    assert g.labels == ("x", "y", "z")


def test_parse_accepts_stream():
    assert parse_edge_list(io.StringIO("p q\n")).m == 1


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("0 1\n2 3", Disconnected, None),
        ("a a", SelfLoop, 1),
        ("a b\nb c\nb a", DuplicateEdge, 3),
        ("a b\nc", MalformedLine, 2),
        ("a b c", MalformedLine, 1),
        ("# nothing\n", EmptyInput, None),
        ("", EmptyInput, None),
    ],
)
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    assert info.value.line == line
    if line is not None:
        assert f"line {line}" in str(info.value)


def test_invariants_degree_sum():
    g = generate(FamilySpec("petersen"))
    assert sum(g.degree) == 2 * g.m
    assert all(0 <= i < j < g.n for i, j in g.edges)


def test_laplacian_small():
    k2 = parse_edge_list("0 1")
    np.testing.assert_array_equal(laplacian(k2), [[1, -1], [-1, 1]])
    p3 = parse_edge_list("0 1\n1 2")
    np.testing.assert_array_equal(laplacian(p3), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])


def test_laplacian_c4_is_circulant():
    lap = laplacian(generate(FamilySpec("cycle", (4,))))
    expected = np.array([[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]])
    np.testing.assert_array_equal(lap, expected)
    np.testing.assert_array_equal(lap.sum(axis=1), 0)


@pytest.mark.parametrize(
    "spec, diameter",
    [
        (FamilySpec("cycle", (8,)), 4),
        (FamilySpec("hypercube", (3,)), 3),
        (FamilySpec("complete", (5,)), 1),
    ],
)
def test_diameter_examples(spec, diameter):
    assert bfs_distances(generate(spec)).diameter == diameter


def test_distance_table_is_metric():
    dt = bfs_distances(generate(FamilySpec("antiprism", (5,))))
    d = dt.dist
    assert (d == d.T).all() and (np.diag(d) == 0).all()
    assert (d[:, :, None] <= d[:, None, :] + d.T[None, :, :]).all()


def test_hypercube_distance_is_hamming():
    g = generate(FamilySpec("hypercube", (4,)))
    d = bfs_distances(g).dist
    for i, a in enumerate(g.labels):
        for j, b in enumerate(g.labels):
            assert d[i, j] == sum(x != y for x, y in zip(a, b))


@pytest.mark.parametrize("n", range(2, 12))
def test_closed_form_diameters(n):
    assert bfs_distances(generate(FamilySpec("complete", (n,)))).diameter == 1
    if n >= 3:
        assert bfs_distances(generate(FamilySpec("cycle", (n,)))).diameter == n // 2
    if n <= 8:
        assert bfs_distances(generate(FamilySpec("hypercube", (n,)))).diameter == n


def test_bipartite():
    assert is_bipartite(generate(FamilySpec("cycle", (4,))))[0]
    assert not is_bipartite(generate(FamilySpec("cycle", (5,))))[0]
    ok, colour = is_bipartite(generate(FamilySpec("hypercube", (3,))))
    assert ok
    g = generate(FamilySpec("hypercube", (3,)))
    assert all(colour[i] != colour[j] for i, j in g.edges)


def test_json_export_sorted():
    g = parse_edge_list("c b\na b\na c")
    data = g.to_json()
    assert data == {"n": 3, "labels": ["c", "b", "a"], "edges": [[0, 1], [0, 2], [1, 2]]}
    assert Graph.from_json(data) == g
    assert dumps_json(g).startswith('{"n": 3')


def test_json_rejects_bad_edges():
    with pytest.raises(SelfLoop):
        Graph.from_json({"n": 2, "edges": [[0, 0]]})
    with pytest.raises(Disconnected):
        Graph.from_json({"n": 3, "edges": [[0, 1]]})


def test_single_vertex_rejected():
    with pytest.raises(Disconnected):
        Graph.from_edges([], labels=["x"])


def test_with_edge():
    g = parse_edge_list("0 1\n1 2")
    h = g.with_edge(0, 2)
    assert h.m == 3 and g.m == 2
    with pytest.raises(DuplicateEdge):
        h.with_edge(2, 0)


@st.composite
def connected_graphs(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    parents = [draw(st.integers(0, k - 1)) for k in range(1, n)]
    edges = {(p, k) for k, p in zip(range(1, n), parents)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges([(f"v{perm[a]}", f"v{perm[b]}") for a, b in sorted(edges)])


@settings(max_examples=100, deadline=None)
@given(connected_graphs())
def test_render_parse_round_trip(g):
    h = parse_edge_list(render_edge_list(g))
    named = lambda x: {frozenset((x.labels[i], x.labels[j])) for i, j in x.edges}
    assert named(h) == named(g)
    assert sorted(h.labels) == sorted(g.labels)


@pytest.mark.parametrize("spec", [
    FamilySpec("cycle", (9,)), FamilySpec("hypercube", (4,)), FamilySpec("torus", (2, 4)),
    FamilySpec("petersen"), FamilySpec("antiprism", (4,)), FamilySpec("complete", (6,)),
])
def test_family_render_keeps_label_order(spec):
    g = generate(spec)
    assert parse_edge_list(render_edge_list(g)) == g
