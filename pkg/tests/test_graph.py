import pytest

from randic.errors import GraphError
from randic.graph import (
    add_edge,
    build,
    complement,
    delete_edge,
    delete_vertices,
    from_rows,
    from_upper_mask,
    is_connected,
    join,
    relabel,
    union,
    upper_mask,
)

K1 = build(1)
K2 = build(2, [(0, 1)])
C4 = build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_build_complete_graph():
    """Test building K3 from its edge list"""
    G = build(3, [(0, 1), (1, 2), (0, 2)])
    assert G.degrees() == [2, 2, 2]
    assert G.is_complete()
    assert G.size == 3


def test_build_empty_and_duplicate_edges():
    """Test edgeless graphs and duplicate edge collapse"""
    assert build(4).degrees() == [0, 0, 0, 0]
    G = build(2, [(0, 1), (1, 0)])
    assert G.degrees() == [1, 1]
    assert G.edges() == [(0, 1)]


@pytest.mark.parametrize(
    "n, edges, code",
    [
        (3, [(1, 1)], "self_loop"),
        (3, [(0, 3)], "vertex_out_of_range"),
        (0, [], "order_out_of_range"),
        (65, [], "order_out_of_range"),
    ],
)
def test_build_rejects_bad_input(n, edges, code):
    """Test build precondition errors"""
    with pytest.raises(GraphError) as exc:
        build(n, edges)
    assert exc.value.code == code


def test_from_rows_checks_symmetry():
    """Test raw rows must describe a simple undirected graph"""
    assert from_rows(2, [0b10, 0b01]) == K2
    with pytest.raises(GraphError):
        from_rows(2, [0b10, 0b00])


def test_join_union_degrees():
    """Test join(K2, K1 u K2) degree multiset"""
    G = join(K2, union(K1, K2))
    assert sorted(G.degrees(), reverse=True) == [4, 4, 3, 3, 2]


def test_delete_edge_of_cycle_gives_path():
    """Test deleting one edge of C4 leaves P4"""
    P = delete_edge(C4, 0, 3)
    assert sorted(P.degrees()) == [1, 1, 2, 2]
    assert is_connected(P)


def test_edge_edit_errors():
    """Test add/delete edge preconditions"""
    with pytest.raises(GraphError) as exc:
        add_edge(C4, 0, 1)
    assert exc.value.code == "edge_present"
    with pytest.raises(GraphError) as exc:
        delete_edge(C4, 0, 2)
    assert exc.value.code == "edge_absent"
    with pytest.raises(GraphError) as exc:
        C4.degree(7)
    assert exc.value.code == "vertex_out_of_range"


def test_complement_of_complete_graph_is_empty():
    """Test complement(K4) has no edges"""
    K4 = build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert complement(K4).size == 0
    assert complement(C4).edges() == [(0, 2), (1, 3)]


def test_delete_vertices_renumbers_survivors():
    """Test survivors keep their order and are renumbered"""
    P4 = build(4, [(0, 1), (1, 2), (2, 3)])
    H = delete_vertices(P4, [1])
    assert H.n == 3
    assert H.edges() == [(1, 2)]
    with pytest.raises(GraphError) as exc:
        delete_vertices(P4, range(4))
    assert exc.value.code == "delete_all_vertices"


def test_relabel_moves_vertices():
    """Test vertex v becomes perm[v]"""
    P3 = build(3, [(0, 1), (1, 2)])
    H = relabel(P3, [1, 0, 2])
    assert H.degree(0) == 2
    assert H.edges() == [(0, 1), (0, 2)]
    with pytest.raises(GraphError):
        relabel(P3, [0, 0, 1])


def test_is_connected():
    """Test connectivity on small graphs"""
    assert is_connected(build(4, [(0, 1), (1, 2), (2, 3)]))
    assert not is_connected(union(K1, K2))
    assert is_connected(K1)


def test_upper_mask_column_order():
    """Test upper-triangle bits follow (0,1),(0,2),(1,2),... most significant first"""
    P3 = build(3, [(0, 1), (1, 2)])
    assert upper_mask(P3) == 0b101
    assert from_upper_mask(3, 0b011).edges() == [(0, 2), (1, 2)]
    G = build(6, [(0, 5), (2, 4)])
    assert from_upper_mask(6, upper_mask(G)) == G
