"""
Immutable simple undirected graphs on vertices 0..n-1.

Each adjacency row is an int used as a bitset: bit u of adj[v] is set iff
uv is an edge. Edits never mutate, they return a new Graph.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from randic.errors import GraphError

MAX_ORDER = 64

Edge = Tuple[int, int]


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[int, ...]

    # ------------------------------------------------------------------
    # reads
    # ------------------------------------------------------------------
    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def neighbours(self, v: int) -> List[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Edge]:
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def isolated_vertices(self) -> List[int]:
        return [v for v, row in enumerate(self.adj) if row == 0]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(
                f"vertex {v} out of range 0..{self.n - 1}",
                code="vertex_out_of_range",
                vertex=v,
                n=self.n,
            )

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.size}>"


# ==========================
# CONSTRUCTION
# ==========================

def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(
            f"order {n} outside 1..{MAX_ORDER}", code="order_out_of_range", n=n
        )


def build(n: int, edges: Iterable[Edge] = ()) -> Graph:
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphError(
                    f"endpoint {x} out of range 0..{n - 1}",
                    code="vertex_out_of_range",
                    vertex=x,
                    n=n,
                )
        if u == v:
            raise GraphError(f"self-loop at {u}", code="self_loop", vertex=u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(n: int, rows: Sequence[int]) -> Graph:
    """Wrap raw bitset rows after checking symmetry and irreflexivity."""
    _check_order(n)
    if len(rows) != n:
        raise GraphError(f"expected {n} rows, got {len(rows)}", code="order_out_of_range")
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row & ~full:
            raise GraphError(f"row {v} has bits beyond n", code="vertex_out_of_range")
        if row >> v & 1:
            raise GraphError(f"self-loop at {v}", code="self_loop", vertex=v)
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric pair ({v},{u})", code="asymmetric")
    return Graph(n, tuple(rows))


def from_upper_mask(n: int, mask: int) -> Graph:
    """Decode upper-triangle bits in graph6 column order, most significant first."""
    _check_order(n)
    rows = [0] * n
    total = n * (n - 1) // 2
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def upper_mask(G: Graph) -> int:
    """Inverse of from_upper_mask."""
    mask = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            mask = (mask << 1) | (row >> i & 1)
    return mask


# ==========================
# EDITS
# ==========================

def add_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"self-loop at {u}", code="self_loop", vertex=u)
    if G.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) already present", code="edge_present", edge=[u, v])
    rows = list(G.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(G.n, tuple(rows))


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v or not G.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) absent", code="edge_absent", edge=[u, v])
    rows = list(G.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.n, tuple(rows))


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    """Remove S; survivors keep their relative order and are renumbered 0..k-1."""
    drop = set()
    for v in S:
        G._check_vertex(v)
        drop.add(v)
    if len(drop) >= G.n:
        raise GraphError("cannot delete every vertex", code="delete_all_vertices")
    keep = [v for v in range(G.n) if v not in drop]
    return induced_subgraph(G, keep)


def induced_subgraph(G: Graph, keep: Sequence[int]) -> Graph:
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(G.adj[v]):
            if u in position:
                row |= 1 << position[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def union(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union; G2's vertices follow G1's."""
    _check_order(G1.n + G2.n)
    shift = G1.n
    rows = list(G1.adj) + [row << shift for row in G2.adj]
    return Graph(G1.n + G2.n, tuple(rows))


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    base = union(G1, G2)
    first = G1.full_mask
    second = G2.full_mask << G1.n
    rows = [
        row | (second if v < G1.n else first)
        for v, row in enumerate(base.adj)
    ]
    return Graph(base.n, tuple(rows))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(~row & full & ~(1 << v) for v, row in enumerate(G.adj)))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Vertex v of G becomes perm[v]."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabeling is not a permutation", code="bad_permutation")
    rows = [0] * G.n
    for v, row in enumerate(G.adj):
        image = 0
        for u in iter_bits(row):
            image |= 1 << perm[u]
        rows[perm[v]] = image
    return Graph(G.n, tuple(rows))


# ==========================
# TRAVERSAL
# ==========================

def component_mask(G: Graph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= G.adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen


def is_connected(G: Graph) -> bool:
    return component_mask(G, 0) == G.full_mask
