"""
Exact graph parameters: the zeroth-order general Randic index, inverse degree,
chromatic and clique numbers, vertex/edge connectivity and cut edges.
"""
import math
from collections import Counter
from typing import Dict, List, Tuple

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from randic.errors import GraphError, ParameterError
from randic.graph import Graph, iter_bits, is_connected, popcount
from randic.schemas import InvariantProfile


# ==========================
# INDEX
# ==========================

def check_gamma(gamma: float) -> float:
    if gamma == 0:
        raise ParameterError(
            "gamma must be non-zero (the index is defined for non-zero real exponents)",
            code="gamma_zero",
        )
    return float(gamma)


def degree_power(d: float, gamma: float) -> float:
    # d == 1 is exact; exp/log keeps pendant vertices free of pow() quirks
    if d == 1:
        return 1.0
    if gamma == -1:
        return 1.0 / d
    return math.exp(gamma * math.log(d))


def index_from_degrees(degrees: Dict[int, int], gamma: float) -> float:
    """Sum count * d^gamma over a degree multiset given as {degree: count}."""
    check_gamma(gamma)
    return math.fsum(
        count / d if gamma == -1 else count * degree_power(d, gamma)
        for d, count in sorted(degrees.items())
    )


def zeroth_order_general_randic(G: Graph, gamma: float) -> float:
    check_gamma(gamma)
    isolated = G.isolated_vertices()
    if isolated:
        raise GraphError(
            f"index undefined: isolated vertices {isolated}",
            code="isolated_vertex",
            vertices=isolated,
        )
    return index_from_degrees(Counter(G.degrees()), gamma)


def inverse_degree(G: Graph) -> float:
    return zeroth_order_general_randic(G, -1.0)


# ==========================
# DEGREES
# ==========================

def degree_sequence(G: Graph) -> List[int]:
    return sorted(G.degrees(), reverse=True)


def min_degree(G: Graph) -> int:
    return min(G.degrees())


def max_degree(G: Graph) -> int:
    return max(G.degrees())


def neighbourhood(G: Graph, v: int, closed: bool = False) -> int:
    """N_G(v) as a bitset, or N_G[v] when closed."""
    row = G.adj[v]
    return row | (1 << v) if closed else row


# ==========================
# CLIQUE NUMBER
# ==========================

def maximum_clique(G: Graph) -> int:
    """Bitset of one maximum clique (branch and bound on candidate sets)."""
    adj = G.adj
    best_size = 0
    best_set = 0

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best_size, best_set
        if not cand:
            if size > best_size:
                best_size, best_set = size, current
            return
        while cand:
            if size + popcount(cand) <= best_size:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(current | low, size + 1, cand & adj[v])
            cand ^= low

    expand(0, 0, G.full_mask)
    return best_set


def clique_number(G: Graph) -> int:
    return popcount(maximum_clique(G))


# ==========================
# CHROMATIC NUMBER
# ==========================

def greedy_coloring(G: Graph) -> List[int]:
    """DSATUR greedy colouring; its colour count is an upper bound."""
    n = G.n
    colors = [-1] * n
    seen: List[set] = [set() for _ in range(n)]
    deg = G.degrees()
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (len(seen[u]), deg[u], -u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for u in iter_bits(G.adj[v]):
            seen[u].add(c)
    return colors


def is_colorable(G: Graph, k: int) -> bool:
    """Backtracking k-colouring over colour classes kept as bitsets."""
    if k <= 0:
        return G.n == 0
    adj = G.adj
    deg = G.degrees()
    order = sorted(range(G.n), key=lambda v: (-deg[v], v))
    classes = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # a fresh colour is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if not classes[c] & adj[v]:
                classes[c] |= 1 << v
                if place(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(G: Graph) -> int:
    lower = clique_number(G)
    upper = max(greedy_coloring(G)) + 1
    for k in range(lower, upper):
        if is_colorable(G, k):
            return k
    return upper


# ==========================
# CONNECTIVITY
# ==========================

def _require_connected(G: Graph, what: str) -> None:
    if G.n < 2:
        raise GraphError(f"{what} needs at least 2 vertices", code="order_out_of_range", n=G.n)
    if not is_connected(G):
        raise GraphError(f"{what} needs a connected graph", code="disconnected")


def _split_network(G: Graph) -> nx.DiGraph:
    """Each vertex v becomes v_in -> v_out with capacity 1; edges are uncapacitated arcs."""
    H = nx.DiGraph()
    big = G.n
    for v in range(G.n):
        H.add_edge((v, "in"), (v, "out"), capacity=1)
    for u, v in G.edges():
        H.add_edge((u, "out"), (v, "in"), capacity=big)
        H.add_edge((v, "out"), (u, "in"), capacity=big)
    return H


def local_vertex_connectivity(G: Graph, s: int, t: int, network: nx.DiGraph = None) -> int:
    """Fewest vertices separating nonadjacent s and t (Menger, via max-flow)."""
    if G.has_edge(s, t) or s == t:
        raise GraphError(f"({s},{t}) must be distinct and nonadjacent", code="edge_present")
    H = network if network is not None else _split_network(G)
    return int(nx.maximum_flow_value(H, (s, "out"), (t, "in"), flow_func=edmonds_karp))


def vertex_connectivity(G: Graph) -> int:
    _require_connected(G, "vertex connectivity")
    if G.is_complete():
        return G.n - 1
    H = _split_network(G)
    best = min_degree(G)
    # Even's scheme: some vertex among the first best+1 lies outside a minimum cut
    i = 0
    while i <= best and i < G.n:
        for j in range(i + 1, G.n):
            if not G.adj[i] >> j & 1:
                best = min(best, local_vertex_connectivity(G, i, j, H))
        i += 1
    return best


def edge_connectivity(G: Graph) -> int:
    _require_connected(G, "edge connectivity")
    H = nx.DiGraph()
    for u, v in G.edges():
        H.add_edge(u, v, capacity=1)
        H.add_edge(v, u, capacity=1)
    return min(
        int(nx.maximum_flow_value(H, 0, t, flow_func=edmonds_karp))
        for t in range(1, G.n)
    )


# ==========================
# CUT EDGES
# ==========================

def cut_edges(G: Graph) -> List[Tuple[int, int]]:
    """Bridges from one depth-first traversal with low-link values."""
    if not is_connected(G):
        raise GraphError("cut edges need a connected graph", code="disconnected")
    disc = [-1] * G.n
    low = [0] * G.n
    bridges: List[Tuple[int, int]] = []
    timer = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        for u in iter_bits(G.adj[v]):
            if u == parent:
                continue
            if disc[u] == -1:
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] > disc[v]:
                    bridges.append((min(u, v), max(u, v)))
            else:
                low[v] = min(low[v], disc[u])

    dfs(0, -1)
    return sorted(bridges)


# ==========================
# PROFILE
# ==========================

def invariant_profile(G: Graph) -> InvariantProfile:
    degrees = G.degrees()
    return InvariantProfile(
        n=G.n,
        chromatic=chromatic_number(G),
        clique=clique_number(G),
        vertex_connectivity=vertex_connectivity(G),
        edge_connectivity=edge_connectivity(G),
        cut_edge_count=len(cut_edges(G)),
        min_degree=min(degrees),
        max_degree=max(degrees),
        degrees=tuple(sorted(degrees, reverse=True)),
    )


def lemma_degree_count_holds(G: Graph, chi: int = None) -> bool:
    """A graph with chromatic number c has at least c vertices of degree >= c-1."""
    chi = chromatic_number(G) if chi is None else chi
    return sum(1 for d in G.degrees() if d >= chi - 1) >= chi


def index_of_profile(profile: InvariantProfile, gamma: float) -> float:
    return index_from_degrees(Counter(profile.degrees), gamma)
