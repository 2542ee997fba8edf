"""
Graph transformations used in the extremal arguments, each returning the new
graph together with the change in the index (new minus old).
"""
from typing import List, Sequence, Tuple

from loguru import logger

from randic.errors import GraphError, ParameterError, SurgeryError
from randic.graph import Graph, add_edge, delete_edge, is_connected, iter_bits, popcount
from randic.invariants import check_gamma, degree_power, zeroth_order_general_randic
from randic.schemas import TransferSpec
from randic.settings import settings


def _negative_gamma(gamma: float) -> float:
    check_gamma(gamma)
    if gamma >= 0:
        raise ParameterError(f"needs gamma < 0, got {gamma}", code="gamma_range", gamma=gamma)
    return gamma


def _cap(n: int) -> int:
    return settings.chain_step_factor * n


# ==========================
# EDGE EDITS
# ==========================

def edge_delete_effect(G: Graph, u: int, v: int, gamma: float) -> Tuple[Graph, float]:
    _negative_gamma(gamma)
    if u == v or not G.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) absent", code="edge_absent", edge=[u, v])
    if G.degree(u) < 2 or G.degree(v) < 2:
        raise SurgeryError(
            f"edge ({u},{v}) has a pendant endpoint", code="pendant_endpoint", edge=[u, v]
        )
    H = delete_edge(G, u, v)
    return H, zeroth_order_general_randic(H, gamma) - zeroth_order_general_randic(G, gamma)


def edge_add_effect(G: Graph, u: int, v: int, gamma: float) -> Tuple[Graph, float]:
    _negative_gamma(gamma)
    if G.degree(u) == 0 or G.degree(v) == 0:
        raise GraphError(
            f"endpoint of ({u},{v}) is isolated", code="isolated_vertex", edge=[u, v]
        )
    H = add_edge(G, u, v)
    return H, zeroth_order_general_randic(H, gamma) - zeroth_order_general_randic(G, gamma)


# ==========================
# NEIGHBOUR TRANSFER
# ==========================

def transfer_spec_for(G: Graph, v: int, w: int) -> TransferSpec:
    """The full transfer from w to v: moved = N(w) minus N[v]."""
    G._check_vertex(v)
    G._check_vertex(w)
    moved = G.adj[w] & ~(G.adj[v] | (1 << v))
    return TransferSpec(v=v, w=w, moved=tuple(iter_bits(moved)))


def check_transfer(G: Graph, spec: TransferSpec) -> None:
    """Validate every condition up front; nothing is moved unless all hold."""
    v, w = spec.v, spec.w
    G._check_vertex(v)
    G._check_vertex(w)

    def fail(violation: str, message: str) -> SurgeryError:
        return SurgeryError(message, code="transfer_spec", violation=violation, v=v, w=w)

    if v == w:
        raise fail("distinct", "v and w must differ")
    if G.degree(v) < G.degree(w):
        raise fail("degree_order", f"d(v)={G.degree(v)} < d(w)={G.degree(w)}")
    moved = 0
    for x in spec.moved:
        G._check_vertex(x)
        moved |= 1 << x
    if len(spec.moved) != popcount(moved):
        raise fail("duplicates", "moved vertices repeat")
    expected = G.adj[w] & ~(G.adj[v] | (1 << v))
    if moved & ~G.adj[w]:
        raise fail("not_neighbour", "a moved vertex is not adjacent to w")
    if moved & (G.adj[v] | (1 << v)):
        raise fail("in_closed_neighbourhood", "a moved vertex already lies in N[v]")
    if moved != expected:
        raise fail("partial", "moved must be all of N(w) minus N[v]")
    if spec.t == 0:
        raise fail("empty", "nothing to move (t = 0)")
    if G.degree(w) <= spec.t:
        raise fail("degree_exhausted", f"d(w)={G.degree(w)} must exceed t={spec.t}")


def transfer_delta(dv: int, dw: int, t: int, gamma: float) -> float:
    return (
        degree_power(dv + t, gamma)
        - degree_power(dv, gamma)
        + degree_power(dw - t, gamma)
        - degree_power(dw, gamma)
    )


def transfer(G: Graph, spec: TransferSpec, gamma: float) -> Tuple[Graph, float]:
    _negative_gamma(gamma)
    check_transfer(G, spec)
    v, w = spec.v, spec.w
    rows = list(G.adj)
    for x in spec.moved:
        rows[w] &= ~(1 << x)
        rows[x] &= ~(1 << w)
        rows[v] |= 1 << x
        rows[x] |= 1 << v
    delta = transfer_delta(G.degree(v), G.degree(w), spec.t, gamma)
    return Graph(G.n, tuple(rows)), delta


def pendant_merge_chain(G: Graph, gamma: float) -> List[Tuple[Graph, float]]:
    """
    Move the pendants of every other hub onto the hub of largest degree, one
    hub at a time. Returns [(graph, index)] starting with G itself.
    """
    _negative_gamma(gamma)
    deg = G.degrees()
    pendant_hubs = {next(iter_bits(G.adj[x])) for x in range(G.n) if deg[x] == 1}
    # the two ends of K2 are not hubs
    hubs = sorted(h for h in pendant_hubs if deg[h] > 1)
    if not hubs:
        return [(G, zeroth_order_general_randic(G, gamma))]
    target = max(hubs, key=lambda h: (deg[h], -h))
    steps = [(G, zeroth_order_general_randic(G, gamma))]
    current = G
    for w in hubs:
        if w == target:
            continue
        if len(steps) > _cap(G.n):
            raise SurgeryError("pendant merge did not terminate", code="chain_cap")
        current, _ = transfer(current, transfer_spec_for(current, target, w), gamma)
        steps.append((current, zeroth_order_general_randic(current, gamma)))
        logger.debug(f"pendant merge: hub {w} -> {target}, index={steps[-1][1]:.12g}")
    return steps


# ==========================
# MAXIMUM-DEGREE REJOIN
# ==========================

def _rejoin_within(G: Graph, region: int) -> Tuple[Graph, int]:
    """
    One rejoin restricted to the vertex set `region`: pick u of maximum degree
    in G[region] (smallest label on ties), A = N(u) inside the region,
    B = region minus A. Keep G[A], join A completely to B, empty B.
    Returns the new graph and A.
    """
    inside = [x for x in iter_bits(region)]
    u = max(inside, key=lambda x: (popcount(G.adj[x] & region), -x))
    A = G.adj[u] & region
    B = region & ~A
    rows = list(G.adj)
    for x in iter_bits(region):
        outside = G.adj[x] & ~region
        if A >> x & 1:
            rows[x] = outside | (G.adj[x] & A) | B
        else:
            rows[x] = outside | A
    return Graph(G.n, tuple(rows)), A


def rejoin_max_degree(G: Graph, gamma: float) -> Tuple[Graph, float]:
    _negative_gamma(gamma)
    if not is_connected(G):
        raise GraphError("rejoin needs a connected graph", code="disconnected")
    H, _ = _rejoin_within(G, G.full_mask)
    return H, zeroth_order_general_randic(H, gamma) - zeroth_order_general_randic(G, gamma)


def is_complete_multipartite(G: Graph) -> bool:
    """Non-adjacency is an equivalence relation (closed non-neighbourhoods coincide)."""
    full = G.full_mask
    closed_non = [~row & full for row in G.adj]  # includes v itself
    for v in range(G.n):
        for u in iter_bits(closed_non[v]):
            if closed_non[u] != closed_non[v]:
                return False
    return True


def rejoin_chain(G: Graph, gamma: float) -> List[Tuple[Graph, float]]:
    """
    Repeat the rejoin on the neighbourhood side until a complete multipartite
    graph is reached. Returns [(graph, index)] starting with G.
    """
    _negative_gamma(gamma)
    if not is_connected(G):
        raise GraphError("rejoin needs a connected graph", code="disconnected")
    steps = [(G, zeroth_order_general_randic(G, gamma))]
    current, region = G, G.full_mask
    while region and not is_complete_multipartite(current):
        if len(steps) > _cap(G.n):
            raise SurgeryError("rejoin chain did not terminate", code="chain_cap")
        current, region = _rejoin_within(current, region)
        steps.append((current, zeroth_order_general_randic(current, gamma)))
    return steps


# ==========================
# PART BALANCING
# ==========================

def balance_step(parts: Sequence[int], i: int, j: int) -> Tuple[int, ...]:
    if parts[j] - parts[i] < 2:
        raise SurgeryError(
            f"parts[{j}] - parts[{i}] = {parts[j] - parts[i]} < 2",
            code="gap_too_small",
            i=i,
            j=j,
        )
    out = list(parts)
    out[i] += 1
    out[j] -= 1
    return tuple(out)


def balance_chain(parts: Sequence[int]) -> List[Tuple[int, ...]]:
    """Balance largest against smallest until sizes differ by at most 1."""
    chain = [tuple(parts)]
    current = tuple(parts)
    cap = _cap(sum(parts))
    while max(current) - min(current) >= 2:
        if len(chain) > cap:
            raise SurgeryError("balancing did not terminate", code="chain_cap")
        j = current.index(max(current))
        i = current.index(min(current))
        current = balance_step(current, i, j)
        chain.append(current)
    return chain
