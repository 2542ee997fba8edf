"""
Canonical forms for small graphs.

The canonical form is the lexicographically smallest upper-triangle bit string
(graph6 column order) over all relabelings that keep vertices inside their
invariant cell. Cells are keyed by (degree, sorted neighbour degrees) and the
cells are laid out in a fixed order, so only permutations inside a cell are
searched. A branch is abandoned as soon as its column prefix exceeds the best
prefix found so far.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from randic.codec import mask_to_graph6
from randic.errors import GraphError
from randic.graph import Graph, from_upper_mask, iter_bits, relabel
from randic.settings import settings


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    @property
    def graph6(self) -> str:
        return mask_to_graph6(self.n, self.bits)

    def graph(self) -> Graph:
        return from_upper_mask(self.n, self.bits)


def _cells(G: Graph) -> List[List[int]]:
    deg = G.degrees()
    keys: Dict[Tuple, List[int]] = {}
    for v in range(G.n):
        key = (deg[v], tuple(sorted(deg[u] for u in iter_bits(G.adj[v]))))
        keys.setdefault(key, []).append(v)
    return [keys[k] for k in sorted(keys)]


def canonical_labeling(G: Graph) -> Tuple[CanonicalForm, List[int]]:
    """Return the canonical form and a permutation mapping G onto it."""
    if G.n > settings.canon_max_n:
        raise GraphError(
            f"canonical form capped at n={settings.canon_max_n}, got {G.n}",
            code="order_out_of_range",
            n=G.n,
        )

    n = G.n
    adj = G.adj
    slots: List[List[int]] = []
    for cell in _cells(G):
        slots.extend([cell] * len(cell))

    order: List[int] = []
    cols: List[int] = []
    best: Optional[List[int]] = None
    best_order: List[int] = []

    def column(v: int) -> int:
        row = adj[v]
        value = 0
        for u in order:
            value = (value << 1) | (row >> u & 1)
        return value

    def search(j: int, used: int) -> None:
        nonlocal best, best_order
        if j == n:
            if best is None or cols < best:
                best = cols[:]
                best_order = order[:]
            return
        choices = sorted(
            (column(v), v) for v in slots[j] if not used >> v & 1
        )
        for col, v in choices:
            cols.append(col)
            if best is None or cols <= best[: j + 1]:
                order.append(v)
                search(j + 1, used | (1 << v))
                order.pop()
            cols.pop()

    search(0, 0)

    bits = 0
    for j, col in enumerate(best):
        bits = (bits << j) | col
    perm = [0] * n
    for position, v in enumerate(best_order):
        perm[v] = position
    return CanonicalForm(n, bits), perm


def canonical_form(G: Graph) -> CanonicalForm:
    return canonical_labeling(G)[0]


def canonical_graph(G: Graph) -> Graph:
    form, perm = canonical_labeling(G)
    return relabel(G, perm)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)
