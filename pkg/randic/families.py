"""
Generators for the named extremal families.

Labeling convention: clique (or centre/cycle) vertices first, then the
remaining vertices in attachment order, so a spec always produces the same
graph6 string.
"""
from collections import Counter
from typing import List, Optional, Tuple

from randic.errors import GraphError, ParameterError
from randic.graph import Edge, Graph, build
from randic.invariants import index_from_degrees
from randic.schemas import Family, FamilySpec


def _bad(spec: FamilySpec, message: str) -> ParameterError:
    return ParameterError(
        f"{spec.family.value}: {message}", code="family_spec", spec=spec.label()
    )


# ==========================
# SPEC BUILDERS
# ==========================

def complete_spec(n: int) -> FamilySpec:
    return FamilySpec(family=Family.COMPLETE, n=n)


def cycle_spec(n: int) -> FamilySpec:
    return FamilySpec(family=Family.CYCLE, n=n)


def path_spec(n: int) -> FamilySpec:
    return FamilySpec(family=Family.PATH, n=n)


def star_spec(n: int) -> FamilySpec:
    return FamilySpec(family=Family.STAR, n=n)


def multipartite_spec(parts: List[int]) -> FamilySpec:
    ordered = tuple(sorted(parts, reverse=True))
    return FamilySpec(
        family=Family.MULTIPARTITE, n=sum(ordered), c=len(ordered), parts=ordered
    )


def turan_spec(n: int, c: int) -> FamilySpec:
    return FamilySpec(family=Family.TURAN, n=n, c=c)


def pineapple_spec(n: int, c: int) -> FamilySpec:
    return FamilySpec(family=Family.PINEAPPLE, n=n, c=c)


def star_clique_spec(pendants: List[int]) -> FamilySpec:
    c = len(pendants)
    return FamilySpec(
        family=Family.STAR_CLIQUE, n=c + sum(pendants), c=c, pendants=tuple(pendants)
    )


def pendant_cycle_spec(n: int, c: int) -> FamilySpec:
    return FamilySpec(family=Family.PENDANT_CYCLE, n=n, c=c)


def kite_spec(n: int, c: int) -> FamilySpec:
    return FamilySpec(family=Family.KITE, n=n, c=c)


def connectivity_split_spec(n: int, c: int, n1: int) -> FamilySpec:
    return FamilySpec(
        family=Family.CONNECTIVITY_SPLIT, n=n, c=c, split=(n1, n - c - n1)
    )


def turan_parts(n: int, c: int) -> Tuple[int, ...]:
    """Part sizes of T_n(c), largest first: r parts of q+1 and c-r parts of q."""
    q, r = divmod(n, c)
    return tuple([q + 1] * r + [q] * (c - r))


def parts_of(spec: FamilySpec) -> Tuple[int, ...]:
    if spec.family is Family.TURAN:
        return turan_parts(spec.n, spec.c)
    if spec.family is Family.MULTIPARTITE:
        return spec.parts
    raise _bad(spec, "only multipartite families have parts")


# ==========================
# VALIDATION
# ==========================

def check_spec(spec: FamilySpec) -> FamilySpec:
    f, n, c = spec.family, spec.n, spec.c

    if f in (Family.COMPLETE, Family.PATH):
        return spec
    if f is Family.CYCLE:
        if n < 3:
            raise _bad(spec, "a cycle needs n >= 3")
        return spec
    if f is Family.STAR:
        if n < 2:
            raise _bad(spec, "a star needs n >= 2")
        return spec

    if c is None:
        raise _bad(spec, "parameter c is required")

    if f is Family.MULTIPARTITE:
        parts = spec.parts
        if not parts or len(parts) != c:
            raise _bad(spec, "needs c part sizes")
        if any(p < 1 for p in parts) or sum(parts) != n:
            raise _bad(spec, "part sizes must be positive and sum to n")
        if list(parts) != sorted(parts, reverse=True):
            raise _bad(spec, "part sizes must be non-increasing")
    elif f is Family.TURAN:
        if not 1 <= c <= n:
            raise _bad(spec, "needs 1 <= c <= n")
    elif f is Family.PINEAPPLE:
        if not 2 <= c <= n:
            raise _bad(spec, "needs 2 <= c <= n")
    elif f is Family.STAR_CLIQUE:
        pendants = spec.pendants
        if not pendants or len(pendants) != c or c < 1:
            raise _bad(spec, "needs c pendant counts")
        if any(m < 0 for m in pendants) or sum(pendants) != n - c:
            raise _bad(spec, "pendant counts must be non-negative and sum to n - c")
    elif f is Family.PENDANT_CYCLE:
        if c < 0 or n - c < 3:
            raise _bad(spec, "needs c >= 0 and n - c >= 3")
    elif f is Family.KITE:
        if not 1 <= c <= n:
            raise _bad(spec, "needs 1 <= c <= n")
    elif f is Family.CONNECTIVITY_SPLIT:
        split = spec.split
        if c < 1:
            raise _bad(spec, "needs c >= 1")
        if split is None or split[0] < 1 or split[1] < 1 or sum(split) != n - c:
            raise _bad(spec, "needs n1, n2 >= 1 with n1 + n2 = n - c")
    return spec


# ==========================
# GENERATION
# ==========================

def _clique_edges(vertices: List[int]) -> List[Edge]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


def _multipartite_edges(parts: Tuple[int, ...]) -> List[Edge]:
    blocks = []
    start = 0
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    return [
        (u, v)
        for i, a in enumerate(blocks)
        for b in blocks[i + 1:]
        for u in a
        for v in b
    ]


def _pendants_at(clique: int, pendants: Tuple[int, ...]) -> List[Edge]:
    edges = []
    nxt = clique
    for i, m in enumerate(pendants):
        for _ in range(m):
            edges.append((i, nxt))
            nxt += 1
    return edges


def generate(spec: FamilySpec) -> Graph:
    check_spec(spec)
    f, n, c = spec.family, spec.n, spec.c

    if f is Family.COMPLETE:
        edges = _clique_edges(list(range(n)))
    elif f is Family.CYCLE:
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif f is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif f is Family.STAR:
        edges = [(0, i) for i in range(1, n)]
    elif f in (Family.MULTIPARTITE, Family.TURAN):
        edges = _multipartite_edges(parts_of(spec))
    elif f is Family.PINEAPPLE:
        edges = _clique_edges(list(range(c))) + _pendants_at(c, (n - c,))
    elif f is Family.STAR_CLIQUE:
        edges = _clique_edges(list(range(c))) + _pendants_at(c, spec.pendants)
    elif f is Family.PENDANT_CYCLE:
        k = n - c
        edges = [(i, (i + 1) % k) for i in range(k)] + [(0, k + i) for i in range(c)]
    elif f is Family.KITE:
        tail = [0] + list(range(c, n))
        edges = _clique_edges(list(range(c))) + list(zip(tail, tail[1:]))
    else:
        n1, n2 = spec.split
        hub = list(range(c))
        left = list(range(c, c + n1))
        right = list(range(c + n1, n))
        edges = (
            _clique_edges(hub)
            + _clique_edges(left)
            + _clique_edges(right)
            + [(h, v) for h in hub for v in left + right]
        )
    return build(n, edges)


# ==========================
# CLOSED FORMS
# ==========================

def predicted_degrees(spec: FamilySpec) -> Counter:
    """Degree multiset {degree: count} read off the family's definition."""
    check_spec(spec)
    f, n, c = spec.family, spec.n, spec.c
    deg: Counter = Counter()

    if f is Family.COMPLETE:
        deg[n - 1] += n
    elif f is Family.CYCLE:
        deg[2] += n
    elif f is Family.PATH:
        if n <= 2:
            deg[n - 1] += n
        else:
            deg[1] += 2
            deg[2] += n - 2
    elif f is Family.STAR:
        deg[n - 1] += 1
        deg[1] += n - 1
    elif f in (Family.MULTIPARTITE, Family.TURAN):
        for p in parts_of(spec):
            deg[n - p] += p
    elif f is Family.PINEAPPLE:
        deg[n - 1] += 1
        deg[c - 1] += c - 1
        deg[1] += n - c
    elif f is Family.STAR_CLIQUE:
        for m in spec.pendants:
            deg[c - 1 + m] += 1
        deg[1] += n - c
    elif f is Family.PENDANT_CYCLE:
        deg[2 + c] += 1
        deg[2] += n - c - 1
        deg[1] += c
    elif f is Family.KITE:
        if n == c:
            deg[c - 1] += c
        else:
            deg[c] += 1
            deg[c - 1] += c - 1
            deg[2] += n - c - 1
            deg[1] += 1
    else:
        n1, n2 = spec.split
        deg[n - 1] += c
        deg[n1 + c - 1] += n1
        deg[n2 + c - 1] += n2
    return +deg


def predicted_index(spec: FamilySpec, gamma: float) -> float:
    degrees = predicted_degrees(spec)
    if degrees.get(0):
        raise GraphError(
            f"{spec.label()} has isolated vertices; the index is undefined",
            code="isolated_vertex",
        )
    return index_from_degrees(degrees, gamma)


def is_connected_family(spec: FamilySpec) -> bool:
    """Every family is connected except multipartite/turan with one part and n > 1."""
    if spec.family in (Family.MULTIPARTITE, Family.TURAN):
        return spec.c != 1 or spec.n == 1
    return True


def family_of(name: str, n: int, c: Optional[int] = None, **extra) -> FamilySpec:
    """Build a spec from loose arguments, e.g. CLI flags."""
    family = Family(name)
    if family is Family.MULTIPARTITE:
        return multipartite_spec(list(extra["parts"]))
    if family is Family.STAR_CLIQUE:
        return star_clique_spec(list(extra["pendants"]))
    if family is Family.CONNECTIVITY_SPLIT:
        return connectivity_split_spec(n, c, extra.get("n1") or 1)
    return FamilySpec(family=family, n=n, c=c)
