"""
Graph universes for the verifier: a builtin generator of all isomorphism
classes for n <= 7 and streaming ingestion of graph6 corpora for larger n.
"""
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, Iterator, Optional, Tuple

from loguru import logger

from randic.canon import CanonicalForm, canonical_form
from randic.codec import graph6_decode, graph6_encode
from randic.errors import CorpusError, Graph6Error, GraphError
from randic.graph import Graph, from_upper_mask, is_connected, popcount

BUILTIN_MAX_N = 7

# connected isomorphism classes; file corpora are checked against these when verified
EXPECTED_CONNECTED_COUNTS: Dict[int, int] = {
    1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080,
}
EXPECTED_ALL_COUNTS: Dict[int, int] = {
    1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044,
}


def _check_builtin_order(n: int) -> None:
    if not 1 <= n <= BUILTIN_MAX_N:
        raise GraphError(
            f"builtin enumeration covers 1 <= n <= {BUILTIN_MAX_N}, got n={n}",
            code="order_out_of_range",
            n=n,
        )


def _extend(G: Graph, neighbours: int) -> Graph:
    """Append vertex G.n adjacent to the vertex set `neighbours`."""
    n = G.n
    rows = [row | ((neighbours >> v & 1) << n) for v, row in enumerate(G.adj)]
    rows.append(neighbours)
    return Graph(n + 1, tuple(rows))


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[CanonicalForm, ...]:
    """
    Every graph on n vertices is a graph on n-1 vertices plus one vertex of
    minimum degree, so extending each class on n-1 vertices by every
    neighbour set no larger than the new minimum degree reaches all classes.
    """
    if n == 1:
        return (CanonicalForm(1, 0),)
    seen = set()
    for form in _classes(n - 1):
        base = form.graph()
        for neighbours in range(1 << (n - 1)):
            H = _extend(base, neighbours)
            if popcount(neighbours) > min(H.degrees()):
                continue
            seen.add(canonical_form(H))
    logger.debug(f"enumerated {len(seen)} classes on {n} vertices")
    return tuple(sorted(seen))


def enumerate_all(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, connected or not."""
    _check_builtin_order(n)
    for form in _classes(n):
        yield form.graph()


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Connected classes on n vertices, ordered by canonical form."""
    _check_builtin_order(n)
    for form in _classes(n):
        G = form.graph()
        if is_connected(G):
            yield G


def labeled_connected(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices (brute force over edge masks)."""
    _check_builtin_order(n)
    for mask in range(1 << (n * (n - 1) // 2)):
        G = from_upper_mask(n, mask)
        if is_connected(G):
            yield G


# ==========================
# CORPUS FILES
# ==========================

def ingest(path: str, order: Optional[int] = None) -> Iterator[Graph]:
    """
    Stream graphs from a graph6 file in file order. Blank lines are skipped.
    A malformed line aborts the stream with its 1-based line number.
    """
    try:
        handle = open(path, "r", encoding="ascii")
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc}", code="corpus_io", path=str(path)) from exc

    with handle:
        lineno = 0
        try:
            for lineno, line in enumerate(handle, start=1):
                text = line.strip()
                if not text:
                    continue
                try:
                    G = graph6_decode(text)
                except Graph6Error as exc:
                    raise CorpusError(
                        f"{path}:{lineno}: {exc.message}",
                        code="corpus_line",
                        path=str(path),
                        line=lineno,
                        reason=exc.code,
                    ) from exc
                if order is not None and G.n != order:
                    raise CorpusError(
                        f"{path}:{lineno}: graph has order {G.n}, expected {order}",
                        code="order_mismatch",
                        path=str(path),
                        line=lineno,
                    )
                yield G
        except (OSError, UnicodeDecodeError) as exc:
            raise CorpusError(
                f"{path}:{lineno + 1}: read failed: {exc}",
                code="corpus_io",
                path=str(path),
                line=lineno + 1,
            ) from exc


def write_corpus(path: str, graphs: Iterable[Graph]) -> int:
    """Write one graph6 line per graph; returns the number written."""
    count = 0
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="ascii") as out:
            for G in graphs:
                out.write(graph6_encode(G) + "\n")
                count += 1
    except OSError as exc:
        raise CorpusError(f"cannot write {path}: {exc}", code="corpus_io", path=str(path)) from exc
    logger.info(f"wrote {count} graphs to {path}")
    return count

