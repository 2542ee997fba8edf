"""
graph6 codec, short form only (n <= 62).

Layout: chr(n + 63), then the upper-triangle bits in column order
(0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
zero padded, each group written as chr(group + 63).
"""
from randic.errors import Graph6Error
from randic.graph import Graph, from_upper_mask, upper_mask

SHORT_FORM_MAX = 62


def _groups(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def graph6_encode(G: Graph) -> str:
    if G.n > SHORT_FORM_MAX:
        raise Graph6Error(
            f"order {G.n} needs the long form", code="graph6_long_form", n=G.n
        )
    return mask_to_graph6(G.n, upper_mask(G))


def mask_to_graph6(n: int, mask: int) -> str:
    nbits = n * (n - 1) // 2
    groups = _groups(n)
    padded = mask << (groups * 6 - nbits)
    body = "".join(
        chr(((padded >> (6 * (groups - 1 - k))) & 0x3F) + 63) for k in range(groups)
    )
    return chr(n + 63) + body


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", code="graph6_length")

    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(
                f"invalid character {ch!r} at position {pos}",
                code="graph6_char",
                position=pos,
            )

    n = ord(s[0]) - 63
    if n > SHORT_FORM_MAX:
        raise Graph6Error("long-form graph6 is not supported", code="graph6_long_form")

    groups = _groups(n)
    if len(s) != 1 + groups:
        raise Graph6Error(
            f"order {n} needs {groups} data bytes, got {len(s) - 1}",
            code="graph6_length",
            n=n,
        )

    padded = 0
    for ch in s[1:]:
        padded = (padded << 6) | (ord(ch) - 63)
    pad = groups * 6 - n * (n - 1) // 2
    if padded & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", code="graph6_padding")
    if n == 0:
        raise Graph6Error("graph6 string encodes the empty graph", code="graph6_length")
    return from_upper_mask(n, padded >> pad)
