"""graph6 encoding and brute-force canonical labelling for small graphs."""

from __future__ import annotations

from .errors import CapacityError, Graph6Error
from .graph import Graph, twin_classes

GRAPH6_MAX_ORDER = 258047
CANONICAL_CAP = 9


def _header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= GRAPH6_MAX_ORDER:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise CapacityError(f"graph6 supports at most {GRAPH6_MAX_ORDER} vertices, got {n}")


def _pack(bits: list[int]) -> bytes:
    bits = bits + [0] * (-len(bits) % 6)
    out = bytearray()
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = value << 1 | b
        out.append(value + 63)
    return bytes(out)


def encode_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 line (no trailing newline)."""
    bits = [g.rows[j] >> i & 1 for j in range(1, g.order) for i in range(j)]
    return _header(g.order) + _pack(bits)


def decode_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line.  Trailing whitespace is ignored."""
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.rstrip(b"\r\n")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside [63,126]", i)
    if not data:
        raise Graph6Error("empty input", 0)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size header", len(data))
        if data[1] == 126:
            raise Graph6Error("8-byte size header not supported", 1)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(data) - pos != need:
        raise Graph6Error(f"expected {need} payload bytes for n={n}, got {len(data) - pos}",
                          min(len(data), pos + need))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need:
        pad = 6 * need - nbits
        if (data[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", len(data) - 1)
    return Graph(n, tuple(rows))


def _refine(g: Graph) -> list[list[int]]:
    """Ordered equitable partition, seeded by degree.

    Cells are ordered by an isomorphism-invariant signature, so isomorphic
    graphs receive corresponding partitions.
    """
    cell_of = [0] * g.order
    ncells = 1 if g.order else 0
    while True:
        masks = [0] * ncells
        for v, c in enumerate(cell_of):
            masks[c] |= 1 << v
        sigs = [(cell_of[v], tuple((g.rows[v] & m).bit_count() for m in masks))
                for v in range(g.order)]
        order = sorted(set(sigs))
        if len(order) == ncells:
            break
        rank = {s: i for i, s in enumerate(order)}
        cell_of = [rank[s] for s in sigs]
        ncells = len(order)
    cells: list[list[int]] = [[] for _ in range(ncells)]
    for v, c in enumerate(cell_of):
        cells[c].append(v)
    return cells


def canonical_labelling(g: Graph, cap: int = CANONICAL_CAP) -> list[int]:
    """Vertex order minimising the graph6 bit string among orders that respect
    the refined partition.  Returns ``order`` with ``order[pos] = vertex``."""
    n = g.order
    if n > cap:
        raise CapacityError(
            f"canonical form is capped at n={cap} (got {n}); use an isomorphism-free workflow")
    slots = [c for cell in _refine(g) for c in [cell] * len(cell)]
    lower_twins = twin_classes(g)
    rows = g.rows
    best: list[int] | None = None
    best_cols: list[int] = []
    placed: list[int] = []
    cols: list[int] = []

    def column(v: int) -> int:
        # bit i (MSB first) set iff placed[i] ~ v
        value = 0
        for u in placed:
            value = value << 1 | (rows[v] >> u & 1)
        return value

    def search(pos: int) -> None:
        nonlocal best, best_cols
        if pos == n:
            if best is None or cols < best_cols:
                best, best_cols = placed.copy(), cols.copy()
            return
        used = 0
        for u in placed:
            used |= 1 << u
        for v in slots[pos]:
            if used >> v & 1 or lower_twins[v] & ~used:
                continue
            cols.append(column(v))
            if best is None or cols <= best_cols[:pos + 1]:
                placed.append(v)
                search(pos + 1)
                placed.pop()
            cols.pop()

    search(0)
    return best or []


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """graph6 encoding of a canonical relabelling: equal iff isomorphic."""
    order = canonical_labelling(g, cap)
    perm = [0] * g.order
    for pos, v in enumerate(order):
        perm[v] = pos
    return encode_graph6(g.relabel(perm))


def is_isomorphic(g: Graph, h: Graph, cap: int = CANONICAL_CAP) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)


def dedup_isomorphic(graphs, cap: int = CANONICAL_CAP) -> dict[bytes, Graph]:
    """Map canonical form -> first representative seen."""
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        seen.setdefault(canonical_form(g, cap), g)
    return seen
