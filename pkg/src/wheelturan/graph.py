"""Immutable simple graphs backed by integer bitset rows.

Row ``v`` of a :class:`Graph` is a Python ``int`` whose bit ``u`` is set iff
``uv`` is an edge.  Python integers are unbounded, so there is no fixed word
size and no cap on the order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DomainError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bitset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..order-1``.

    Build one with :meth:`from_edges` or :class:`GraphBuilder`; the
    constructor validates symmetry and the absence of loops.
    """

    order: int
    rows: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.order < 0 or len(self.rows) != self.order:
            raise DomainError("row count must equal the order")
        full = (1 << self.order) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise DomainError(f"row {v} has a loop or out-of-range bit")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise DomainError(f"adjacency not symmetric at {u},{v}")
            total += popcount(row)
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        b = GraphBuilder(n)
        for u, v in edges:
            b.add_edge(u, v)
        return b.build()

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def with_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        _link(rows, u, v, self.order)
        return Graph(self.order, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise DomainError("perm must be a permutation of the vertex range")
        rows = [0] * self.order
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.order, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.order, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def components(self) -> list[int]:
        """Connected components as bitsets, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.order):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_bipartite(self) -> bool:
        side = [-1] * self.order
        for s in range(self.order):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in iter_bits(self.rows[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edge_count})"


class GraphBuilder:
    """Mutable staging area for a :class:`Graph`; not meant to be shared."""

    def __init__(self, n: int):
        if n < 0:
            raise DomainError("order must be non-negative")
        self.order = n
        self._rows = [0] * n

    def add_edge(self, u: int, v: int) -> GraphBuilder:
        _link(self._rows, u, v, self.order)
        return self

    def add_clique(self, vertices: Iterable[int]) -> GraphBuilder:
        vs = list(vertices)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                self.add_edge(u, v)
        return self

    def join_sets(self, a: Iterable[int], b: Iterable[int]) -> GraphBuilder:
        bs = list(b)
        for u in a:
            for v in bs:
                self.add_edge(u, v)
        return self

    def build(self) -> Graph:
        return Graph(self.order, tuple(self._rows))


def _link(rows: list[int], u: int, v: int, n: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
    if u == v:
        raise DomainError(f"loop at vertex {u}")
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Block-diagonal union; vertices of ``parts[0]`` come first."""
    rows: list[int] = []
    offset = 0
    for g in parts:
        rows.extend(r << offset for r in g.rows)
        offset += g.order
    return Graph(offset, tuple(rows))


def join_graphs(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them."""
    n1, n2 = g1.order, g2.order
    left = ((1 << n2) - 1) << n1
    right = (1 << n1) - 1
    rows = [r | left for r in g1.rows] + [(r << n1) | right for r in g2.rows]
    return Graph(n1 + n2, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Subgraph induced by ``vertices`` (an iterable or a bitset), relabelled
    by ascending original index."""
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> g.order:
            raise IndexError("vertex set exceeds the graph's vertex range")
        keep = list(iter_bits(vertices))
    else:
        keep = sorted(set(vertices))
        if keep and (keep[0] < 0 or keep[-1] >= g.order):
            raise IndexError("vertex set exceeds the graph's vertex range")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(bitset(index[u] for u in iter_bits(g.rows[v]) if u in index))
    return Graph(len(keep), tuple(rows))


def twin_classes(g: Graph) -> list[int]:
    """For each vertex, the bitset of its twins with a smaller index.

    Two vertices are twins when they have the same open neighbourhood (false
    twins) or the same closed neighbourhood (true twins).  Swapping two twins
    is an automorphism, which the detectors use to skip symmetric branches.
    A vertex cannot have both a true and a false twin, so each relation gives
    a proper class.
    """
    lower = [0] * g.order
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    for v, row in enumerate(g.rows):
        closed = row | (1 << v)
        lower[v] = by_open.get(row, 0) | by_closed.get(closed, 0)
        by_open[row] = by_open.get(row, 0) | (1 << v)
        by_closed[closed] = by_closed.get(closed, 0) | (1 << v)
    return lower


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.order))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> Graph:
    """Parse the DOT subset written by :func:`to_dot`."""
    import re

    vertices: set[int] = set()
    edges = []
    for line in text.splitlines():
        line = line.strip().rstrip(";")
        if m := re.fullmatch(r"(\d+)\s*--\s*(\d+)", line):
            u, v = int(m[1]), int(m[2])
            edges.append((u, v))
            vertices.update((u, v))
        elif re.fullmatch(r"\d+", line):
            vertices.add(int(line))
    n = max(vertices) + 1 if vertices else 0
    return Graph.from_edges(n, edges)
