"""Deterministic generators for the named graphs and extremal families."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .formulas import check_family_params, family_edges, turan_part_sizes
from .graph import Graph, GraphBuilder, disjoint_union, join_graphs


def path(q: int) -> Graph:
    if q < 1:
        raise DomainError("path needs q >= 1")
    return Graph.from_edges(q, ((i, i + 1) for i in range(q - 1)))


def cycle(q: int) -> Graph:
    if q < 3:
        raise DomainError("cycle needs q >= 3")
    return Graph.from_edges(q, ((i, (i + 1) % q) for i in range(q)))


def star(q: int) -> Graph:
    """S_q = K_{1,q-1}, centre 0."""
    if q < 1:
        raise DomainError("star needs q >= 1")
    return Graph.from_edges(q, ((0, i) for i in range(1, q)))


def clique(q: int) -> Graph:
    if q < 0:
        raise DomainError("clique needs q >= 0")
    return GraphBuilder(q).add_clique(range(q)).build()


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise DomainError("complete bipartite needs a, b >= 1")
    return join_graphs(Graph.empty(a), Graph.empty(b))


def wheel(q: int) -> Graph:
    """W_q: hub 0 joined to the cycle C_{q-1} on 1..q-1."""
    if q < 4:
        raise DomainError("wheel needs q >= 4")
    return join_graphs(clique(1), cycle(q - 1))


_NAMED = {"path": path, "cycle": cycle, "star": star, "clique": clique, "wheel": wheel,
          "complete_bipartite": complete_bipartite}


def named_graph(kind: str, *params: int) -> Graph:
    try:
        build = _NAMED[kind]
    except KeyError:
        raise DomainError(f"unknown graph kind {kind!r}; choose from {sorted(_NAMED)}") from None
    return build(*params)


def turan_graph(n: int, p: int) -> Graph:
    """Complete p-partite graph with balanced parts, larger parts first."""
    sizes = turan_part_sizes(n, p)
    b = GraphBuilder(n)
    start = 0
    blocks = []
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    for i, a in enumerate(blocks):
        for c in blocks[i + 1:]:
            b.join_sets(a, c)
    return b.build()


def disjoint_copies(g: Graph, m: int) -> Graph:
    if m < 1:
        raise DomainError("need m >= 1 copies")
    return disjoint_union([g] * m)


@dataclass(frozen=True)
class FamilyParams:
    """One member of K^t_{n1,n2}(U^{k-1}_{n1}(P_{2k-1}); P_2)."""

    t: int
    n1: int
    n2: int
    k: int

    def __post_init__(self):
        check_family_params(self.t, self.n1, self.n2, self.k)

    @property
    def order(self) -> int:
        return self.t + self.n1 + self.n2


@dataclass(frozen=True)
class ConstructionReport:
    graph: Graph
    target_edges: int
    achieved_edges: int
    verified_free: bool | None = None

    @property
    def defect(self) -> int:
        return self.target_edges - self.achieved_edges


def _circulant(size: int, degree: int) -> Graph:
    """Graph on ``size`` vertices with max degree ``degree`` and
    floor(degree*size/2) edges: offsets 1..degree//2, plus a perfect or
    near-perfect matching of long chords when ``degree`` is odd."""
    b = GraphBuilder(size)
    for off in range(1, degree // 2 + 1):
        for i in range(size):
            b.add_edge(i, (i + off) % size)
    if degree % 2:
        half = size // 2
        for i in range(half):
            b.add_edge(i, i + half) if size % 2 == 0 else b.add_edge(i, i + (size - 1) // 2)
    return b.build()


def _component(size: int, k: int) -> Graph:
    return clique(size) if size <= k else _circulant(size, k - 1)


def near_regular_path_free(n: int, k: int) -> ConstructionReport:
    """A graph of max degree k-1 with every component of order <= 2k-2
    (hence P_{2k-1}-free), aiming at floor((k-1)n/2) edges.

    n = q*k + r: q-1 copies of K_k and one circulant on k + r vertices.  A
    remainder of order 2k-1 generally hosts P_{2k-1}; it is then re-split
    together with a spare K_k into two circulants, or into K_k + K_{k-1} when
    no spare exists (leaving a defect).
    """
    from .detect import contains_path

    if k < 2:
        raise DomainError("k must be >= 2")
    if n < 0:
        raise DomainError("n must be >= 0")
    target = (k - 1) * n // 2
    q, r = divmod(n, k)
    if q == 0:
        sizes = [n] if n else []
    elif r == 0:
        sizes = [k] * q
    else:
        sizes = [k] * (q - 1) + [k + r]
        if k + r == 2 * k - 1 and contains_path(_component(k + r, k), 2 * k - 1):
            if q >= 2:
                total = 3 * k - 1
                sizes = [k] * (q - 2) + [total - total // 2, total // 2]
            else:
                sizes = [k, k - 1]
    g = disjoint_union([_component(s, k) for s in sizes])
    return ConstructionReport(g, target, g.edge_count)


def extremal_family_graph(params: FamilyParams) -> ConstructionReport:
    """K_t joined to K_{n1,n2}, with :func:`near_regular_path_free` inside the
    n1 side and an edge on the first two n2 vertices.

    Vertex layout: clique block, then the n1 block, then the n2 block.
    """
    t, n1, n2, k = params.t, params.n1, params.n2, params.k
    inner = near_regular_path_free(n1, k)
    small = Graph.empty(n2).with_edge(0, 1)
    g = join_graphs(clique(t), join_graphs(inner.graph, small))
    return ConstructionReport(g, family_edges(t, n1, n2, k), g.edge_count)


def even_wheel_extremal_graph(n: int, h: int) -> Graph:
    """K_{h-1} joined to T(n-h+1, 3)."""
    if h < 1:
        raise DomainError("h must be >= 1")
    if n < h - 1:
        raise DomainError(f"n={n} < h-1={h - 1}")
    return join_graphs(clique(h - 1), turan_graph(n - h + 1, 3))
