"""Ground-truth ex(n, H) at desk scale, and the Simonovits (p, s) check.

Two independent engines compute ex(n, H):

* ``"enumerate"`` scans one representative per isomorphism class and uses
  the specialised detector of the pattern.
* ``"branch"`` decides vertex pairs in lexicographic order and checks
  freeness incrementally with the generic matcher, through the newly added
  edge only.  The bound on the undecided part uses ex(n', H) for smaller n',
  which is valid because H-freeness is inherited by induced subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Literal, Sequence

from .codec import canonical_form, decode_graph6, encode_graph6
from .detect import (
    DEFAULT_BUDGET, GenericPattern, Pattern, chromatic_number, embeds_through_edge,
)
from .errors import BudgetExceeded, CapacityError, DomainError
from .graph import Graph, induced_subgraph, popcount

ENUMERATION_CAP = 7
BRANCH_CAP = 10

Engine = Literal["auto", "enumerate", "branch"]


@dataclass(frozen=True)
class OracleResult:
    value: int
    exact: bool
    witness: str
    nodes_explored: int

    def witness_graph(self) -> Graph:
        return decode_graph6(self.witness)


@dataclass(frozen=True)
class SimonovitsParams:
    p: int
    s: int
    certified: bool


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[bytes, ...]:
    if n <= 1:
        return (canonical_form(Graph.empty(n)),)
    found = set()
    for form in _classes(n - 1):
        base = decode_graph6(form)
        rows = list(base.rows) + [0]
        for mask in range(1 << (n - 1)):
            new = rows.copy()
            new[n - 1] = mask
            for u in range(n - 1):
                if mask >> u & 1:
                    new[u] |= 1 << (n - 1)
            found.add(canonical_form(Graph(n, tuple(new))))
    return tuple(sorted(found))


def enumerate_graphs(n: int, cap: int = ENUMERATION_CAP) -> Iterable[Graph]:
    """One graph per isomorphism class on n vertices, in canonical-form order.

    Classes on n vertices arise from classes on n-1 vertices by adding a
    vertex with every possible neighbourhood, then deduplicating.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > cap:
        raise CapacityError(f"enumeration is capped at n={cap}, got {n}")
    return (decode_graph6(f) for f in _classes(n))


def _pattern_key(pattern: Pattern) -> tuple:
    return (type(pattern).__name__, encode_graph6(pattern.graph()))


def _enumeration_ex(n: int, pattern: Pattern, budget: int) -> OracleResult:
    graphs = sorted(enumerate_graphs(n), key=lambda g: -g.edge_count)
    checked = 0
    for g in graphs:
        checked += 1
        if not pattern.found_in(g, budget):
            return OracleResult(g.edge_count, True, encode_graph6(g).decode(), checked)
    raise AssertionError("the empty graph is always pattern-free")


def _greedy(n: int, p: Graph) -> list[int]:
    rows = [0] * n
    for u, v in combinations(range(n), 2):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if embeds_through_edge(rows, n, p, u, v):
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
    return rows


class _Search:
    """Labelled branch and bound over vertex pairs in lexicographic order.

    Besides the include/exclude bound, two sound cuts apply:

    * labels are ordered so degrees are nonincreasing (any graph can be
      relabelled that way);
    * a graph beating the incumbent has minimum degree at least
      best + 1 - ex(n-1, H), since deleting a minimum-degree vertex leaves an
      H-free graph on n-1 vertices.
    """

    def __init__(self, n: int, p: Graph, smaller: Sequence[int], budget: int):
        self.n = n
        self.p = p
        self.pairs = list(combinations(range(n), 2))
        # edges still obtainable from pairs[i:]
        self.bound = [(n - v) + smaller[n - u - 1] for u, v in self.pairs] + [0]
        self.ex_prev = smaller[n - 1] if n >= 1 else 0
        self.budget = budget
        self.nodes = 0
        self.best = -1
        self.best_rows: list[int] = []

    def run(self, start_rows: list[int]) -> None:
        self.best = sum(popcount(r) for r in start_rows) // 2
        self.best_rows = start_rows.copy()
        self.rows = [0] * self.n
        self.deg = [0] * self.n
        self._go(0, 0, 0)

    def _go(self, i: int, edges: int, done_degrees: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        if edges + self.bound[i] <= self.best:
            return
        n, deg, rows = self.n, self.deg, self.rows
        if i == len(self.pairs):
            self.best = edges
            self.best_rows = rows.copy()
            return
        u, v = self.pairs[i]
        cap = deg[u - 1] if u else n - 1
        if u and (done_degrees + (n - u) * cap) // 2 <= self.best:
            return
        dmin = self.best + 1 - self.ex_prev
        row_end = v == n - 1
        # include uv
        if deg[u] < cap and deg[v] < cap:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            if not embeds_through_edge(rows, n, self.p, u, v):
                deg[u] += 1
                deg[v] += 1
                if not row_end or self._row_ok(u):
                    self._go(i + 1, edges + 1, done_degrees + (deg[u] if row_end else 0))
                deg[u] -= 1
                deg[v] -= 1
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        # exclude uv
        if deg[u] + (n - 1 - v) < dmin or deg[v] + (v - u - 1) + (n - 1 - v) < dmin:
            return
        if not row_end or self._row_ok(u):
            self._go(i + 1, edges, done_degrees + (deg[u] if row_end else 0))

    def _row_ok(self, u: int) -> bool:
        """Row u is complete: its degree is final and caps the rest."""
        d = self.deg
        return all(d[w] <= d[u] for w in range(u + 1, self.n))


def _branch_ex(n: int, pattern: Pattern, budget: int, warm: Graph | None) -> OracleResult:
    p = pattern.graph()
    smaller = [_cached_branch(m, _pattern_key(pattern), pattern, budget).value
               if m < n else 0 for m in range(n)]
    search = _Search(n, p, smaller, budget)
    start = _greedy(n, p)
    if warm is not None and warm.edge_count > sum(popcount(r) for r in start) // 2:
        if warm.order != n or pattern.found_in(warm):
            raise DomainError("warm start must be a pattern-free graph on n vertices")
        start = list(warm.rows)
    try:
        search.run(start)
        exact = True
    except BudgetExceeded:
        exact = False
    g = Graph(n, tuple(search.best_rows))
    return OracleResult(search.best, exact, encode_graph6(g).decode(), search.nodes)


_branch_memo: dict[tuple, OracleResult] = {}


def _cached_branch(n: int, key: tuple, pattern: Pattern, budget: int) -> OracleResult:
    if n <= 1 or pattern.graph().order > n:
        return OracleResult(comb(n, 2), True, encode_graph6(_complete(n)).decode(), 0)
    memo_key = (n, key, budget)
    if memo_key not in _branch_memo:
        res = _branch_ex(n, pattern, budget, None)
        if not res.exact:
            # an inexact value is not an upper bound; fall back to the trivial one
            res = OracleResult(comb(n, 2), False, res.witness, res.nodes_explored)
        _branch_memo[memo_key] = res
    return _branch_memo[memo_key]


def _complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def brute_force_ex(n: int, pattern: Pattern | Graph, engine: Engine = "auto",
                   budget: int | None = None, warm_start: Graph | None = None) -> OracleResult:
    """Exact ex(n, pattern) for small n.

    ``engine="auto"`` enumerates up to n=7 and branches above.  The branch
    engine starts from a greedy lower bound, or from ``warm_start`` if that
    is better.  When the node budget runs out the best graph found is
    returned with ``exact=False``.
    """
    if isinstance(pattern, Graph):
        pattern = GenericPattern(pattern)
    if n < 0:
        raise DomainError("n must be >= 0")
    budget = DEFAULT_BUDGET if budget is None else budget
    if engine == "auto":
        engine = "enumerate" if n <= ENUMERATION_CAP else "branch"
    if engine == "enumerate":
        return _enumeration_ex(n, pattern, budget)
    if engine != "branch":
        raise DomainError(f"unknown engine {engine!r}")
    if n > BRANCH_CAP:
        raise CapacityError(f"branch-and-bound is capped at n={BRANCH_CAP}, got {n}")
    if pattern.graph().order > n:
        g = _complete(n)
        return OracleResult(g.edge_count, True, encode_graph6(g).decode(), 0)
    return _branch_ex(n, pattern, budget, warm_start)


def simonovits_params(family: Sequence[Graph]) -> SimonovitsParams:
    """p = min chi(L) - 1; s = least integer such that deleting any s-1
    vertices of any member keeps chi >= p+1 while some member becomes
    p-colourable after deleting s suitable edges."""
    if not family:
        raise DomainError("family must be nonempty")
    p = min(chromatic_number(L) for L in family) - 1
    if p < 1:
        return SimonovitsParams(max(p, 0), 0, False)
    s = 1
    while True:
        vertices_ok = all(
            chromatic_number(induced_subgraph(L, [v for v in range(L.order) if v not in drop])) >= p + 1
            for L in family for drop in combinations(range(L.order), s - 1))
        if not vertices_ok:
            # larger s only deletes more vertices
            return SimonovitsParams(p, s, False)
        if max(L.edge_count for L in family) < s:
            return SimonovitsParams(p, s, False)
        for L in family:
            for cut in combinations(list(L.edges()), s):
                if chromatic_number(L.without_edges(cut)) <= p:
                    return SimonovitsParams(p, s, True)
        s += 1
