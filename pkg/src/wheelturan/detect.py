"""Subgraph containment for paths, cycles, wheels, star forests and wheel
forests, a generic backtracking matcher, and exact chromatic number.

Containment is always non-induced.  The specialised searches prune with
twin symmetry: if two unused vertices have the same neighbourhood, only the
smaller one is tried (swapping them is an automorphism fixing everything
placed so far).  The generic matcher deliberately skips this so it stays an
independent cross-check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BudgetExceeded, CapacityError, DomainError
from .graph import Graph, disjoint_union, iter_bits, popcount, twin_classes

DEFAULT_BUDGET = 10**8
CHROMATIC_CAP = 16


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None):
        self.limit = DEFAULT_BUDGET if limit is None else limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded(self.limit)


# -- patterns ---------------------------------------------------------------

@dataclass(frozen=True)
class WheelForestPattern:
    """Vertex-disjoint wheels W_q, one per entry of ``orders``."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            raise DomainError("wheel forest needs at least one wheel")
        if any(q < 4 for q in self.orders):
            raise DomainError("wheel orders must be >= 4")
        object.__setattr__(self, "orders", tuple(sorted(self.orders, reverse=True)))

    @property
    def even_count(self) -> int:
        return sum(1 for q in self.orders if q % 2 == 0)

    def graph(self) -> Graph:
        from .constructions import wheel
        return disjoint_union([wheel(q) for q in self.orders])

    def found_in(self, g: Graph, budget: int | None = None) -> bool:
        return contains_wheel_forest(g, self, budget)

    def __str__(self):
        return "+".join(f"W{q}" for q in self.orders)


@dataclass(frozen=True)
class StarForestPattern:
    """Vertex-disjoint stars; entry ``d`` is a star with centre degree d."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise DomainError("star forest needs at least one star")
        if any(d < 1 for d in self.degrees):
            raise DomainError("star degrees must be >= 1")
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            raise DomainError("star degrees must be nonincreasing")

    def graph(self) -> Graph:
        from .constructions import star
        return disjoint_union([star(d + 1) for d in self.degrees])

    def found_in(self, g: Graph, budget: int | None = None) -> bool:
        return contains_star_forest(g, self, budget)

    def __str__(self):
        return "+".join(f"S{d + 1}" for d in self.degrees)


@dataclass(frozen=True)
class GenericPattern:
    pattern: Graph
    name: str = ""

    def __post_init__(self):
        if self.pattern.order < 1:
            raise DomainError("pattern must have at least one vertex")

    def graph(self) -> Graph:
        return self.pattern

    def found_in(self, g: Graph, budget: int | None = None) -> bool:
        return contains_subgraph(g, self, budget)

    def __str__(self):
        if self.name:
            return self.name
        from .codec import encode_graph6
        return "g6:" + encode_graph6(self.pattern).decode()


Pattern = WheelForestPattern | StarForestPattern | GenericPattern


def parse_pattern(text: str) -> Pattern:
    """Parse a pattern spec.

    ``W5+W5`` is a wheel forest, ``S4+S3`` a star forest (S_q = K_{1,q-1}),
    ``K3``, ``C4``, ``P4``, ``K2,3`` are named graphs, ``g6:<line>`` is any
    graph in graph6.  A ``+`` of mixed kinds becomes a generic disjoint union.
    """
    from . import constructions as c
    from .codec import decode_graph6

    text = text.strip()
    if text.startswith("g6:"):
        return GenericPattern(decode_graph6(text[3:]), text)
    parts = [p.strip() for p in text.split("+")]
    if all(re.fullmatch(r"W\d+", p) for p in parts):
        return WheelForestPattern(tuple(int(p[1:]) for p in parts))
    if all(re.fullmatch(r"S\d+", p) for p in parts):
        if any(int(p[1:]) < 2 for p in parts):
            raise DomainError("stars need at least two vertices")
        return StarForestPattern(tuple(sorted((int(p[1:]) - 1 for p in parts), reverse=True)))
    graphs = []
    for p in parts:
        if m := re.fullmatch(r"K(\d+),(\d+)", p):
            graphs.append(c.complete_bipartite(int(m[1]), int(m[2])))
        elif m := re.fullmatch(r"([KCPWS])(\d+)", p):
            kind = {"K": "clique", "C": "cycle", "P": "path", "W": "wheel", "S": "star"}[m[1]]
            graphs.append(c.named_graph(kind, int(m[2])))
        else:
            raise DomainError(f"cannot parse pattern component {p!r}")
    return GenericPattern(disjoint_union(graphs), text)


# -- paths and cycles -------------------------------------------------------

def _cycles(rows, avail: int, length: int, lower_twins, free: int,
            budget: _Budget) -> Iterator[int]:
    """Yield vertex sets of cycles C_length inside ``avail``.

    Each cycle is generated from its smallest vertex, oriented so the second
    vertex is below the last.  ``free`` holds every unused vertex (a superset
    of ``avail``) and drives the twin rule.
    """
    path = [0] * length
    for s in iter_bits(avail):
        if lower_twins[s] & free:
            continue
        higher = avail & ~((2 << s) - 1)
        if popcount(higher) < length - 1:
            break
        path[0] = s
        closing = rows[s] & higher
        yield from _extend_cycle(rows, path, 1, 1 << s, higher, closing, length,
                                 lower_twins, free & ~(1 << s), budget)


def _extend_cycle(rows, path, depth, used, higher, closing, length, lower_twins,
                  free, budget) -> Iterator[int]:
    budget.tick()
    end = path[depth - 1]
    cand = rows[end] & higher & ~used
    left = length - depth
    if left == 1:
        cand &= closing & ~((2 << path[1]) - 1)
    elif left == 2:
        # the next vertex must still see a neighbour of the anchor
        keep = 0
        pool = closing & ~used
        for x in iter_bits(cand):
            if rows[x] & pool & ~(1 << x):
                keep |= 1 << x
        cand = keep
    for x in iter_bits(cand):
        if lower_twins[x] & free:
            continue
        path[depth] = x
        if left == 1:
            yield used | (1 << x)
        else:
            yield from _extend_cycle(rows, path, depth + 1, used | (1 << x), higher, closing,
                                     length, lower_twins, free & ~(1 << x), budget)


def _has_path(rows, avail: int, length: int, lower_twins, budget: _Budget) -> bool:
    if length == 1:
        return avail != 0

    def grow(end: int, first: int, used: int, depth: int, free: int) -> bool:
        budget.tick()
        for x in iter_bits(rows[end] & avail & ~used):
            if lower_twins[x] & free:
                continue
            if depth + 1 == length:
                if first < x:
                    return True
                continue
            if grow(x, first, used | (1 << x), depth + 1, free & ~(1 << x)):
                return True
        return False

    for s in iter_bits(avail):
        if lower_twins[s] & avail:
            continue
        if grow(s, s, 1 << s, 1, avail & ~(1 << s)):
            return True
    return False


def contains_path(g: Graph, q: int, budget: int | None = None) -> bool:
    """True iff ``g`` has a path on ``q`` vertices."""
    if q < 1:
        raise DomainError("path order must be >= 1")
    if q == 1:
        return g.order >= 1
    lower = twin_classes(g)
    b = _Budget(budget)
    for comp in g.components():
        if popcount(comp) >= q and _has_path(g.rows, comp, q, lower, b):
            return True
    return False


def contains_cycle(g: Graph, q: int, budget: int | None = None) -> bool:
    """True iff ``g`` contains C_q as a subgraph."""
    if q < 3:
        raise DomainError("cycle length must be >= 3")
    lower = twin_classes(g)
    full = g.vertex_mask
    for _ in _cycles(g.rows, full, q, lower, full, _Budget(budget)):
        return True
    return False


# -- wheels -----------------------------------------------------------------

def _wheel_hubs(rows, lower, q: int, free: int, floor: int = -1):
    """Hub candidates for W_q inside ``free`` (highest degree first) and the
    mask of vertices with at least three free neighbours."""
    rim_ok = 0
    hubs = []
    for v in iter_bits(free):
        d = popcount(rows[v] & free)
        if d >= 3:
            rim_ok |= 1 << v
        if d >= q - 1 and v > floor and not lower[v] & free:
            hubs.append((-d, v))
    hubs.sort()
    return [v for _, v in hubs], rim_ok


def _find_wheel(rows, lower, q: int, free: int, budget: _Budget) -> int:
    """Vertex set of some W_q inside ``free``, or 0."""
    hubs, rim_ok = _wheel_hubs(rows, lower, q, free)
    for h in hubs:
        rest = free & ~(1 << h)
        for rim in _cycles(rows, rows[h] & rest & rim_ok, q - 1, lower, rest, budget):
            return rim | (1 << h)
    return 0


def _small_transversal(rows, lower, orders, free: int, size: int, budget: _Budget) -> bool:
    """Whether at most ``size`` vertices meet every wheel of the listed orders.

    Branches on the vertices of one wheel found in what is left.  Of two twins
    inside that wheel only the smaller is branched on: any transversal using
    the larger maps onto one using the smaller.
    """
    for q in sorted(set(orders)):
        w = _find_wheel(rows, lower, q, free, budget)
        if w:
            break
    else:
        return True
    if size == 0:
        return False
    for x in iter_bits(w):
        if lower[x] & w & free:
            continue
        if _small_transversal(rows, lower, orders, free & ~(1 << x), size - 1, budget):
            return True
    return False


def _pack_wheels(g: Graph, orders: Sequence[int], budget: _Budget) -> bool:
    rows = g.rows
    lower = twin_classes(g)
    orders = sorted(orders, reverse=True)
    tail = [sum(orders[i:]) for i in range(len(orders) + 1)]
    if g.order < tail[0]:
        return False
    # m disjoint wheels cannot avoid a set of fewer than m vertices meeting them all
    if len(orders) > 1 and _small_transversal(rows, lower, orders, g.vertex_mask,
                                              len(orders) - 1, budget):
        return False

    def place(idx: int, free: int, prev_hub: int) -> bool:
        if idx == len(orders):
            return True
        if popcount(free) < tail[idx]:
            return False
        budget.tick()
        q = orders[idx]
        floor = prev_hub if idx and orders[idx - 1] == q else -1
        hubs, rim_ok = _wheel_hubs(rows, lower, q, free, floor)
        for h in hubs:
            rest = free & ~(1 << h)
            seen = set()
            for rim in _cycles(rows, rows[h] & rest & rim_ok, q - 1, lower, rest, budget):
                if rim in seen:
                    continue
                seen.add(rim)
                if place(idx + 1, rest & ~rim, h):
                    return True
        return False

    return place(0, g.vertex_mask, -1)


def contains_wheel(g: Graph, q: int, budget: int | None = None) -> bool:
    """True iff some vertex has C_{q-1} inside its neighbourhood."""
    if q < 4:
        raise DomainError("wheel order must be >= 4")
    return _pack_wheels(g, [q], _Budget(budget))


def contains_wheel_forest(g: Graph, pattern: WheelForestPattern | Sequence[int],
                          budget: int | None = None) -> bool:
    """True iff ``g`` holds vertex-disjoint copies of every listed wheel."""
    if not isinstance(pattern, WheelForestPattern):
        pattern = WheelForestPattern(tuple(pattern))
    return _pack_wheels(g, pattern.orders, _Budget(budget))


# -- star forests -----------------------------------------------------------

def contains_star_forest(g: Graph, pattern: StarForestPattern | Sequence[int],
                         budget: int | None = None) -> bool:
    """True iff ``g`` holds vertex-disjoint stars with the listed centre degrees."""
    if not isinstance(pattern, StarForestPattern):
        pattern = StarForestPattern(tuple(pattern))
    degrees = pattern.degrees
    rows = g.rows
    lower = twin_classes(g)
    b = _Budget(budget)
    tail = [sum(d + 1 for d in degrees[i:]) for i in range(len(degrees) + 1)]

    def place(idx: int, free: int, prev: int) -> bool:
        if idx == len(degrees):
            return True
        if popcount(free) < tail[idx]:
            return False
        d = degrees[idx]
        floor = prev if idx and degrees[idx - 1] == d else -1
        for c in iter_bits(free):
            if c <= floor or lower[c] & free or popcount(rows[c] & free) < d:
                continue
            if leaves(idx, free & ~(1 << c), rows[c] & free, d, -1, c):
                return True
        return False

    def leaves(idx: int, free: int, pool: int, need: int, last: int, centre: int) -> bool:
        b.tick()
        if need == 0:
            return place(idx + 1, free, centre)
        pool &= ~((2 << last) - 1) if last >= 0 else -1
        if popcount(pool) < need:
            return False
        for x in iter_bits(pool):
            if lower[x] & free:
                continue
            if leaves(idx, free & ~(1 << x), pool, need - 1, x, centre):
                return True
        return False

    return place(0, g.vertex_mask, -1)


# -- generic matcher --------------------------------------------------------

def _match_order(p: Graph, seeds: Sequence[int] = ()) -> list[int]:
    order = list(seeds)
    placed = set(order)
    deg = p.degrees()
    while len(order) < p.order:
        best = max((v for v in range(p.order) if v not in placed),
                   key=lambda v: (sum(1 for u in order if p.has_edge(u, v)), deg[v], -v))
        order.append(best)
        placed.add(best)
    return order


def _plan(p: Graph, seeds: Sequence[int] = ()):
    order = _match_order(p, seeds)
    back = [[u for u in order[:i] if p.has_edge(u, order[i])] for i in range(len(order))]
    return order, back, p.degrees()


def _embed(rows, n: int, p: Graph, seed: dict[int, int], budget: _Budget, plan=None) -> bool:
    order, back, pdeg = plan or _plan(p, list(seed))
    gdeg = [popcount(r) for r in rows]
    image = [-1] * p.order
    used = 0
    for a, x in seed.items():
        image[a] = x
        used |= 1 << x
    full = (1 << n) - 1
    last = len(order)

    def step(i: int, used: int) -> bool:
        budget.tick()
        if i == last:
            return True
        a = order[i]
        cand = full & ~used
        for u in back[i]:
            cand &= rows[image[u]]
        for x in iter_bits(cand):
            if gdeg[x] < pdeg[a]:
                continue
            image[a] = x
            if step(i + 1, used | (1 << x)):
                return True
        image[a] = -1
        return False

    return step(len(seed), used)


def contains_subgraph(g: Graph, pattern: GenericPattern | Graph, budget: int | None = None) -> bool:
    """Generic injective edge-preserving search, no symmetry pruning."""
    p = pattern.pattern if isinstance(pattern, GenericPattern) else pattern
    if p.order > g.order or p.edge_count > g.edge_count:
        return False
    return _embed(g.rows, g.order, p, {}, _Budget(budget))


@lru_cache(maxsize=128)
def _edge_orbit_plans(p: Graph):
    """One directed pattern edge per orbit of Aut(p), each with its plan.

    ``(x, y)`` lies in the orbit of ``(a, c)`` iff p embeds into itself with
    a -> x and c -> y; an injective self-embedding is an automorphism.
    """
    reps: list[tuple[int, int]] = []
    for a, c in p.edges():
        for x, y in ((a, c), (c, a)):
            if not any(_embed(p.rows, p.order, p, {r0: x, r1: y}, _Budget(None))
                       for r0, r1 in reps):
                reps.append((x, y))
    return [(a, c, _plan(p, [a, c])) for a, c in reps]


def embeds_through_edge(rows, n: int, p: Graph, u: int, v: int, budget: int | None = None) -> bool:
    """Whether ``p`` embeds in the graph given by ``rows`` using edge ``uv``.

    Used for incremental freeness checks after adding ``uv``.
    """
    b = _Budget(budget)
    for a, c, plan in _edge_orbit_plans(p):
        if _embed(rows, n, p, {a: u, c: v}, b, plan):
            return True
    return False


# -- colouring --------------------------------------------------------------

def clique_number(g: Graph) -> int:
    rows = g.rows
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        for v in iter_bits(cand):
            grow(size + 1, cand & rows[v])
            cand &= ~(1 << v)
            if size + popcount(cand) <= best:
                return

    grow(0, g.vertex_mask)
    return best


def is_colorable(g: Graph, c: int) -> bool:
    """Backtracking c-colouring, most-saturated vertex first."""
    n = g.order
    rows = g.rows
    colour = [-1] * n
    classes = [0] * c

    def go(done: int, top: int) -> bool:
        if done == n:
            return True
        pick, pick_sat = -1, -1
        for v in range(n):
            if colour[v] < 0:
                sat = sum(1 for k in range(top) if classes[k] & rows[v])
                if sat > pick_sat:
                    pick, pick_sat = v, sat
        for k in range(min(top + 1, c)):
            if classes[k] & rows[pick]:
                continue
            colour[pick] = k
            classes[k] |= 1 << pick
            if go(done + 1, max(top, k + 1)):
                return True
            classes[k] &= ~(1 << pick)
            colour[pick] = -1
        return False

    return go(0, 0)


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    if g.order > cap:
        raise CapacityError(f"chromatic number is capped at n={cap}, got {g.order}")
    if g.order == 0:
        return 0
    c = clique_number(g)
    while not is_colorable(g, c):
        c += 1
    return c
