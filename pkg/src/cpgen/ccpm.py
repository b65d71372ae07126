"""Exactly-once generation of cycle permutation graphs by canonical construction path.

Start from two ``n/2``-cycles joined by one edge and repeatedly add an edge
between an eligible pair of degree-2 vertices.  An expansion is accepted only
when the added edge ranks highest among the reducible edges of the new graph
under a 10-component invariant, and only one pair per automorphism orbit is
tried.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import canon
from .graph import Graph, ball_size, bits, count_cycles_through_edge, distance_at_most, popcount
from .props import is_hamiltonian
from .twofactor import (
    TwoFactor,
    eligible_pairs,
    find_consecutive_containing,
    is_consecutive,
    prune_new_factor_search,
    reducible_edges,
)

REJECT, UNIQUE, TIE = 0, 1, 2


@dataclass
class Constraints:
    girth: int = 0
    nonhamiltonian: bool = False

    def effective_girth(self, n: int) -> int:
        # a cycle permutation graph of order > 6 with a 4-cycle is hamiltonian
        if self.nonhamiltonian and n > 6:
            return max(self.girth, 5)
        return self.girth

    def describe(self) -> str:
        parts = []
        if self.girth:
            parts.append(f"g>={self.girth}")
        if self.nonhamiltonian:
            parts.append("nonham")
        return ",".join(parts) or "all"


@dataclass
class Split:
    res: int = 0
    mod: int = 1
    depth: int | None = None

    def __post_init__(self):
        if self.mod < 1 or not 0 <= self.res < self.mod:
            raise ValueError(f"invalid split res={self.res} mod={self.mod}")

    def resolve_depth(self, k: int) -> int:
        deepest = max(k - 1, 0)
        if self.depth is not None:
            return min(self.depth, deepest)
        return min(deepest, 3 + math.ceil(math.log2(self.mod)))


def initial_graph(n: int) -> tuple[Graph, list[TwoFactor]]:
    """Two ``n/2``-cycles ``0..k-1`` and ``k..n-1`` plus the edge ``v_0 w_0``."""
    if n % 2 or n < 6:
        raise ValueError(f"order must be even and at least 6, got {n}")
    k = n // 2
    g = Graph(n)
    for i in range(k):
        g.add_edge(i, (i + 1) % k)
        g.add_edge(k + i, k + (i + 1) % k)
    g.add_edge(0, k)
    c1 = (1 << k) - 1
    return g, [TwoFactor(c1, c1 << k)]


def edge_invariant(g: Graph, e: tuple[int, int], index: int, d2: int) -> int:
    """Component ``x_index`` (0..7) of the edge tuple."""
    a, b = e
    if index == 0:
        return -ball_size(g, a, b, 2)
    if index == 1:
        return -count_cycles_through_edge(g, a, b, 4)
    if index == 2:
        return -count_cycles_through_edge(g, a, b, 5)
    if index == 3:
        return ball_size(g, a, b, 3)
    if index == 4:
        return -count_cycles_through_edge(g, a, b, 6)
    if index == 5:
        return _d2_near(g, a, 1, d2) + _d2_near(g, b, 1, d2)
    if index == 6:
        return -(_d2_near(g, a, 2, d2) + _d2_near(g, b, 2, d2))
    if index == 7:
        return ball_size(g, a, b, 4)
    raise IndexError(index)


def _d2_near(g: Graph, a: int, r: int, d2: int) -> int:
    seen = frontier = 1 << a
    nbits = g.nbits
    for _ in range(r):
        nxt = 0
        for x in bits(frontier):
            nxt |= nbits[x]
        frontier = nxt & ~seen
        seen |= frontier
    return popcount(seen & d2)


def edge_tuple(g: Graph, e: tuple[int, int], form=None, gens=None) -> tuple:
    """Full ``(x0, ..., x9)`` for edge ``e`` of ``g``."""
    d2 = ((1 << g.n) - 1) & ~g.deg3
    head = tuple(edge_invariant(g, e, i, d2) for i in range(8))
    return head + canon.edge_orbit_label(g, e, form, gens)


class EdgeRanker:
    """Lazy lexicographic comparison of reducible edges against the new edge."""

    def __init__(self, g: Graph, target: tuple[int, int]):
        self.g = g
        self.target = target
        self.d2 = ((1 << g.n) - 1) & ~g.deg3
        self.cache: dict[tuple[int, int], list[int]] = {}

    def value(self, e, i):
        vals = self.cache.get(e)
        if vals is None:
            vals = self.cache[e] = []
        while len(vals) <= i:
            vals.append(edge_invariant(self.g, e, len(vals), self.d2))
        return vals[i]

    def compare(self, candidates):
        """Screen ``candidates`` on ``x0..x7``.

        Returns ``(REJECT, [])`` if some candidate beats the target,
        ``(UNIQUE, [target])`` if the target is the only maximiser, or
        ``(TIE, tied)`` with the candidates equal to the target so far.
        """
        target = self.target
        alive = [e for e in candidates if e != target]
        for i in range(8):
            if not alive:
                return UNIQUE, [target]
            t = self.value(target, i)
            nxt = []
            for e in alive:
                x = self.value(e, i)
                if x > t:
                    return REJECT, []
                if x == t:
                    nxt.append(e)
            alive = nxt
        if not alive:
            return UNIQUE, [target]
        return TIE, [target] + alive


def is_canonical_expansion(h: Graph, uv: tuple[int, int], factors) -> bool:
    """Reference check: ``uv`` maximises the full tuple over the reducible edges of ``h``."""
    cands = reducible_edges(h, factors)
    form, gens = canon.canonical_form(h)
    best = max(edge_tuple(h, e, form, gens) for e in cands)
    return edge_tuple(h, uv, form, gens) == best


class CCPMGenerator:
    """Depth-first canonical-construction-path search for one ``(res, mod)`` slice."""

    def __init__(self, n: int, constraints: Constraints | None = None, split: Split | None = None):
        self.n = n
        self.k = n // 2
        self.constraints = constraints or Constraints()
        self.split = split or Split()
        self.girth = self.constraints.effective_girth(n)
        self.nonham = self.constraints.nonhamiltonian
        self.split_depth = self.split.resolve_depth(self.k)
        self.split_counter = 0
        self.stats = {"nodes": 0, "nauty": 0, "factor_searches": 0}

    def run(self, sink) -> int:
        """Feed every generated cubic graph to ``sink``; return how many were produced."""
        g, factors = initial_graph(self.n)
        if self.girth and self.k < self.girth:
            return 0
        self.g = g
        self.count = 0
        self.sink = sink
        self._expand(0, factors, None)
        return self.count

    def _expand(self, depth, factors, gens):
        g = self.g
        self.stats["nodes"] += 1
        if depth == self.split_depth and self.split.mod > 1:
            c = self.split_counter
            self.split_counter += 1
            if c % self.split.mod != self.split.res:
                return
        if g.deg3 == (1 << g.n) - 1:
            self.count += 1
            self.sink(g)
            return
        pairs = eligible_pairs(g, factors)
        if len(pairs) > 1:
            if gens is None:
                gens = canon.automorphism_generators(g)
                self.stats["nauty"] += 1
            orbit = canon.pair_orbits(gens, pairs)
        else:
            orbit = [0]
        girth = self.girth
        for i, (u, v) in enumerate(pairs):
            if orbit[i] != i:
                continue
            if girth and distance_at_most(g, u, v, girth - 2):
                continue
            g.add_edge(u, v)
            accepted = self._accept(u, v, factors)
            if accepted is not None and self.nonham and is_hamiltonian(g):
                accepted = None
            if accepted is not None:
                self._expand(depth + 1, *accepted)
            g.remove_edge(u, v)

    def _accept(self, u, v, factors):
        """Canonicity of the just-added edge; returns ``(factors, gens)`` of the new graph or None."""
        g = self.g
        kept = [f for f in factors if f.separates(u, v) and is_consecutive(g, f)]
        target = (u, v) if u < v else (v, u)
        ranker = EdgeRanker(g, target)
        cands = reducible_edges(g, kept)
        status, tied = ranker.compare(cands)
        if status == REJECT:
            return None
        new = []
        if not prune_new_factor_search(g, u, v):
            self.stats["factor_searches"] += 1
            new = find_consecutive_containing(g, u, v)
            if new:
                known = set(cands)
                extra = [e for e in reducible_edges(g, new) if e not in known]
                if extra:
                    status, tied = ranker.compare(tied + extra)
                    if status == REJECT:
                        return None
        factors_h = kept + new
        if status == UNIQUE:
            return factors_h, None
        self.stats["nauty"] += 1
        form, gens = canon.canonical_form(g)
        edges = tied
        orbit = canon.pair_orbits(gens, edges)
        lab = form.labeling
        best_i = 0
        best = None
        for i, (a, b) in enumerate(edges):
            la, lb = lab[a], lab[b]
            label = (la, lb) if la > lb else (lb, la)
            if best is None or label > best:
                best, best_i = label, i
        if orbit[0] != orbit[best_i]:
            return None
        return factors_h, gens


def generate(n: int, constraints: Constraints | None = None, split: Split | None = None) -> list[Graph]:
    """All cycle permutation graphs of order ``n`` (one per isomorphism class within the slice)."""
    out: list[Graph] = []
    CCPMGenerator(n, constraints, split).run(lambda g: out.append(g.copy()))
    return out


def count(n: int, constraints: Constraints | None = None, split: Split | None = None) -> int:
    return CCPMGenerator(n, constraints, split).run(lambda g: None)
