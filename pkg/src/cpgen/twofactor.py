"""Permutation 2-factors of subcubic graphs.

A permutation 2-factor is a split of the vertex set into two halves that each
induce a chordless cycle.  In a subcubic graph the cycle edges are then forced
(they are exactly the edges inside each half) so a factor is identified by the
vertex set of its first cycle alone.

Fact used throughout: if a non-cubic graph has one consecutive permutation
2-factor then all of its permutation 2-factors are consecutive.  The degree-2
vertices of a consecutive factor form a path on one cycle holding half of all
degree-2 vertices; every other factor must place that forced path on one of
its cycles, which makes that cycle's degree-3 vertices contiguous.  So after an
eligible edge ``uv`` is added, the factors of ``G + uv`` are the old factors
that separate ``u`` from ``v`` plus the new ones that use ``uv`` as a cycle
edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, popcount

FULL = "full"


@dataclass(frozen=True)
class TwoFactor:
    c1: int  # vertex mask of the cycle holding vertex 0
    c2: int

    @classmethod
    def from_side(cls, g: Graph, side: int) -> "TwoFactor":
        other = ((1 << g.n) - 1) ^ side
        return cls(side, other) if side & 1 else cls(other, side)

    def separates(self, u: int, v: int) -> bool:
        return ((self.c1 >> u) & 1) != ((self.c1 >> v) & 1)

    def orders(self, g: Graph) -> tuple[list[int], list[int]]:
        return cycle_order(g, self.c1), cycle_order(g, self.c2)


def cycle_order(g: Graph, side: int) -> list[int]:
    """Cyclic vertex sequence of the chordless cycle induced by ``side``."""
    start = (side & -side).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in g.adj[cur] if (side >> w) & 1 and w != prev]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def is_permutation_two_factor(g: Graph, side: int) -> bool:
    """``side`` and its complement both induce chordless cycles of length n/2."""
    full = (1 << g.n) - 1
    other = full ^ side
    half = g.n // 2
    if g.n % 2 or popcount(side) != half or half < 3:
        return False
    nbits = g.nbits
    for part in (side, other):
        for x in bits(part):
            if popcount(nbits[x] & part) != 2:
                return False
        if len(cycle_order(g, part)) != half:
            return False
    return True


def side_arc(g: Graph, side: int):
    """Shape of the degree-3 vertices on the cycle ``side``.

    Returns ``FULL`` when every vertex has degree 3, ``(ends, outside)`` when
    they form a path (``ends`` its end vertices, ``outside`` the cycle
    neighbours just beyond the ends), and ``None`` otherwise.
    """
    d = g.deg3 & side
    if d == side:
        return FULL
    if not d:
        return None
    ends = []
    outside = []
    gap = side & ~d
    nbits = g.nbits
    for x in bits(d):
        o = nbits[x] & gap
        while o:
            low = o & -o
            ends.append(x)
            outside.append(low.bit_length() - 1)
            o ^= low
            if len(ends) > 2:
                return None
    if len(ends) != 2:
        return None
    return ends, outside


def is_consecutive(g: Graph, f: TwoFactor) -> bool:
    return side_arc(g, f.c1) is not None or side_arc(g, f.c2) is not None


def eligible_pairs(g: Graph, factors) -> list[tuple[int, int]]:
    """Non-adjacent vertex pairs whose joining edge is a permitted expansion.

    For every factor and side whose degree-3 vertices form a path, each
    degree-2 vertex just beyond that path is paired with every degree-2 vertex
    of the other cycle.  Pairs are ``(min, max)``, in first-encounter order.
    """
    d2 = ((1 << g.n) - 1) & ~g.deg3
    found: dict[tuple[int, int], None] = {}
    for f in factors:
        for side, other in ((f.c1, f.c2), (f.c2, f.c1)):
            arc = side_arc(g, side)
            if arc is None or arc is FULL:
                continue
            targets = list(bits(other & d2))
            for s in dict.fromkeys(arc[1]):
                for t in targets:
                    found[(s, t) if s < t else (t, s)] = None
    return list(found)


def reducible_edges(g: Graph, factors) -> list[tuple[int, int]]:
    """Edges whose removal gives a graph from which adding them back is eligible.

    These are the spokes of a factor at an end of a side's degree-3 path (any
    spoke when that side is entirely of degree 3).
    """
    found: dict[tuple[int, int], None] = {}
    nbits = g.nbits
    for f in factors:
        for side in (f.c1, f.c2):
            arc = side_arc(g, side)
            if arc is None:
                continue
            ends = bits(side) if arc is FULL else dict.fromkeys(arc[0])
            for a in ends:
                b = (nbits[a] & ~side).bit_length() - 1
                found[(a, b) if a < b else (b, a)] = None
    return list(found)


def prune_new_factor_search(h: Graph, u: int, v: int) -> bool:
    """Cheap certificate that ``h`` (which contains the new edge ``uv``) has no new factor.

    True when at least two degree-2 vertices lie in ``N(u) | N(v)``.
    """
    d2 = ((1 << h.n) - 1) & ~h.deg3
    return popcount((h.nbits[u] | h.nbits[v]) & d2) >= 2


def _cycles_through(g: Graph, u: int, v: int):
    """Vertex masks of the permutation 2-factor cycles using edge ``uv``.

    Grows an induced path ``u, v, ...``.  A vertex that becomes interior to
    the path may keep one neighbour off the cycle, which then needs degree 3
    and no second neighbour on the cycle.
    """
    n = g.n
    k = n // 2
    full = (1 << n) - 1
    nbits = g.nbits
    adj = g.adj
    deg3 = g.deg3
    ubit = 1 << u
    results = []

    def interior_ok(x, mask):
        o = nbits[x] & ~mask
        if not o:
            return True
        y = o.bit_length() - 1
        return bool((deg3 >> y) & 1) and popcount(nbits[y] & mask) == 1

    def extend(x, mask, length):
        if length == k:
            if not (nbits[x] & ubit) or not interior_ok(x, mask) or not interior_ok(u, mask):
                return
            other = full ^ mask
            for y in bits(other):
                if popcount(nbits[y] & other) != 2:
                    return
            if len(cycle_order(g, other)) == k:
                results.append(mask)
            return
        xbit = 1 << x
        for w in adj[x]:
            if (mask >> w) & 1:
                continue
            inside = nbits[w] & mask
            if inside != xbit and not (length + 1 == k and inside == xbit | ubit):
                continue
            new = mask | (1 << w)
            if x != u and not interior_ok(x, new):
                continue
            extend(w, new, length + 1)

    if u != v and (nbits[u] >> v) & 1:
        extend(v, ubit | (1 << v), 2)
    return results


def find_consecutive_containing(h: Graph, u: int, v: int) -> list[TwoFactor]:
    """Consecutive permutation 2-factors of ``h`` in which ``uv`` is a cycle edge."""
    out = []
    for mask in _cycles_through(h, u, v):
        f = TwoFactor.from_side(h, mask)
        if is_consecutive(h, f):
            out.append(f)
    return out


def all_permutation_two_factors(g: Graph) -> list[TwoFactor]:
    """Every permutation 2-factor of ``g``, found by induced-cycle search from vertex 0."""
    seen: dict[int, None] = {}
    for a in g.adj[0]:
        for mask in _cycles_through(g, 0, a):
            seen[mask] = None
    return [TwoFactor.from_side(g, m) for m in seen]


def consecutive_factors(g: Graph) -> list[TwoFactor]:
    return [f for f in all_permutation_two_factors(g) if is_consecutive(g, f)]


def update_after_add(factors, h: Graph, u: int, v: int) -> list[TwoFactor]:
    """Factor list of ``h = G + uv`` from the complete list for ``G``."""
    kept = [f for f in factors if f.separates(u, v) and is_consecutive(h, f)]
    if prune_new_factor_search(h, u, v):
        return kept
    return kept + find_consecutive_containing(h, u, v)
