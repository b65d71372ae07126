"""Hamiltonicity, 3-edge-colourability and cyclic edge connectivity deciders."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, girth, popcount


def is_hamiltonian(g: Graph) -> bool:
    """Spanning-cycle test for subcubic graphs.

    Depth-first path growth.  A vertex next to the growing path end must keep
    at least two usable neighbours, so degree-2 vertices force their edges
    early and dead branches die quickly.
    """
    n = g.n
    if n < 3:
        return False
    adj = g.adj
    if any(len(a) < 2 for a in adj):
        return False
    nbits = g.nbits
    full = (1 << n) - 1

    d2 = full & ~g.deg3
    s = (d2 & -d2).bit_length() - 1 if d2 else 0
    starts = adj[s][:2]
    if len(adj[s]) == 2:
        # both edges at a degree-2 vertex are forced: start along one, close via the other
        plans = [(starts[0], 1 << starts[1])]
    else:
        a, b, c = adj[s]
        plans = [(a, (1 << b) | (1 << c)), (b, 1 << c)]

    for first, closers in plans:
        if _ham_path(nbits, adj, full, s, first, closers):
            return True
    return False


def _ham_path(nbits, adj, full, s, first, closers) -> bool:
    sbit = 1 << s
    visited0 = sbit | (1 << first)
    # forbid the start's other edges except the permitted closing ones
    forbidden = nbits[s] & ~closers & ~(1 << first)

    def usable(z, visited, end):
        # neighbours z could still use in the final cycle
        return popcount(nbits[z] & ((full & ~visited) | (1 << end) | (sbit if (closers >> z) & 1 else 0)))

    stack = [(first, visited0)]
    # the start vertex is interior: its non-chosen neighbours other than closers lose it
    for z in bits(forbidden):
        if popcount(nbits[z] & ((full & ~visited0) | (1 << first))) < 2:
            return False
    while stack:
        x, visited = stack.pop()
        if visited == full:
            if (closers >> x) & 1:
                return True
            continue
        if not (closers & ~visited):
            continue
        for y in adj[x]:
            if (visited >> y) & 1:
                continue
            nv = visited | (1 << y)
            ok = True
            o = nbits[x] & ~nv
            while o:
                low = o & -o
                z = low.bit_length() - 1
                o ^= low
                if usable(z, nv, y) < 2:
                    ok = False
                    break
            if ok:
                stack.append((y, nv))
    return False


def is_three_edge_colorable(g: Graph) -> bool:
    """Proper 3-edge-colouring search; ``g`` must be cubic."""
    if not g.is_cubic():
        raise ValueError("3-edge-colourability is only decided for cubic graphs")
    n = g.n
    # order edges by BFS so constraints bite early
    order = []
    seen_edge = set()
    seen_v = [False] * n
    for root in range(n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y in g.adj[x]:
                e = (x, y) if x < y else (y, x)
                if e not in seen_edge:
                    seen_edge.add(e)
                    order.append(e)
                if not seen_v[y]:
                    seen_v[y] = True
                    queue.append(y)
    used = [0] * n  # colour bitmask per vertex
    m = len(order)

    def rec(i):
        if i == m:
            return True
        a, b = order[i]
        free = 7 & ~(used[a] | used[b])
        if i == 0:
            free &= 1  # colour symmetry
        while free:
            c = free & -free
            free ^= c
            used[a] |= c
            used[b] |= c
            if rec(i + 1):
                return True
            used[a] ^= c
            used[b] ^= c
        return False

    return rec(0)


def _cyclic_components(n: int, edges, removed: set) -> int:
    """Number of components of the graph minus ``removed`` that contain a cycle."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic_roots = set()
    for i, (a, b) in enumerate(edges):
        if i in removed:
            continue
        ra, rb = find(a), find(b)
        if ra == rb:
            cyclic_roots.add(ra)
        else:
            parent[rb] = ra
            if rb in cyclic_roots:
                cyclic_roots.discard(rb)
                cyclic_roots.add(ra)
    return len({find(r) for r in cyclic_roots})


def _bridges(n: int, edges, removed: set) -> list[int]:
    """Indices of bridges of the graph on ``edges`` minus ``removed`` (iterative lowpoint DFS)."""
    inc = [[] for _ in range(n)]
    for i, (a, b) in enumerate(edges):
        if i not in removed:
            inc[a].append((b, i))
            inc[b].append((a, i))
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            x, via, it = stack[-1]
            for y, eid in it:
                if eid == via:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, eid, iter(inc[y])))
                    break
                if disc[y] < low[x]:
                    low[x] = disc[y]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[x] < low[p]:
                        low[p] = low[x]
                    if low[x] > disc[p]:
                        out.append(via)
    return out


def cyclic_edge_connectivity_at_least(g: Graph, t: int) -> bool:
    """True iff no set of fewer than ``t`` edges is cycle-separating.

    If removing ``X`` leaves two cyclic components, some edge ``e`` of ``X``
    joins two of them and is a bridge of ``G - (X - e)``.  So it suffices to
    try every set ``Y`` of at most ``t - 2`` edges together with each bridge of
    ``G - Y``.
    """
    if t > 5:
        raise ValueError("only thresholds up to 5 are supported")
    edges = g.edges()
    if t <= 1:
        return True
    if _cyclic_components(g.n, edges, set()) >= 2:
        return False
    for size in range(0, t - 1):
        for ys in combinations(range(len(edges)), size):
            removed = set(ys)
            for b in _bridges(g.n, edges, removed):
                removed.add(b)
                if _cyclic_components(g.n, edges, removed) >= 2:
                    return False
                removed.discard(b)
    return True


def cyclic_edge_connectivity_brute(g: Graph, t: int) -> bool:
    """Same answer as :func:`cyclic_edge_connectivity_at_least` by trying every edge subset."""
    edges = g.edges()
    for size in range(0, t):
        for cut in combinations(range(len(edges)), size):
            if _cyclic_components(g.n, edges, set(cut)) >= 2:
                return False
    return True


@dataclass(frozen=True)
class Classification:
    girth: float
    hamiltonian: bool
    colorable: bool
    lambda_c_ge_5: bool


def classify(g: Graph) -> Classification:
    return Classification(
        girth=girth(g),
        hamiltonian=is_hamiltonian(g),
        colorable=is_three_edge_colorable(g),
        lambda_c_ge_5=cyclic_edge_connectivity_at_least(g, 5),
    )
