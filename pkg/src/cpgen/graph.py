"""Subcubic graph model with bitset neighbourhoods, local invariants and graph6 I/O.

Vertices are dense integers ``0..n-1``.  In generated graphs the first cycle
``v_0 .. v_{k-1}`` occupies ``0..k-1`` and the second cycle ``w_0 .. w_{k-1}``
occupies ``k..2k-1``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

INF = float("inf")
popcount = int.bit_count


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph of maximum degree 3.

    ``adj[v]`` is the neighbour list of ``v``; ``nbits[v]`` is the same set as
    a bitmask.  ``deg3`` is the bitmask of vertices of degree 3.
    Mutation is in place; copy() before handing a graph to another owner.
    """

    __slots__ = ("n", "adj", "nbits", "m", "deg3")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.nbits = [0] * n
        self.m = 0
        self.deg3 = 0
        for u, v in edges:
            self.add_edge(u, v)

    # -- mutation ---------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        assert u != v and 0 <= u < self.n and 0 <= v < self.n, (u, v)
        assert not (self.nbits[u] >> v) & 1, f"edge {u}-{v} already present"
        assert len(self.adj[u]) < 3 and len(self.adj[v]) < 3, f"degree overflow at {u}-{v}"
        self.adj[u].append(v)
        self.adj[v].append(u)
        self.nbits[u] |= 1 << v
        self.nbits[v] |= 1 << u
        self.m += 1
        if len(self.adj[u]) == 3:
            self.deg3 |= 1 << u
        if len(self.adj[v]) == 3:
            self.deg3 |= 1 << v

    def remove_edge(self, u: int, v: int) -> None:
        assert (self.nbits[u] >> v) & 1, f"edge {u}-{v} absent"
        self.adj[u].remove(v)
        self.adj[v].remove(u)
        self.nbits[u] &= ~(1 << v)
        self.nbits[v] &= ~(1 << u)
        self.m -= 1
        self.deg3 &= ~((1 << u) | (1 << v))

    # -- queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.nbits[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_cubic(self) -> bool:
        return self.deg3 == (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def copy(self) -> "Graph":
        h = Graph.__new__(Graph)
        h.n = self.n
        h.adj = [list(a) for a in self.adj]
        h.nbits = list(self.nbits)
        h.m = self.m
        h.deg3 = self.deg3
        return h

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def check(self) -> None:
        """Debug audit of the structural invariants."""
        total = 0
        for v in range(self.n):
            a = self.adj[v]
            assert len(a) <= 3 and len(set(a)) == len(a) and v not in a
            assert self.nbits[v] == sum(1 << w for w in a)
            assert all(v in self.adj[w] for w in a)
            assert bool((self.deg3 >> v) & 1) == (len(a) == 3)
            total += len(a)
        assert total == 2 * self.m

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.nbits == other.nbits

    def __hash__(self):
        return hash((self.n, tuple(self.nbits)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def k33() -> Graph:
    return Graph(6, ((i, j) for i in range(3) for j in range(3, 6)))


# -- distances and local invariants --------------------------------------


def distances_from(g: Graph, src: int) -> list[float]:
    dist = [INF] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_at_most(g: Graph, a: int, b: int, limit: int) -> bool:
    """True iff ``d(a, b) <= limit``; bounded bitset BFS."""
    seen = frontier = 1 << a
    target = 1 << b
    nbits = g.nbits
    for _ in range(limit):
        if seen & target:
            return True
        nxt = 0
        for x in bits(frontier):
            nxt |= nbits[x]
        frontier = nxt & ~seen
        if not frontier:
            return False
        seen |= frontier
    return bool(seen & target)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def ball_size(g: Graph, a: int, b: int, r: int) -> int:
    """Number of vertices within distance ``r`` of ``a`` or of ``b``."""
    seen = frontier = (1 << a) | (1 << b)
    nbits = g.nbits
    for _ in range(r):
        nxt = 0
        for x in bits(frontier):
            nxt |= nbits[x]
        frontier = nxt & ~seen
        seen |= frontier
    return popcount(seen)


def ball_mask(g: Graph, a: int, r: int) -> int:
    """Vertex mask of the radius-``r`` ball around ``a``."""
    seen = frontier = 1 << a
    nbits = g.nbits
    for _ in range(r):
        nxt = 0
        for x in bits(frontier):
            nxt |= nbits[x]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def degree2_mask(g: Graph) -> int:
    return sum(1 << v for v in range(g.n) if len(g.adj[v]) == 2)


def degree2_count_near(g: Graph, a: int, b: int, r: int, d2: int | None = None) -> int:
    """Degree-2 vertices within distance ``r`` of ``a`` plus those within ``r`` of ``b``.

    The two counts are summed, so a vertex close to both endpoints counts twice.
    """
    if d2 is None:
        d2 = degree2_mask(g)
    return popcount(ball_mask(g, a, r) & d2) + popcount(ball_mask(g, b, r) & d2)


def count_cycles_through_edge(g: Graph, a: int, b: int, length: int) -> int:
    """Number of cycles of the given length that use edge ``ab``."""
    assert g.has_edge(a, b)
    adj = g.adj
    steps = length - 1
    count = 0
    # simple paths a -> b of `steps` edges avoiding the edge ab itself
    stack = [(a, 1 << a, 0)]
    while stack:
        x, used, d = stack.pop()
        if d == steps - 1:
            if (g.nbits[x] >> b) & 1 and x != a:
                count += 1
            continue
        for y in adj[x]:
            if y == b or (used >> y) & 1:
                continue
            stack.append((y, used | (1 << y), d + 1))
    return count


# -- graph6 ---------------------------------------------------------------


class Graph6Error(ValueError):
    pass


def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> bytes:
    """Standard graph6 (no header, no newline)."""
    n = g.n
    out = bytearray(_size_header(n))
    nbits = g.nbits
    acc = 0
    nacc = 0
    for j in range(1, n):
        row = nbits[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("byte outside graph6 range")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        raise Graph6Error("unsupported graph6 size header")
    nbits_total = n * (n - 1) // 2
    nbytes = (nbits_total + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    pad = nbytes * 6 - nbits_total
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    g = Graph(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                if len(g.adj[i]) >= 3 or len(g.adj[j]) >= 3:
                    raise Graph6Error("vertex of degree > 3")
                g.add_edge(i, j)
            k += 1
    return g


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)
