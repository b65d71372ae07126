"""Weak orderly generation over partial permutations.

A partial ``k``-permutation ``img`` of size ``l`` with ``img[0] == 0`` encodes
the graph made of the cycles ``v_0..v_{k-1}`` (vertices ``0..k-1``) and
``w_0..w_{k-1}`` (vertices ``k..2k-1``) plus the spokes ``v_i w_{img[i]}``.
Four relabelling operations act on these encodings; an encoding is kept only
if it is lexicographically smallest among everything reachable from it.  A
graph with several permutation 2-factors may have several such encodings and
is then emitted more than once.
"""

from __future__ import annotations

from .ccpm import Constraints, Split
from .graph import Graph, ball_mask
from .props import is_hamiltonian


# -- relabelling operations ------------------------------------------------


def is_restricted(p) -> bool:
    return max(p) == len(p) - 1


def apply_p1(p, k):
    """Reflect the second cycle."""
    return tuple(-x % k for x in p)


def apply_p2(p, k):
    """Reverse the spoke order on the first cycle and rotate the second so the image starts at 0."""
    c = p[-1]
    return tuple((x - c) % k for x in reversed(p))


def apply_p3(p, k):
    """Swap the two cycles; needs the image to be ``0..l-1``."""
    if not is_restricted(p):
        raise ValueError("p3 needs a restricted partial permutation")
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def apply_p4(p, k):
    """Rotate the first cycle by one; needs a full permutation."""
    if len(p) != k:
        raise ValueError("p4 needs a full permutation")
    c = p[k - 1]
    return tuple((p[i - 1] - c) % k for i in range(k))


def family(p, k) -> set:
    """All encodings reachable from ``p`` by the applicable operations."""
    seen = {p}
    stack = [p]
    while stack:
        q = stack.pop()
        for r in _images(q, k):
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def _images(q, k):
    l = len(q)
    yield tuple(-x % k for x in q)
    c = q[-1]
    yield tuple((x - c) % k for x in reversed(q))
    if max(q) == l - 1:
        inv = [0] * l
        for i, x in enumerate(q):
            inv[x] = i
        yield tuple(inv)
    if l == k:
        c = q[k - 1]
        yield tuple((q[i - 1] - c) % k for i in range(k))


def is_canonical(p, k) -> bool:
    """``p`` is the lexicographic minimum of its family (stops at the first smaller member)."""
    seen = {p}
    stack = [p]
    while stack:
        q = stack.pop()
        for r in _images(q, k):
            if r < p:
                return False
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return True


def permutation_graph(p, k) -> Graph:
    """Graph encoded by the partial permutation ``p``."""
    g = Graph(2 * k)
    for i in range(k):
        g.add_edge(i, (i + 1) % k)
        g.add_edge(k + i, k + (i + 1) % k)
    for i, x in enumerate(p):
        g.add_edge(i, k + x)
    return g


# -- hamiltonian-cycle lookaheads ------------------------------------------


class Lookahead:
    """Hamiltonian-cycle lookaheads for every extension of one prefix.

    A hamiltonian cycle through the new spoke ``s0`` that crosses between the
    two cycles on 2, 4 or 6 spokes is looked for, where the spokes, taken in
    order, alternate between neighbouring images on C2 and neighbouring
    positions on C1.  The chain ends next to ``s0`` on C1, and that tail only
    involves the prefix, so it is tabulated once per node.  Rejection always
    comes with an explicit hamiltonian cycle, so no non-hamiltonian completion
    is ever lost.
    """

    def __init__(self, prefix, k, max_spokes: int = 6):
        self.prefix = tuple(prefix)
        self.k = k
        self.max_spokes = max_spokes
        lp = len(prefix)
        self.s0 = lp
        inv = [-1] * k
        for i, x in enumerate(prefix):
            inv[x] = i
        self.inv = inv
        # C1 neighbours of s0 among the prefix positions
        close = [lp - 1]
        if lp + 1 == k and lp - 1 != 0:
            close.append(0)
        self.close = close
        # tails (s2, s3) with s3 in close, s2 -C2- s3; tails (s3, s4, s5) with s5 in close
        self.tail4 = {}
        self.tail6 = {}
        for s5 in close:
            for s4 in self._c2(s5):
                self.tail4.setdefault(s4, []).append(s5)
                for s3 in self._c1(s4):
                    if s3 != s5:
                        self.tail6.setdefault(s3, []).append((s4, s5))

    def _c1(self, i):
        last = self.s0 - 1
        return [j for j in (i - 1, i + 1) if 0 <= j <= last]

    def _c2(self, i):
        k = self.k
        y = self.prefix[i]
        inv = self.inv
        a, b = inv[(y - 1) % k], inv[(y + 1) % k]
        return [j for j in ((a, b) if a != b else (a,)) if j >= 0]

    def allows(self, x) -> bool:
        k = self.k
        inv = self.inv
        s0 = self.s0
        if s0 < 1 or k < 3:
            return True
        firsts = [j for j in {inv[(x - 1) % k], inv[(x + 1) % k]} if j >= 0]
        if not firsts:
            return True
        close = self.close
        p = None
        for s1 in firsts:
            if s1 in close:
                # neighbouring positions with neighbouring images
                return False
            if self.max_spokes < 4:
                continue
            for s2 in self._c1(s1):
                for s3 in self.tail4.get(s2, ()):
                    if s3 != s1:
                        p = p or self.prefix + (x,)
                        if _spans_one_cycle((s0, s1, s2, s3), p, k):
                            return False
                if self.max_spokes < 6:
                    continue
                for s3 in self._c2(s2):
                    if s3 == s1:
                        continue
                    for s4, s5 in self.tail6.get(s3, ()):
                        if s4 in (s1, s2) or s5 in (s1, s2):
                            continue
                        p = p or self.prefix + (x,)
                        if _spans_one_cycle((s0, s1, s2, s3, s4, s5), p, k):
                            return False
        return True


def lookahead_allows(p, k, max_spokes: int = 6) -> bool:
    """False when ``p``'s graph has a hamiltonian cycle through its last spoke found by :class:`Lookahead`."""
    p = tuple(p)
    if len(p) < 2:
        return True
    return Lookahead(p[:-1], k, max_spokes).allows(p[-1])


def _spans_one_cycle(chain, p, k) -> bool:
    """Does swapping the chain's cycle edges for its spokes give one hamiltonian cycle?

    ``chain`` lists at least four C1 positions.  Entries ``2j`` and ``2j+1``
    have neighbouring images on C2 and lose that C2 edge.  Entries ``2j+1``
    and ``2j+2`` (cyclically) are neighbours on C1 and lose that C1 edge.
    """
    t2 = len(chain)
    arc1 = _arc_partners(sorted(range(t2), key=chain.__getitem__), lambda j: (j + 1) % t2 if j & 1 else (j - 1) % t2)
    arc2 = _arc_partners(sorted(range(t2), key=lambda j: p[chain[j]]), lambda j: j ^ 1)
    # C1 arc to another spoke, across it, then C2 arc to the next spoke
    j = 0
    steps = 0
    while True:
        j = arc2[arc1[j]]
        steps += 2
        if j == 0:
            return steps == t2
        if steps >= t2:
            return False


def _arc_partners(order, mate):
    """For chain indices sorted along a cycle: the far end of the surviving arc at each index."""
    m = len(order)
    out = [0] * m
    for r, j in enumerate(order):
        left = order[r - 1]
        out[j] = order[(r + 1) % m] if mate(j) == left else left
    return out


# -- search -----------------------------------------------------------------


class OrderlyGenerator:
    def __init__(
        self,
        n: int,
        constraints: Constraints | None = None,
        split: Split | None = None,
        lookaheads: bool = True,
        backend: str = "auto",
    ):
        if n % 2 or n < 6:
            raise ValueError(f"order must be even and at least 6, got {n}")
        self.n = n
        self.k = n // 2
        self.constraints = constraints or Constraints()
        self.split = split or Split()
        self.girth = self.constraints.effective_girth(n)
        self.nonham = self.constraints.nonhamiltonian
        self.lookaheads = lookaheads and self.nonham
        self.split_depth = self.split.resolve_depth(self.k) + 1
        if backend not in ("auto", "python", "jit"):
            raise ValueError(f"unknown backend {backend!r}")
        self.backend = backend
        self.split_counter = 0
        self.stats = {"nodes": 0, "lookahead_rejects": 0, "ham_checks": 0}

    def run(self, sink) -> int:
        """Emit ``(graph, permutation)`` for every canonical full permutation that meets the constraints."""
        k = self.k
        if self.girth and k < self.girth:
            return 0
        self.sink = sink
        self.count = 0
        search = _jit_search() if self.backend != "python" else None
        if search is None and self.backend == "jit":
            raise RuntimeError("the compiled backend needs numba")
        if search is not None:
            return self._run_compiled(search)
        self.g = permutation_graph((0,), k)
        self.inv = [-1] * k
        self.inv[0] = 0
        self._expand((0,))
        return self.count

    def _run_compiled(self, search) -> int:
        k = self.k
        leaves, nodes, rejects = search(k, self.girth, self.lookaheads, self.split.res, self.split.mod,
                                        self.split_depth)
        self.stats["nodes"] += int(nodes)
        self.stats["lookahead_rejects"] += int(rejects)
        for row in leaves:
            p = tuple(int(x) for x in row)
            g = permutation_graph(p, k)
            if self.nonham:
                self.stats["ham_checks"] += 1
                if is_hamiltonian(g):
                    continue
            self.count += 1
            self.sink(g, p)
        return self.count

    def _expand(self, p):
        k = self.k
        l = len(p)
        self.stats["nodes"] += 1
        if l == self.split_depth and self.split.mod > 1:
            c = self.split_counter
            self.split_counter += 1
            if c % self.split.mod != self.split.res:
                return
        if l == k:
            if self.nonham:
                self.stats["ham_checks"] += 1
                if is_hamiltonian(self.g):
                    return
            self.count += 1
            self.sink(self.g, p)
            return
        g = self.g
        inv = self.inv
        # a spoke v_l w_x closes a cycle of length dist(v_l, w_x) + 1
        near = ball_mask(g, l, self.girth - 2) if self.girth else 0
        look = Lookahead(p, k) if self.lookaheads else None
        for x in range(k):
            if inv[x] >= 0 or (near >> (k + x)) & 1:
                continue
            q = p + (x,)
            if look is not None and not look.allows(x):
                self.stats["lookahead_rejects"] += 1
                continue
            if not is_canonical(q, k):
                continue
            inv[x] = l
            g.add_edge(l, k + x)
            self._expand(q)
            g.remove_edge(l, k + x)
            inv[x] = -1


def _jit_search():
    """The compiled search, or None when numba is unavailable."""
    try:
        from ._orderly_jit import search
    except ImportError:
        return None
    return search


def generate_orderly(n: int, constraints: Constraints | None = None, split: Split | None = None,
                     lookaheads: bool = True, backend: str = "auto") -> list[tuple[Graph, tuple]]:
    """Raw orderly output as ``(graph, permutation)`` pairs, duplicates included."""
    out = []
    OrderlyGenerator(n, constraints, split, lookaheads, backend).run(lambda g, p: out.append((g.copy(), p)))
    return out
