"""Canonical labelling, automorphism generators and orbits.

nauty (through pynauty) does the individualisation-refinement work.  A small
backtracking engine is kept alongside as an exact reference for tiny graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import pynauty

from .graph import Graph, encode_graph6


@dataclass(frozen=True)
class CanonicalForm:
    labeling: tuple[int, ...]  # labeling[v] = canonical label of input vertex v
    cert: bytes


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        # keep the smaller index as root so roots are first-encountered elements
        if y < x:
            x, y = y, x
        self.parent[y] = x


def _nauty_graph(g: Graph, colors=None) -> pynauty.Graph:
    adjacency = {v: [w for w in g.adj[v] if w > v] for v in range(g.n)}
    if colors is None:
        return pynauty.Graph(g.n, adjacency_dict=adjacency)
    return pynauty.Graph(g.n, adjacency_dict=adjacency, vertex_coloring=_color_partition(colors))


def _color_partition(colors):
    classes: dict = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, set()).add(v)
    return [classes[c] for c in sorted(classes)]


def degree_colors(g: Graph) -> list[int]:
    return [len(a) for a in g.adj]


def canonical_form(g: Graph, colors=None, with_generators: bool = True):
    """Canonical labelling of ``g`` and generators of its (colour-preserving) automorphism group.

    Returns ``(CanonicalForm, gens)``; ``gens`` is ``None`` when
    ``with_generators`` is false.  ``colors`` maps each vertex to an orderable
    colour and must be isomorphism-invariant for certs to be comparable.
    """
    ng = _nauty_graph(g, colors)
    lab = pynauty.canon_label(ng)
    labeling = [0] * g.n
    for pos, v in enumerate(lab):
        labeling[v] = pos
    cert = encode_graph6(g.relabel(labeling))
    if colors is not None:
        cert += b"|" + ",".join(str(colors[v]) for v in lab).encode()
    gens = [list(p) for p in pynauty.autgrp(ng)[0]] if with_generators else None
    return CanonicalForm(tuple(labeling), cert), gens


def cert(g: Graph) -> bytes:
    """Isomorphism-class identifier: graph6 of the canonically relabelled graph."""
    return canonical_form(g, with_generators=False)[0].cert


def automorphism_generators(g: Graph) -> list[list[int]]:
    return [list(p) for p in pynauty.autgrp(_nauty_graph(g))[0]]


def group_order(g: Graph) -> int:
    _, size1, size2, _, _ = pynauty.autgrp(_nauty_graph(g))
    return round(size1 * 10**size2)


def pair_orbits(gens, pairs) -> list[int]:
    """Orbit id per pair, where an id is the index of the first pair of that orbit.

    Pairs are treated as unordered, so ``(u, v)`` and ``(v, u)`` coincide.
    Images falling outside the supplied list are ignored.
    """
    index = {}
    for i, (u, v) in enumerate(pairs):
        index.setdefault((u, v) if u < v else (v, u), i)
    uf = UnionFind(len(pairs))
    for i, (u, v) in enumerate(pairs):
        key = (u, v) if u < v else (v, u)
        if index[key] != i:
            uf.union(index[key], i)
    for gen in gens:
        for i, (u, v) in enumerate(pairs):
            a, b = gen[u], gen[v]
            j = index.get((a, b) if a < b else (b, a))
            if j is not None:
                uf.union(i, j)
    return [uf.find(i) for i in range(len(pairs))]


def edge_orbit_label(g: Graph, e: tuple[int, int], form: CanonicalForm | None = None, gens=None):
    """``(x8, x9)``: the largest canonical label ``(max, min)`` over the Aut-orbit of ``e``."""
    if form is None or gens is None:
        form, gens = canonical_form(g)
    edges = g.edges()
    orbit_ids = pair_orbits(gens, edges)
    key = e if e[0] < e[1] else (e[1], e[0])
    target = orbit_ids[edges.index(key)]
    lab = form.labeling
    best = None
    for (a, b), oid in zip(edges, orbit_ids):
        if oid == target:
            la, lb = lab[a], lab[b]
            label = (la, lb) if la > lb else (lb, la)
            if best is None or label > best:
                best = label
    return best


# -- exact reference engine for small graphs -------------------------------


def _extend_maps(g: Graph, h: Graph, first_only: bool):
    """Backtracking over adjacency-preserving bijections g -> h."""
    n = g.n
    if n != h.n or g.m != h.m:
        return
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return
    order = _bfs_order(g)
    mapping = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            yield list(mapping)
            return
        v = order[i]
        for w in range(n):
            if used[w] or len(h.adj[w]) != len(g.adj[v]):
                continue
            ok = True
            for x in g.adj[v]:
                if mapping[x] >= 0 and not h.has_edge(w, mapping[x]):
                    ok = False
                    break
            if ok:
                # non-edges must map to non-edges as well
                for j in range(i):
                    y = order[j]
                    if not g.has_edge(v, y) and h.has_edge(w, mapping[y]):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            yield from rec(i + 1)
            mapping[v] = -1
            used[w] = False

    yield from rec(0)


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    order = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def brute_automorphisms(g: Graph) -> list[list[int]]:
    """All automorphisms by exhaustive backtracking; meant for n <= 12."""
    return list(_extend_maps(g, g, False))


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    return next(_extend_maps(g, h, True), None) is not None


def brute_cert(g: Graph) -> bytes:
    """Minimum graph6 string over all n! relabellings.  Only for n <= 8."""
    return min(encode_graph6(g.relabel(list(p))) for p in permutations(range(g.n)))


def generated_group(gens, n: int) -> set[tuple[int, ...]]:
    """Closure of the generators under composition (small groups only)."""
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    gens = [tuple(x) for x in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[p[i]] for i in range(n))
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group
