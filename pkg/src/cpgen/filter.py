"""Independent cycle-permutation-graph test via perfect matchings.

A cubic graph is a CPG iff some perfect matching leaves two chordless
cycles behind.  Nothing here relies on how the generators work, which is the
point: it checks their output from the outside.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph, Graph6Error, bits, decode_graph6, girth, popcount
from .props import cyclic_edge_connectivity_at_least, is_hamiltonian, is_three_edge_colorable
from .twofactor import TwoFactor


def perfect_matchings(g: Graph):
    """Yield every perfect matching of ``g`` once, as a sorted list of edges."""
    n = g.n
    if n % 2:
        return
    matched = [False] * n
    chosen: list[tuple[int, int]] = []

    def rec(start):
        v = start
        while v < n and matched[v]:
            v += 1
        if v == n:
            yield sorted(chosen)
            return
        matched[v] = True
        for w in g.adj[v]:
            if matched[w]:
                continue
            matched[w] = True
            chosen.append((v, w) if v < w else (w, v))
            yield from rec(v + 1)
            chosen.pop()
            matched[w] = False
        matched[v] = False

    yield from rec(0)


def _complement_factor(g: Graph, matching) -> TwoFactor | None:
    """The permutation 2-factor left by ``matching``, if its complement is one."""
    n = g.n
    k = n // 2
    if k < 3:
        return None
    mate = [0] * n
    for a, b in matching:
        mate[a], mate[b] = b, a
    # walk the cycle through vertex 0 in G minus the matching
    side = 1
    prev, cur = -1, 0
    length = 1
    while True:
        nxt = [w for w in g.adj[cur] if w != mate[cur] and w != prev]
        if not nxt:
            return None
        prev, cur = cur, nxt[0]
        if cur == 0:
            break
        side |= 1 << cur
        length += 1
        if length > k:
            return None
    if length != k:
        return None
    other = ((1 << n) - 1) ^ side
    nbits = g.nbits
    for part in (side, other):
        for x in bits(part):
            # chordless: exactly two neighbours inside its own cycle
            if popcount(nbits[x] & part) != 2:
                return None
    if _cycle_length(g, other) != k:
        return None
    return TwoFactor(side, other)


def _cycle_length(g: Graph, part: int) -> int:
    start = (part & -part).bit_length() - 1
    prev, cur = -1, start
    length = 0
    while True:
        nxt = [w for w in g.adj[cur] if (part >> w) & 1 and w != prev]
        length += 1
        prev, cur = cur, nxt[0]
        if cur == start:
            return length


def permutation_two_factors(g: Graph) -> list[TwoFactor]:
    """All permutation 2-factors of the cubic graph ``g``."""
    if not g.is_cubic():
        return []
    out = []
    for m in perfect_matchings(g):
        f = _complement_factor(g, m)
        if f is not None:
            out.append(f)
    return out


def has_permutation_two_factor(g: Graph) -> bool:
    if not g.is_cubic():
        return False
    for m in perfect_matchings(g):
        if _complement_factor(g, m) is not None:
            return True
    return False


@dataclass
class AuditRecord:
    line: int
    order: int
    is_cpg: bool
    factors: int | None = None
    girth: float | None = None
    hamiltonian: bool | None = None
    colorable: bool | None = None
    lambda_c_ge_5: bool | None = None

    def row(self) -> str:
        def fmt(x):
            if x is None:
                return "-"
            if isinstance(x, bool):
                return "1" if x else "0"
            if x == float("inf"):
                return "inf"
            return str(x)

        vals = (self.line, self.order, self.is_cpg, self.factors, self.girth,
                self.hamiltonian, self.colorable, self.lambda_c_ge_5)
        return "\t".join(fmt(v) for v in vals)

    def key(self) -> str:
        """Property combination used to aggregate counts."""
        parts = ["cpg" if self.is_cpg else "not-cpg"]
        if self.girth is not None:
            parts.append(f"g={fmt_girth(self.girth)}")
        if self.hamiltonian is not None:
            parts.append("ham" if self.hamiltonian else "nonham")
        if self.colorable is not None:
            parts.append("col" if self.colorable else "snark")
        if self.lambda_c_ge_5 is not None:
            parts.append("lc>=5" if self.lambda_c_ge_5 else "lc<5")
        return ",".join(parts)


RECORD_HEADER = "line\torder\tcpg\tfactors\tgirth\thamiltonian\tcolorable\tlc_ge_5"


def fmt_girth(g) -> str:
    return "inf" if g == float("inf") else str(int(g))


def audit_graph(g: Graph, line: int = 0, classify: bool = False, enumerate_factors: bool = False) -> AuditRecord:
    if enumerate_factors:
        factors = permutation_two_factors(g)
        rec = AuditRecord(line, g.n, bool(factors), factors=len(factors))
    else:
        rec = AuditRecord(line, g.n, has_permutation_two_factor(g))
    if classify and g.is_cubic():
        rec.girth = girth(g)
        rec.hamiltonian = is_hamiltonian(g)
        rec.colorable = is_three_edge_colorable(g)
        rec.lambda_c_ge_5 = cyclic_edge_connectivity_at_least(g, 5)
    return rec


@dataclass
class AuditReport:
    records: list[AuditRecord]
    errors: list[tuple[int, str]]

    def counts(self) -> Counter:
        return Counter((r.order, r.key()) for r in self.records)

    def count_lines(self) -> list[str]:
        return [f"{order}\t{key}\t{c}" for (order, key), c in sorted(self.counts().items())]


def audit_stream(lines, classify: bool = False, enumerate_factors: bool = False, on_record=None) -> AuditReport:
    """Audit graph6 lines; malformed ones are collected in ``errors`` and skipped."""
    records = []
    errors = []
    for i, raw in enumerate(lines, 1):
        if isinstance(raw, str):
            raw = raw.encode()
        text = raw.strip()
        if not text:
            continue
        try:
            g = decode_graph6(text)
        except Graph6Error as exc:
            errors.append((i, str(exc)))
            continue
        rec = audit_graph(g, i, classify, enumerate_factors)
        records.append(rec)
        if on_record is not None:
            on_record(rec)
    return AuditReport(records, errors)
