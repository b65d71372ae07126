"""Reference generator: breadth-first closure with per-level dedup by certificate.

Slow and memory hungry on purpose.  It shares the eligibility rules with the
fast generator but none of the canonicity machinery, so disagreements point
at the latter.
"""

from __future__ import annotations

from . import canon
from .ccpm import Constraints, initial_graph
from .graph import Graph, distance_at_most
from .props import is_hamiltonian
from .twofactor import eligible_pairs, update_after_add

MAX_ORDER = 18


class OracleTooLarge(ValueError):
    pass


def generate_by_lists(n: int, constraints: Constraints | None = None, max_order: int = MAX_ORDER) -> dict[bytes, Graph]:
    """All CPGs of order ``n`` meeting ``constraints``, keyed by certificate."""
    if n > max_order:
        raise OracleTooLarge(f"order {n} exceeds the oracle limit {max_order}")
    constraints = constraints or Constraints()
    g0, factors0 = initial_graph(n)
    girth = constraints.effective_girth(n)
    if girth and n // 2 < girth:
        return {}
    level = {canon.cert(g0): (g0, factors0)}
    full = (1 << n) - 1
    for _ in range(n // 2 - 1):
        nxt = {}
        for g, factors in level.values():
            for u, v in eligible_pairs(g, factors):
                if girth and distance_at_most(g, u, v, girth - 2):
                    continue
                h = g.copy()
                h.add_edge(u, v)
                if constraints.nonhamiltonian and is_hamiltonian(h):
                    continue
                c = canon.cert(h)
                if c in nxt:
                    continue
                nxt[c] = (h, update_after_add(factors, h, u, v))
        level = nxt
    return {c: g for c, (g, _) in level.items() if g.deg3 == full}
