"""Good and bad permutations, and non-hamiltonian CPGs built from bad blocks.

For a ``k``-permutation ``pi`` the graph ``G(pi)`` has cycles ``x_0..x_{k-1}``
(vertices ``0..k-1``) and ``y_0..y_{k-1}`` (vertices ``k..2k-1``) plus edges
``x_i y_pi(i)``.  ``G'(pi)`` drops the two closing edges ``x_{k-1} x_0`` and
``y_{k-1} y_0``.  With ``E = {x_0, x_{k-1}, y_0, y_{k-1}}`` a permutation is
good when ``G'(pi)`` has a hamiltonian path from some ``x_i`` to some ``y_j``
(``i, j`` in ``{0, k-1}``), or two disjoint paths covering every vertex, one
from ``x_i`` to ``y_j`` and one from ``x_{k-1-i}`` to ``y_{k-1-j}``.  Bad
otherwise.

If ``pi(k-1) = k-1`` then ``G(pi)`` is non-hamiltonian exactly when the
restriction of ``pi`` to ``0..k-2`` is bad, and suitable concatenations of bad
blocks with single fixed points stay bad.  That gives explicit
non-hamiltonian CPGs of many orders.
"""

from __future__ import annotations

from .graph import Graph, bits, popcount
from .props import is_hamiltonian
from .twofactor import TwoFactor

PI_P = (1, 3, 0, 2)
PI_1 = (0,)

# bad 10-permutation from the non-hamiltonian CPG of order 22; see seed_from_graph
PI_22 = (4, 9, 3, 8, 2, 7, 1, 6, 0, 5)


class UnsupportedOrder(ValueError):
    pass


def check_permutation(pi) -> tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(len(pi))):
        raise ValueError(f"not a permutation: {pi}")
    return pi


def build_Gprime(pi) -> Graph:
    pi = check_permutation(pi)
    k = len(pi)
    if k < 1:
        raise ValueError("empty permutation")
    g = Graph(2 * k)
    for i in range(k - 1):
        g.add_edge(i, i + 1)
        g.add_edge(k + i, k + i + 1)
    for i, x in enumerate(pi):
        g.add_edge(i, k + x)
    return g


def build_G(pi) -> Graph:
    pi = check_permutation(pi)
    k = len(pi)
    if k < 3:
        raise ValueError("G(pi) needs k >= 3")
    g = build_Gprime(pi)
    g.add_edge(k - 1, 0)
    g.add_edge(2 * k - 1, k)
    return g


def _paths(g: Graph, s: int, t: int, allowed: int, cover: bool):
    """Yield vertex masks of ``s``-``t`` paths inside ``allowed``.

    With ``cover`` only paths through every allowed vertex are produced.
    """
    nbits = g.nbits
    tbit = 1 << t
    if not (allowed >> s) & 1 or not allowed & tbit:
        return
    if s == t:
        if not cover or allowed == tbit:
            yield tbit
        return

    def dead(mask, cur):
        # some unvisited vertex can no longer be passed through
        free = allowed & ~mask
        for z in bits(free):
            avail = popcount(nbits[z] & (free | (1 << cur)))
            if z == t:
                if avail < 1:
                    return True
            elif avail < 2:
                return True
        return False

    stack = [(s, 1 << s)]
    while stack:
        cur, mask = stack.pop()
        for w in bits(nbits[cur] & allowed & ~mask):
            m2 = mask | (1 << w)
            if w == t:
                if not cover or m2 == allowed:
                    yield m2
                continue
            if cover and dead(m2, w):
                continue
            stack.append((w, m2))


def _has_ham_path(g: Graph, s: int, t: int, allowed: int) -> bool:
    return next(_paths(g, s, t, allowed, True), None) is not None


def is_good(pi) -> bool:
    pi = check_permutation(pi)
    k = len(pi)
    g = build_Gprime(pi)
    full = (1 << g.n) - 1
    ends = sorted({0, k - 1})
    for i in ends:
        for j in ends:
            if _has_ham_path(g, i, k + j, full):
                return True
    if k == 1:
        return False
    for i in ends:
        for j in ends:
            a, b = k - 1 - i, k + (k - 1 - j)
            for p1 in _paths(g, i, k + j, full & ~(1 << a) & ~(1 << b), False):
                if _has_ham_path(g, a, b, full & ~p1):
                    return True
    return False


def is_bad(pi) -> bool:
    return not is_good(pi)


def restrict(pi) -> tuple[int, ...]:
    pi = check_permutation(pi)
    if not pi or pi[-1] != len(pi) - 1:
        raise ValueError("restriction needs the last point fixed")
    return pi[:-1]


def extend_fixing_last(sigma) -> tuple[int, ...]:
    sigma = check_permutation(sigma)
    return sigma + (len(sigma),)


def concat(blocks) -> tuple[int, ...]:
    blocks = [check_permutation(b) for b in blocks]
    if not blocks:
        raise ValueError("nothing to concatenate")
    out = []
    offset = 0
    for b in blocks:
        out.extend(offset + x for x in b)
        offset += len(b)
    return tuple(out)


def concat_conditions(blocks, bad=None) -> bool:
    """Do the block sizes and badness satisfy the concatenation rule?

    ``bad`` maps a block to its badness (defaults to :func:`is_bad`).
    """
    bad = bad or is_bad
    sizes = [len(b) for b in blocks]
    if not sizes or sizes[0] == 1 or sizes[-1] == 1:
        return False
    if sum(1 for s in sizes if s == 1) % 2:
        return False
    for s, t in zip(sizes, sizes[1:]):
        if s == 1 and t == 1:
            return False
    return all(s == 1 or bad(b) for s, b in zip(sizes, blocks))


def plan_blocks(n: int, library=None) -> list[tuple[int, ...]]:
    """A block list meeting the concatenation rule whose extension has order ``n``.

    Uses as few seed blocks (anything but ``PI_P``) as possible, then as few
    single fixed points.  Raises :class:`UnsupportedOrder` when nothing fits.
    """
    if n % 2:
        raise UnsupportedOrder(f"order {n} is odd")
    library = library or [PI_P, PI_22]
    size = n // 2 - 1
    seeds = [b for b in library if b != PI_P]
    best = None
    for c_mask in range(1 << len(seeds)):
        chosen = [seeds[i] for i in range(len(seeds)) if (c_mask >> i) & 1]
        rest = size - sum(len(b) for b in chosen)
        if rest < 0:
            continue
        for ones in range(0, rest + 1, 2):
            if (rest - ones) % 4:
                continue
            a = (rest - ones) // 4
            bad_blocks = chosen + [PI_P] * a
            if len(bad_blocks) < ones + 1:
                continue
            cand = (len(chosen), ones, bad_blocks)
            if best is None or cand[:2] < best[:2]:
                best = cand
            break
    if best is None:
        raise UnsupportedOrder(f"order {n} is not reachable from the available bad blocks")
    _, ones, bad_blocks = best
    blocks = []
    for idx, b in enumerate(bad_blocks):
        blocks.append(b)
        if idx < ones:
            blocks.append(PI_1)
    return blocks


def construct_nonhamiltonian(n: int) -> Graph:
    """A non-hamiltonian cycle permutation graph of order ``n``, checked before return."""
    blocks = plan_blocks(n)
    if not concat_conditions(blocks):
        raise RuntimeError(f"block plan for order {n} fails the concatenation rule")
    g = build_G(extend_fixing_last(concat(blocks)))
    if is_hamiltonian(g):
        raise RuntimeError(f"constructed graph of order {n} is hamiltonian")
    return g


def permutation_of(g: Graph, factor: TwoFactor, last: int) -> tuple[int, ...]:
    """Read ``g`` as ``G(pi)`` along ``factor`` with vertex ``last`` as ``x_{k-1}`` and ``pi(k-1) = k-1``."""
    c1, c2 = factor.orders(g)
    if not (factor.c1 >> last) & 1:
        c1, c2 = c2, c1
    k = len(c1)
    r = c1.index(last)
    xs = c1[r + 1:] + c1[: r + 1]
    side2 = factor.c2 if (factor.c1 >> last) & 1 else factor.c1
    partner = next(w for w in g.adj[last] if (side2 >> w) & 1)
    r2 = c2.index(partner)
    ys = c2[r2 + 1:] + c2[: r2 + 1]
    ypos = {y: j for j, y in enumerate(ys)}
    pi = []
    for x in xs:
        y = next(w for w in g.adj[x] if (side2 >> w) & 1)
        pi.append(ypos[y])
    assert pi[k - 1] == k - 1
    return tuple(pi)


def seed_from_graph(g: Graph, factor: TwoFactor) -> tuple[int, ...]:
    """Bad ``(k-1)``-permutation read off a non-hamiltonian CPG."""
    last = (factor.c1 & -factor.c1).bit_length() - 1
    return restrict(permutation_of(g, factor, last))
