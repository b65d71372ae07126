"""Compiled depth-first search for the orderly generator.

Same search tree, same order, same tests as ``OrderlyGenerator._expand``,
written over flat integer arrays so numba can compile it.  It returns the
surviving full permutations; the final hamiltonicity check stays in Python
since it only runs on a handful of leaves.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U1 = np.uint64(1)


@njit(cache=True)
def _ball(nb, a, r, n):
    seen = U1 << np.uint64(a)
    frontier = seen
    for _ in range(r):
        nxt = np.uint64(0)
        for v in range(n):
            if (frontier >> np.uint64(v)) & U1:
                nxt |= nb[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


@njit(cache=True)
def _add_edge(nb, a, b):
    nb[a] |= U1 << np.uint64(b)
    nb[b] |= U1 << np.uint64(a)


@njit(cache=True)
def _remove_edge(nb, a, b):
    nb[a] &= ~(U1 << np.uint64(b))
    nb[b] &= ~(U1 << np.uint64(a))


@njit(cache=True)
def _less(r, p, L):
    for i in range(L):
        if r[i] != p[i]:
            return r[i] < p[i]
    return False


@njit(cache=True)
def _is_canonical(p, L, k, fam, r, inv, q):
    """Lexicographic minimality of ``p[:L]`` over its family; the other arrays are scratch space."""
    fam[0, :L] = p[:L]
    count = 1
    head = 0
    while head < count:
        q[:L] = fam[head, :L]
        head += 1
        restricted = True
        for i in range(L):
            if q[i] >= L:
                restricted = False
                break
        for op in range(4):
            if op == 0:
                for i in range(L):
                    r[i] = (k - q[i]) % k
            elif op == 1:
                c = q[L - 1]
                for i in range(L):
                    r[i] = (q[L - 1 - i] - c) % k
            elif op == 2:
                if not restricted:
                    continue
                for i in range(L):
                    inv[q[i]] = i
                for i in range(L):
                    r[i] = inv[i]
            else:
                if L != k:
                    continue
                c = q[k - 1]
                for i in range(k):
                    r[i] = (q[(i - 1) % k] - c) % k
            if _less(r, p, L):
                return False
            known = False
            for j in range(count):
                same = True
                for i in range(L):
                    if fam[j, i] != r[i]:
                        same = False
                        break
                if same:
                    known = True
                    break
            if not known:
                if count == fam.shape[0]:
                    # out of scratch rows; callers size fam generously so this stays rare
                    bigger = np.empty((2 * count, k), np.int64)
                    bigger[:count] = fam[:count]
                    fam = bigger
                fam[count, :L] = r[:L]
                count += 1
    return True


@njit(cache=True)
def _arcs(vals, t2, c1_rule, out, order):
    # insertion sort of the chain indices by value (at most six of them)
    for r in range(t2):
        j = r
        while j > 0 and vals[order[j - 1]] > vals[r]:
            order[j] = order[j - 1]
            j -= 1
        order[j] = r
    for r in range(t2):
        j = order[r]
        left = order[(r - 1) % t2]
        right = order[(r + 1) % t2]
        if c1_rule:
            mate = (j + 1) % t2 if j & 1 else (j - 1) % t2
        else:
            mate = j ^ 1
        out[j] = right if mate == left else left


@njit(cache=True)
def _spans(chain, t2, p, work):
    v1 = work[0]
    v2 = work[1]
    a1 = work[2]
    a2 = work[3]
    order = work[4]
    for j in range(t2):
        v1[j] = chain[j]
        v2[j] = p[chain[j]]
    _arcs(v1, t2, True, a1, order)
    _arcs(v2, t2, False, a2, order)
    j = 0
    steps = 0
    while True:
        j = a2[a1[j]]
        steps += 2
        if j == 0:
            return steps == t2
        if steps >= t2:
            return False


@njit(cache=True)
def _c1(i, L, k, out):
    m = 0
    a = (i - 1) % k
    b = (i + 1) % k
    if a < L and a != i:
        out[m] = a
        m += 1
    if b < L and b != i and b != a:
        out[m] = b
        m += 1
    return m


@njit(cache=True)
def _c2(i, p, inv, k, out):
    m = 0
    a = inv[(p[i] - 1) % k]
    b = inv[(p[i] + 1) % k]
    if a >= 0 and a != i:
        out[m] = a
        m += 1
    if b >= 0 and b != i and b != a:
        out[m] = b
        m += 1
    return m


@njit(cache=True)
def _allows(p, inv, L, k, nbuf, chain, work):
    """Lookahead for the spoke at position ``L-1`` (already written into ``p``/``inv``)."""
    if k < 3 or L < 2:
        return True
    s0 = L - 1
    close = nbuf[0]
    nclose = _c1(s0, L, k, close)
    b1 = nbuf[1]
    b2 = nbuf[2]
    b3 = nbuf[3]
    b4 = nbuf[4]
    b5 = nbuf[5]
    chain[0] = s0
    n1 = _c2(s0, p, inv, k, b1)
    for i1 in range(n1):
        s1 = b1[i1]
        for c in range(nclose):
            if close[c] == s1:
                return False
        chain[1] = s1
        n2 = _c1(s1, L, k, b2)
        for i2 in range(n2):
            s2 = b2[i2]
            if s2 == s0:
                continue
            chain[2] = s2
            n3 = _c2(s2, p, inv, k, b3)
            for i3 in range(n3):
                s3 = b3[i3]
                if s3 == s0 or s3 == s1:
                    continue
                chain[3] = s3
                for c in range(nclose):
                    if close[c] == s3 and _spans(chain, 4, p, work):
                        return False
                n4 = _c1(s3, L, k, b4)
                for i4 in range(n4):
                    s4 = b4[i4]
                    if s4 == s0 or s4 == s1 or s4 == s2:
                        continue
                    chain[4] = s4
                    n5 = _c2(s4, p, inv, k, b5)
                    for i5 in range(n5):
                        s5 = b5[i5]
                        if s5 == s1 or s5 == s2 or s5 == s3 or s5 == s0:
                            continue
                        chain[5] = s5
                        for c in range(nclose):
                            if close[c] == s5 and _spans(chain, 6, p, work):
                                return False
    return True


@njit(cache=True)
def search(k, girth, look, res, mod, split_depth):
    """Returns ``(leaves, nodes, lookahead_rejects)``; ``leaves`` has one row per emitted permutation."""
    n = 2 * k
    nb = np.zeros(n, np.uint64)
    for i in range(k):
        _add_edge(nb, i, (i + 1) % k)
        _add_edge(nb, k + i, k + (i + 1) % k)
    _add_edge(nb, 0, k)
    p = np.zeros(k, np.int64)
    inv = np.full(k, -1, np.int64)
    inv[0] = 0
    nxt = np.zeros(k + 1, np.int64)
    near = np.zeros(k + 1, np.uint64)
    fam = np.empty((8 * k + 8, k), np.int64)
    r_buf = np.empty(k, np.int64)
    inv_buf = np.empty(k, np.int64)
    q_buf = np.empty(k, np.int64)
    nbuf = np.empty((6, 2), np.int64)
    chain = np.empty(6, np.int64)
    work = np.empty((5, 6), np.int64)
    leaves = np.empty((64, k), np.int64)
    nleaves = 0
    nodes = 0
    rejects = 0
    counter = 0
    l = 1
    entering = True
    while True:
        if entering:
            entering = False
            nodes += 1
            skip = False
            if l == split_depth and mod > 1:
                c = counter
                counter += 1
                if c % mod != res:
                    skip = True
            if not skip and l == k:
                if nleaves == leaves.shape[0]:
                    bigger = np.empty((2 * nleaves, k), np.int64)
                    bigger[:nleaves] = leaves
                    leaves = bigger
                leaves[nleaves] = p
                nleaves += 1
                skip = True
            if skip:
                if l == 1:
                    break
                l -= 1
                _remove_edge(nb, l, k + p[l])
                inv[p[l]] = -1
                continue
            near[l] = _ball(nb, l, girth - 2, n) if girth > 0 else np.uint64(0)
            nxt[l] = 0
        found = False
        x = nxt[l]
        while x < k:
            if inv[x] < 0 and not ((near[l] >> np.uint64(k + x)) & U1):
                p[l] = x
                inv[x] = l
                ok = True
                if look and not _allows(p, inv, l + 1, k, nbuf, chain, work):
                    rejects += 1
                    ok = False
                if ok and not _is_canonical(p, l + 1, k, fam, r_buf, inv_buf, q_buf):
                    ok = False
                if ok:
                    found = True
                    break
                inv[x] = -1
            x += 1
        if found:
            nxt[l] = x + 1
            _add_edge(nb, l, k + x)
            l += 1
            entering = True
        else:
            if l == 1:
                break
            l -= 1
            _remove_edge(nb, l, k + p[l])
            inv[p[l]] = -1
    return leaves[:nleaves].copy(), nodes, rejects
