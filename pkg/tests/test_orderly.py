from collections import defaultdict

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpgen import canon
from cpgen.ccpm import Constraints, Split, generate
from cpgen.filter import permutation_two_factors
from cpgen.graph import petersen
from cpgen.orderly import (
    OrderlyGenerator,
    apply_p1,
    apply_p2,
    apply_p3,
    apply_p4,
    family,
    generate_orderly,
    is_canonical,
    is_restricted,
    lookahead_allows,
    permutation_graph,
)
from cpgen.props import is_hamiltonian


@st.composite
def partial_perms(draw, min_k=3, max_k=10):
    k = draw(st.integers(min_k, max_k))
    l = draw(st.integers(1, k))
    rest = draw(st.permutations(range(1, k)))
    return (0,) + tuple(rest[: l - 1]), k


def certs(pairs):
    return {canon.cert(g) for g, _ in pairs}


def test_op_examples():
    assert apply_p1((0, 2, 4), 5) == (0, 3, 1)
    assert apply_p2((0, 2, 4), 5) == (0, 3, 1)
    assert apply_p4((0, 2, 4, 1, 3), 5) == (0, 2, 4, 1, 3)
    assert apply_p3((0, 2, 1), 5) == (0, 2, 1)
    assert apply_p3((0, 2, 3, 1), 6) == (0, 3, 1, 2)


def test_op_contracts():
    with pytest.raises(ValueError):
        apply_p3((0, 4), 5)
    with pytest.raises(ValueError):
        apply_p4((0, 1, 2), 5)
    assert is_restricted((0, 2, 1)) and not is_restricted((0, 3))


def test_canonical_examples():
    assert is_canonical(tuple(range(7)), 7)
    assert family((0, 2, 4, 1, 3), 5) == {(0, 2, 4, 1, 3), (0, 3, 1, 4, 2)}
    assert is_canonical((0, 2, 4, 1, 3), 5)
    assert not is_canonical((0, 3, 1, 4, 2), 5)
    assert permutation_graph((0, 2, 4, 1, 3), 5) == permutation_graph((0, 2, 4, 1, 3), 5)
    assert canon.cert(permutation_graph((0, 2, 4, 1, 3), 5)) == canon.cert(petersen())


@settings(max_examples=300, deadline=None)
@given(partial_perms())
def test_ops_preserve_isomorphism(pk):
    p, k = pk
    base = canon.cert(permutation_graph(p, k))
    images = [apply_p1(p, k), apply_p2(p, k)]
    if is_restricted(p):
        images.append(apply_p3(p, k))
    if len(p) == k:
        images.append(apply_p4(p, k))
    for q in images:
        assert q[0] == 0 and sorted(q) == sorted(set(q)) and len(q) == len(p)
        assert canon.cert(permutation_graph(q, k)) == base


@settings(max_examples=200, deadline=None)
@given(partial_perms())
def test_canonical_is_family_minimum(pk):
    p, k = pk
    fam = family(p, k)
    assert len(fam) <= 8 * k
    assert is_canonical(p, k) == (p == min(fam))


def test_k3_emits_prism_once():
    out = generate_orderly(6)
    assert [p for _, p in out] == [(0, 1, 2)]


@pytest.mark.parametrize("n, raw, classes", [(10, 4, 4), (12, 10, 10), (16, 127, 123)])
def test_raw_and_dedup_counts(n, raw, classes):
    out = generate_orderly(n)
    assert len(out) == raw
    assert len(certs(out)) == classes


def test_emitted_permutations_are_canonical():
    for _, p in generate_orderly(16):
        assert is_canonical(p, 8)


@pytest.mark.parametrize("n, c", [
    (14, Constraints()),
    (16, Constraints()),
    (16, Constraints(girth=5)),
    (18, Constraints(nonhamiltonian=True)),
    (20, Constraints(girth=6)),
])
def test_backends_agree(n, c):
    a = OrderlyGenerator(n, c, backend="python")
    b = OrderlyGenerator(n, c, backend="jit")
    pa, pb = [], []
    a.run(lambda g, p: pa.append(p))
    b.run(lambda g, p: pb.append(p))
    assert pa == pb
    assert a.stats["nodes"] == b.stats["nodes"]
    assert a.stats["lookahead_rejects"] == b.stats["lookahead_rejects"]


@pytest.mark.parametrize("backend", ["python", "jit"])
def test_backends_agree_on_split(backend):
    whole = [p for _, p in generate_orderly(16, backend=backend)]
    parts = []
    for res in range(3):
        parts.extend(p for _, p in generate_orderly(16, split=Split(res, 3), backend=backend))
    assert sorted(parts) == sorted(whole)


def test_unknown_backend():
    with pytest.raises(ValueError):
        OrderlyGenerator(10, backend="gpu")


def test_matches_ccpm_up_to_16():
    for n in (8, 10, 12, 14, 16):
        assert certs(generate_orderly(n)) == {canon.cert(g) for g in generate(n)}


def test_duplicates_come_from_distinct_factors():
    groups = defaultdict(list)
    for g, p in generate_orderly(18):
        groups[canon.cert(g)].append(g)
    multi = [gs for gs in groups.values() if len(gs) > 1]
    assert sum(len(gs) - 1 for gs in multi) == 686 - 667
    for gs in multi:
        assert len(permutation_two_factors(gs[0])) >= len(gs)


def test_two_spoke_lookahead_example():
    # v0 w0 and v1 w1 with both cycle arcs form a hamiltonian cycle
    assert not lookahead_allows((0, 1), 5)
    assert is_hamiltonian(permutation_graph((0, 1), 5))
    assert lookahead_allows((0, 2), 5)


@settings(max_examples=2000, deadline=None)
@given(partial_perms(min_k=4, max_k=11))
def test_lookahead_rejections_are_hamiltonian(pk):
    p, k = pk
    if not lookahead_allows(p, k):
        # the partial graph already has a hamiltonian cycle, so every completion does
        assert is_hamiltonian(permutation_graph(p, k))


def test_lookahead_catches_four_and_six_spoke_cycles(rng):
    # the 4/6 spoke patterns must fire on something the 2-spoke rule misses
    seen = {4: 0, 6: 0}
    for _ in range(3000):
        k = rng.randint(6, 11)
        l = rng.randint(3, k)
        p = (0,) + tuple(rng.sample(range(1, k), l - 1))
        two = lookahead_allows(p, k, max_spokes=2)
        four = lookahead_allows(p, k, max_spokes=4)
        six = lookahead_allows(p, k, max_spokes=6)
        assert two >= four >= six
        if two and not four:
            seen[4] += 1
        if four and not six:
            seen[6] += 1
        if not six:
            assert is_hamiltonian(permutation_graph(p, k))
    assert seen[4] > 0 and seen[6] > 0


@pytest.mark.parametrize("n", [10, 12, 14, 18])
def test_lookahead_on_off_same_output(n):
    c = Constraints(nonhamiltonian=True)
    on = generate_orderly(n, c, lookaheads=True, backend="python")
    off = generate_orderly(n, c, lookaheads=False, backend="python")
    assert [p for _, p in on] == [p for _, p in off]


def test_nonhamiltonian_ten():
    out = generate_orderly(10, Constraints(nonhamiltonian=True))
    assert certs(out) == {canon.cert(petersen())}
