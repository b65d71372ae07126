import itertools

import pytest

from cpgen import canon
from cpgen.ccpm import generate
from cpgen.graph import complete_graph, cycle_graph, k33, petersen, prism

from conftest import random_cubic, random_subcubic


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_cert_invariant_under_relabelling(rng):
    for n in (8, 10, 12, 16):
        for _ in range(10):
            g = random_cubic(rng, n)
            assert canon.cert(g) == canon.cert(shuffled(g, rng))


def test_cert_separates_noniso():
    certs = {canon.cert(g) for g in generate(14)}
    assert len(certs) == 28


def test_cert_agrees_with_brute_force(rng):
    graphs = [random_subcubic(rng, rng.randint(4, 7), tries=12) for _ in range(40)]
    for g, h in itertools.combinations(graphs, 2):
        if g.n != h.n:
            continue
        assert (canon.cert(g) == canon.cert(h)) == (canon.brute_cert(g) == canon.brute_cert(h))
        assert (canon.cert(g) == canon.cert(h)) == canon.brute_isomorphic(g, h)


def test_group_orders():
    assert canon.group_order(petersen()) == 120
    assert canon.group_order(prism()) == 12
    assert canon.group_order(k33()) == 72
    assert canon.group_order(complete_graph(4)) == 24


def test_generators_match_brute_force_group(rng):
    for g in [petersen(), prism(), cycle_graph(7)] + [random_subcubic(rng, 8) for _ in range(8)]:
        gens = canon.automorphism_generators(g)
        group = canon.generated_group(gens, g.n)
        brute = {tuple(a) for a in canon.brute_automorphisms(g)}
        assert group == brute


def test_canonical_labeling_is_bijection_and_relabels_to_cert(rng):
    g = random_cubic(rng, 12)
    form, gens = canon.canonical_form(g)
    assert sorted(form.labeling) == list(range(12))
    assert form.cert == canon.cert(shuffled(g, rng))
    for gen in gens:
        assert g.relabel(gen) == g


def test_colours_restrict_symmetry():
    g = cycle_graph(6)
    colours = [1, 0, 0, 0, 0, 0]
    _, gens = canon.canonical_form(g, colours)
    group = canon.generated_group(gens, 6)
    assert len(group) == 2
    assert all(a[0] == 0 for a in group)


def test_pair_orbits_petersen_edges():
    g = petersen()
    edges = g.edges()
    ids = canon.pair_orbits(canon.automorphism_generators(g), edges)
    assert set(ids) == {0}


def test_pair_orbits_unordered_and_first_index():
    gens = [[1, 0, 2, 3]]
    ids = canon.pair_orbits(gens, [(2, 3), (0, 2), (3, 2), (1, 2)])
    assert ids == [0, 1, 0, 1]


def test_pair_orbits_prism_spokes_vs_triangle_edges():
    g = prism()
    edges = g.edges()
    ids = canon.pair_orbits(canon.automorphism_generators(g), edges)
    spokes = {i for i, (a, b) in enumerate(edges) if abs(a - b) == 3}
    assert len({ids[i] for i in spokes}) == 1
    assert len({ids[i] for i in range(len(edges)) if i not in spokes}) == 1
    assert len(set(ids)) == 2


def test_edge_orbit_label_invariant(rng):
    g = random_cubic(rng, 12)
    perm = list(range(12))
    rng.shuffle(perm)
    h = g.relabel(perm)
    for a, b in g.edges():
        assert canon.edge_orbit_label(g, (a, b)) == canon.edge_orbit_label(h, (perm[a], perm[b]))


