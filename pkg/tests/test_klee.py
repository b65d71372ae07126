import itertools

import pytest

from cpgen import canon
from cpgen.ccpm import Constraints, generate
from cpgen.filter import has_permutation_two_factor, permutation_two_factors
from cpgen.graph import petersen, prism
from cpgen.klee import (
    PI_1,
    PI_22,
    PI_P,
    UnsupportedOrder,
    build_G,
    build_Gprime,
    concat,
    concat_conditions,
    construct_nonhamiltonian,
    extend_fixing_last,
    is_bad,
    plan_blocks,
    restrict,
    seed_from_graph,
)
from cpgen.props import is_hamiltonian


def test_build_examples():
    assert canon.cert(build_G((0, 1, 2))) == canon.cert(prism())
    assert canon.cert(build_G((1, 3, 0, 2, 4))) == canon.cert(petersen())
    assert build_Gprime((0, 1, 2)).m == 7
    with pytest.raises(ValueError):
        build_G((1, 0))
    with pytest.raises(ValueError):
        build_Gprime((0, 0, 1))


def test_badness_examples():
    assert not is_bad(PI_1)
    assert is_bad(PI_P)
    assert not is_bad((0, 1, 2))


def test_restrict_and_extend():
    assert restrict((1, 3, 0, 2, 4)) == (1, 3, 0, 2)
    assert extend_fixing_last((1, 3, 0, 2)) == (1, 3, 0, 2, 4)
    with pytest.raises(ValueError):
        restrict((1, 0))


def test_restrict_round_trip(rng):
    for _ in range(50):
        s = list(range(rng.randint(1, 9)))
        rng.shuffle(s)
        assert restrict(extend_fixing_last(s)) == tuple(s)


def test_concat_examples():
    assert concat([(0,), (0, 1)]) == (0, 1, 2)
    assert concat([PI_P, PI_P]) == (1, 3, 0, 2, 5, 7, 4, 6)
    assert concat([PI_P]) == PI_P
    with pytest.raises(ValueError):
        concat([])


@pytest.mark.parametrize("size", [2, 3, 4, 5])
def test_fixed_last_point_equivalence_exhaustive(size):
    for s in itertools.permutations(range(size)):
        assert is_bad(s) == (not is_hamiltonian(build_G(extend_fixing_last(s))))


def test_concat_of_bad_blocks_is_bad(rng):
    # random block lists of total size <= 10 drawn from small permutations
    pool = [p for size in (1, 2, 3, 4) for p in itertools.permutations(range(size))]
    tried = 0
    for _ in range(400):
        blocks = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        if sum(len(b) for b in blocks) > 10 or not concat_conditions(blocks):
            continue
        tried += 1
        assert is_bad(concat(blocks))
    assert tried > 5


def test_concat_conditions_reject():
    assert not concat_conditions([PI_1, PI_P])
    assert not concat_conditions([PI_P, PI_1, PI_1, PI_P])
    assert not concat_conditions([PI_P, PI_1, PI_P])
    assert concat_conditions([PI_P, PI_1, PI_P, PI_1, PI_P])
    assert not concat_conditions([PI_P, (0, 1, 2)])


def test_seed_re_derived_from_order_22():
    (g,) = generate(22, Constraints(nonhamiltonian=True))
    factors = permutation_two_factors(g)
    assert len(factors) == 1
    assert seed_from_graph(g, factors[0]) == PI_22
    assert is_bad(PI_22)
    assert canon.cert(build_G(extend_fixing_last(PI_22))) == canon.cert(g)


@pytest.mark.parametrize("n, sizes", [
    (18, [4, 4]), (22, [10]), (26, [4, 4, 4]), (30, [4, 1, 4, 1, 4]), (34, [4, 4, 4, 4]),
])
def test_plan_blocks(n, sizes):
    assert [len(b) for b in plan_blocks(n)] == sizes


@pytest.mark.parametrize("n", [14, 20, 24, 36, 17])
def test_unsupported_orders(n):
    with pytest.raises(UnsupportedOrder):
        construct_nonhamiltonian(n)


@pytest.mark.parametrize("n", [18, 22, 26, 30])
def test_construct(n):
    g = construct_nonhamiltonian(n)
    assert g.n == n and g.is_cubic()
    assert has_permutation_two_factor(g)
    assert not is_hamiltonian(g)


def test_construct_eighteen_is_in_census():
    nonham = {canon.cert(g) for g in generate(18, Constraints(nonhamiltonian=True))}
    assert canon.cert(construct_nonhamiltonian(18)) in nonham
