import itertools

import numpy as np
import pytest

from conftest import merged_system, sec5_system, with_mode1_inputs
from structswitch import (
    Pattern,
    PlacementSolution,
    SwitchedSystem,
    accessible_set,
    brute_force_min_dedicated,
    build_state_digraph,
    check_structural_controllability,
    concat,
    dedicated_b,
    dedicated_placement,
    distribute,
    generic_rank,
    minimal_b,
    non_dedicated_b,
)
from structswitch.generators import random_system


def _passes(system, inputs):
    return check_structural_controllability(system.with_inputs(list(inputs))).overall


def _random_systems(count, seed, n_range=(3, 6), m_range=(1, 3)):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        m = int(rng.integers(m_range[0], m_range[1] + 1))
        yield random_system(n, m, rng.uniform(0.1, 0.4), rng)


def test_sec5_dedicated_sets():
    sol = dedicated_placement(sec5_system())
    assert sol.j_prime == {2} and sol.j_dprime == set() and sol.j_tprime == {4}
    assert sol.cardinality == 2
    assert sol.scc_cover == {2: 2, 4: 4}


def test_merged_single_mode_needs_one_more():
    sol = dedicated_placement(merged_system())
    assert (sol.j_prime, sol.j_dprime, sol.j_tprime) == ({2}, {3}, {4})
    assert sol.cardinality == 3


def test_one_state_zero_dynamics():
    sol = dedicated_placement(SwitchedSystem(1, (Pattern.zeros(1),)))
    assert (sol.j_prime, sol.j_dprime, sol.j_tprime) == ({1}, set(), set())


def test_decoupled_self_loops():
    system = SwitchedSystem(2, (Pattern.identity(2),))
    sol = dedicated_placement(system)
    assert sol.states == {1, 2}
    assert brute_force_min_dedicated(system)[0] == 2


def test_dedicated_b():
    sol = dedicated_placement(sec5_system())
    b = dedicated_b(sol)
    assert b[0].nonzeros == ((2, 2), (4, 4))
    assert b[1].nnz == b[2].nnz == 0
    assert b.total_nonzeros == 2
    assert _passes(sec5_system(), b)
    one = PlacementSolution(1, 1, frozenset({1}), frozenset(), frozenset(), {})
    assert dedicated_b(one, 1)[0].nonzeros == ((1, 1),)


def test_dedicated_b_rejects_empty_set():
    empty = PlacementSolution(1, 1, frozenset(), frozenset(), frozenset(), {})
    with pytest.raises(ValueError):
        dedicated_b(empty)


def test_non_dedicated_shared_input():
    system = sec5_system()
    sol = dedicated_placement(system)
    b = non_dedicated_b(sol, {4: 2})
    assert b.nonzeros == ((2, 2), (4, 2))
    assert b.nnz == sol.cardinality
    assert check_structural_controllability(with_mode1_inputs(system, b)).overall
    assert non_dedicated_b(sol, {4: 4}) == dedicated_b(sol)[0]


def test_non_dedicated_argument_errors():
    sol = dedicated_placement(sec5_system())
    with pytest.raises(ValueError):
        non_dedicated_b(sol, {})
    with pytest.raises(ValueError):
        non_dedicated_b(sol, {4: 2, 3: 1})
    with pytest.raises(ValueError):
        non_dedicated_b(sol, {4: 9})


def test_minimal_b():
    system = sec5_system()
    sol = dedicated_placement(system)
    assert minimal_b(sol).nonzeros == ((2, 2), (4, 2))

    merged = merged_system()
    msol = dedicated_placement(merged)
    mb = minimal_b(msol)
    assert mb.nonzeros == ((2, 2), (3, 3), (4, 2))
    assert check_structural_controllability(merged.with_inputs([mb])).overall
    # column 3 is an equally valid target
    alt = non_dedicated_b(msol, {4: 3})
    assert check_structural_controllability(merged.with_inputs([alt])).overall


def test_minimal_b_without_j_tprime_is_dedicated():
    system = SwitchedSystem(3, (Pattern(3, 3, ((2, 1), (3, 2))),))
    sol = dedicated_placement(system)
    assert not sol.j_tprime
    assert minimal_b(sol) == dedicated_b(sol)[0]


def test_minimal_b_degenerate_falls_back_to_diagonal():
    # a 2-cycle has full generic rank and one source SCC, so nothing is matched
    system = SwitchedSystem(2, (Pattern(2, 2, ((1, 2), (2, 1))),))
    sol = dedicated_placement(system)
    assert not sol.matched_states and sol.j_tprime == {1}
    assert minimal_b(sol).nonzeros == ((1, 1),)
    assert check_structural_controllability(system.with_inputs([minimal_b(sol)])).overall


def test_distribute_examples():
    system = sec5_system()
    sol = dedicated_placement(system)
    base = dedicated_b(sol)[0]
    spread = distribute(sol, base, {2: 1, 4: 2})
    assert [p.nonzeros for p in spread] == [((2, 2),), ((4, 4),), ()]
    assert _passes(system, spread)
    assert distribute(sol, base, {2: 1, 4: 1})[0] == base
    last = distribute(sol, base, {2: 3, 4: 3})
    assert [p.nnz for p in last] == [0, 0, 2]
    assert _passes(system, last)


def test_distribute_errors():
    sol = dedicated_placement(sec5_system())
    base = dedicated_b(sol)[0]
    with pytest.raises(ValueError, match="more than once"):
        distribute(sol, base, [(2, 1), (2, 2), (4, 1)])
    with pytest.raises(ValueError, match="not assigned"):
        distribute(sol, base, {2: 1})
    with pytest.raises(ValueError, match="mode"):
        distribute(sol, base, {2: 1, 4: 7})
    with pytest.raises(ValueError, match="not a nonzero column"):
        distribute(sol, base, {2: 1, 4: 1, 3: 1})


def test_feasibility_on_random_systems():
    for system in _random_systems(200, seed=100):
        sol = dedicated_placement(system)
        assert _passes(system, dedicated_b(sol))


def test_minimality_against_exhaustive_search():
    for system in _random_systems(50, seed=200, n_range=(1, 5)):
        sol = dedicated_placement(system)
        assert sol.cardinality == brute_force_min_dedicated(system)[0]


def test_mode_permutation_keeps_cost():
    for system in _random_systems(40, seed=300, m_range=(2, 3)):
        base = dedicated_placement(system).cardinality
        for perm in itertools.permutations(system.a_modes):
            shuffled = SwitchedSystem(system.n, perm)
            sol = dedicated_placement(shuffled)
            assert sol.cardinality == base
            assert _passes(shuffled, dedicated_b(sol))


def test_cost_conservation_across_families():
    rng = np.random.default_rng(400)
    for system in _random_systems(60, seed=401):
        sol = dedicated_placement(system)
        mb = minimal_b(sol)
        assert mb.nnz == sol.cardinality
        assert _passes(system, [mb] + [Pattern.zeros(system.n)] * (system.m - 1))
        for base in (dedicated_b(sol)[0], mb):
            cols = list(base.columns())
            assign = {c: int(rng.integers(1, system.m + 1)) for c in cols}
            spread = distribute(sol, base, assign)
            assert spread.total_nonzeros == sol.cardinality
            assert _passes(system, spread)
        choice = {s: int(rng.integers(1, system.n + 1)) for s in sol.j_tprime}
        nd = non_dedicated_b(sol, choice)
        assert nd.nnz == sol.cardinality
        assert _passes(system, [nd] + [Pattern.zeros(system.n)] * (system.m - 1))


def test_single_mode_reduces_to_lti_conditions():
    for system in _random_systems(60, seed=500, m_range=(1, 1)):
        sol = dedicated_placement(system)
        b = dedicated_b(sol)[0]
        reach = accessible_set(build_state_digraph(system.a_modes[0]), b)
        assert reach == set(range(1, system.n + 1))
        assert generic_rank(concat([system.a_modes[0], b])) == system.n


def test_placement_is_deterministic():
    for system in _random_systems(20, seed=600):
        assert dedicated_placement(system) == dedicated_placement(system)
