import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclemeet.cycles import (
    BudgetExceededError,
    CycleEmbedding,
    canonical_cycle,
    enumerate_longest_cycles,
    is_t_transversal,
    longest_cycle_length,
    longest_cycle_witness,
    min_pairwise_intersection,
)
from cyclemeet.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    path_graph,
    petersen_graph,
)

from oracles import all_cycles_of_length_by_permutations, longest_cycle_by_permutations


def test_longest_cycle_basics():
    assert longest_cycle_length(cycle_graph(7)) == 7
    assert longest_cycle_length(complete_graph(4)) == 4
    assert longest_cycle_length(petersen_graph()) == 9


def test_forest_is_an_error():
    with pytest.raises(ValueError, match="forest has no cycle"):
        longest_cycle_length(path_graph(5))


def test_budget_error_carries_lower_bound():
    g = complete_graph(9)
    with pytest.raises(BudgetExceededError) as info:
        longest_cycle_length(g, budget=3)
    assert 0 <= info.value.best_length <= 9
    # a budget that only just covers the first full descent has seen a cycle
    with pytest.raises(BudgetExceededError) as info:
        enumerate_longest_cycles(complete_graph(8), budget=60)
    assert info.value.best_length >= 3


def test_enumeration_counts():
    assert len(enumerate_longest_cycles(complete_graph(4))) == 3
    assert len(enumerate_longest_cycles(cycle_graph(9))) == 1
    cs = enumerate_longest_cycles(petersen_graph())
    assert cs.length == 9 and len(cs) == 20 and not cs.truncated
    # exact count confirmed by the raw permutation oracle
    oracle = all_cycles_of_length_by_permutations(petersen_graph(), 9)
    assert {c.vertices for c in cs} == oracle
    # vertex-transitivity forces uniform membership counts
    membership = {v: 0 for v in range(10)}
    for c in cs:
        for v in c.vertices:
            membership[v] += 1
    assert set(membership.values()) == {18}


def test_enumeration_matches_permutation_oracle():
    rng = random.Random(7)
    checked = 0
    while checked < 20:
        n = rng.randrange(4, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        try:
            length = longest_cycle_length(g)
        except ValueError:
            continue
        assert length == longest_cycle_by_permutations(g)
        ours = {c.vertices for c in enumerate_longest_cycles(g)}
        assert ours == all_cycles_of_length_by_permutations(g, length)
        checked += 1


def test_oracle_equivalence_touches_ten_vertices():
    rng = random.Random(17)
    graphs = [petersen_graph()]
    while len(graphs) < 6:
        edges = [(u, v) for u in range(10) for v in range(u + 1, 10) if rng.random() < 0.3]
        g = Graph(10, edges)
        if is_connected(g):
            graphs.append(g)
    for g in graphs:
        try:
            ours = longest_cycle_length(g)
        except ValueError:
            continue
        assert ours == longest_cycle_by_permutations(g)


def test_enumeration_limit_flags_truncation():
    cs = enumerate_longest_cycles(complete_graph(6), limit=5)
    assert cs.truncated and len(cs) == 5


def test_witness_is_valid_longest():
    g = petersen_graph()
    w = longest_cycle_witness(g)
    assert w.is_valid(g) and w.length == 9


def test_canonical_form_examples():
    assert canonical_cycle((2, 0, 1)) == (0, 1, 2)
    assert canonical_cycle((3, 2, 1, 0)) == (0, 1, 2, 3)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=3, max_size=12, unique=True), st.data())
def test_canonicalization_invariance(seq, data):
    rot = data.draw(st.integers(0, len(seq) - 1))
    rotated = seq[rot:] + seq[:rot]
    assert canonical_cycle(rotated) == canonical_cycle(seq)
    assert canonical_cycle(list(reversed(seq))) == canonical_cycle(seq)


def test_cycle_embedding_validation():
    g = cycle_graph(5)
    with pytest.raises(ValueError):
        CycleEmbedding.from_sequence(g, [0, 1, 2])  # chord missing
    with pytest.raises(ValueError):
        CycleEmbedding.from_sequence(g, [0, 1])
    c = CycleEmbedding.from_sequence(g, [1, 2, 3, 4, 0])
    assert c.vertices == (0, 1, 2, 3, 4)


def test_min_pairwise_intersection():
    k4 = enumerate_longest_cycles(complete_graph(4))
    size, (x, y) = min_pairwise_intersection(k4)
    assert size == 4 and x != y

    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    cs = enumerate_longest_cycles(g)
    assert min_pairwise_intersection(cs)[0] == 0

    pet = enumerate_longest_cycles(petersen_graph())
    m_star, _ = min_pairwise_intersection(pet)
    assert m_star == 8  # regression constant; at least 3 by 3-connectivity

    with pytest.raises(ValueError, match="need two cycles"):
        min_pairwise_intersection(enumerate_longest_cycles(cycle_graph(5)))


def test_is_t_transversal():
    assert is_t_transversal(cycle_graph(5), {0}, 1)
    assert not is_t_transversal(complete_graph(4), {0, 1}, 3)
    pet = petersen_graph()
    cs = enumerate_longest_cycles(pet)
    m_star, _ = min_pairwise_intersection(cs)
    assert is_t_transversal(pet, cs.cycles[0].vertex_set(), m_star)
    with pytest.raises(ValueError):
        is_t_transversal(cycle_graph(5), {0}, 0)


def test_prop21_nonempty_intersections_small_corpus():
    # every pair of longest cycles in a 2-connected graph shares a vertex
    rng = random.Random(11)
    checked = 0
    while checked < 15:
        n = rng.randrange(4, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        if not is_connected(g):
            continue
        from cyclemeet.graphs import vertex_connectivity

        if vertex_connectivity(g) < 2:
            continue
        cs = enumerate_longest_cycles(g)
        for i in range(len(cs.cycles)):
            for j in range(i + 1, len(cs.cycles)):
                assert cs.cycles[i].vertex_set() & cs.cycles[j].vertex_set()
        checked += 1


def test_cycle_set_json_shape():
    cs = enumerate_longest_cycles(complete_graph(4))
    payload = json.loads(json.dumps(cs.to_json_dict()))
    assert payload["length"] == 4
    assert payload["count"] == 3
    assert payload["truncated"] is False
    assert sorted(payload["cycles"]) == payload["cycles"]


def test_deterministic_enumeration_order():
    a = enumerate_longest_cycles(petersen_graph())
    b = enumerate_longest_cycles(petersen_graph())
    assert [c.vertices for c in a] == [c.vertices for c in b]
    assert [c.vertices for c in a.cycles] == sorted(c.vertices for c in a.cycles)
