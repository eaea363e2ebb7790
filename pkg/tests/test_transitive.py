import math

import pytest

from cyclemeet.corpus import cayley_zoo, random_circulants
from cyclemeet.cycles import (
    BudgetExceededError,
    CycleEmbedding,
    enumerate_longest_cycles,
    is_t_transversal,
    longest_cycle_length,
)
from cyclemeet.graphs import (
    complete_graph,
    cycle_graph,
    girth,
    is_bipartite,
    is_connected,
    is_regular,
    path_graph,
    petersen_graph,
)
from cyclemeet.transitive import (
    Automorphism,
    GroupPresentation,
    apply_automorphism,
    automorphism_merge_search,
    automorphism_sample,
    cayley,
    circulant,
    elementary_abelian_cube,
    find_isomorphism,
    is_vertex_transitive,
    symmetric_transpositions,
)


def test_circulant_examples():
    assert circulant(5, {1, 4}) == cycle_graph(5)
    assert circulant(4, {1, 2, 3}) == complete_graph(4)
    g = circulant(6, {2, 3, 4})
    assert is_regular(g) == 3
    assert is_vertex_transitive(g)


def test_circulant_rejects_bad_connection():
    with pytest.raises(ValueError, match="symmetric"):
        circulant(7, {1})
    with pytest.raises(ValueError):
        circulant(5, set())
    with pytest.raises(ValueError):
        circulant(5, {0, 1, 4})


def test_cayley_cyclic():
    gp = GroupPresentation.parse("cyclic 6: 1,5")
    assert cayley(gp) == cycle_graph(6)
    with pytest.raises(ValueError, match="inverse"):
        cayley(GroupPresentation.parse("cyclic 7: 1"))
    with pytest.raises(ValueError, match="identity"):
        cayley(GroupPresentation.parse("cyclic 6: 0,1,5"))


def test_cayley_s3_transpositions_is_k33_like():
    g = cayley(symmetric_transpositions(3))
    assert g.n == 6 and is_regular(g) == 3 and is_bipartite(g) and girth(g) == 4


def test_cayley_cube():
    g = cayley(elementary_abelian_cube())
    assert g.n == 8 and is_regular(g) == 3 and is_bipartite(g) and girth(g) == 4


def test_cayley_perm_parse_and_inverse_closure():
    gp = GroupPresentation.parse("perm 4: (0 1 2 3); (0 1)")
    assert gp.order == 24
    with pytest.raises(ValueError, match="inverse"):
        cayley(gp)  # the 4-cycle generator lacks its inverse
    with pytest.raises(ValueError, match="inverse"):
        cayley(GroupPresentation.parse("perm 3: (0 1 2)"))
    rot = tuple((i + 1) % 5 for i in range(5))
    inv = tuple((i - 1) % 5 for i in range(5))
    gp5 = GroupPresentation(kind="permutation", order=5, generators=(rot,))
    assert cayley(gp5, connection=[rot, inv]) == cycle_graph(5)


def test_cayley_element_mapping_matches_graph():
    from cyclemeet.transitive import _compose_perm, cayley_elements

    gp = symmetric_transpositions(3)
    elements = cayley_elements(gp)
    g = cayley(gp)
    assert len(elements) == g.n == 6
    index = {e: i for i, e in enumerate(elements)}
    for e in elements:
        for s in gp.generators:
            w = index[_compose_perm(e, s)]
            assert g.has_edge(index[e], w)


def test_cayley_outputs_are_vertex_transitive():
    for g in cayley_zoo():
        if g.n <= 32:
            assert is_vertex_transitive(g)


def test_is_vertex_transitive_cases():
    assert is_vertex_transitive(petersen_graph())
    assert not is_vertex_transitive(path_graph(3))
    for g in random_circulants(8, seed=2, max_n=20):
        assert is_vertex_transitive(g)
    with pytest.raises(ValueError, match="capped"):
        is_vertex_transitive(cycle_graph(70))


def test_automorphism_validity_and_sampling():
    g = petersen_graph()
    for a in automorphism_sample(g, limit=5):
        assert a.is_valid(g)
        assert a.inverse().is_valid(g)
    bad = Automorphism(tuple([1, 0] + list(range(2, 10))))
    assert not bad.is_valid(g)


def test_find_isomorphism_relabels():
    g = petersen_graph()
    relabel = [3, 4, 0, 1, 2, 8, 9, 5, 6, 7]
    from cyclemeet.graphs import Graph

    h = Graph(10, [(relabel[u], relabel[v]) for u, v in g.edges()])
    iso = find_isomorphism(g, h)
    assert iso is not None
    assert all(h.has_edge(iso(u), iso(v)) for u, v in g.edges())
    assert find_isomorphism(g, cycle_graph(10)) is None


def test_apply_automorphism():
    g = cycle_graph(5)
    x = CycleEmbedding.from_sequence(g, range(5))
    ident = Automorphism.identity(5)
    assert apply_automorphism(x, ident) == x
    rot = Automorphism(tuple((i + 1) % 5 for i in range(5)))
    assert apply_automorphism(x, rot) == x  # C5 has one cycle up to symmetry

    pet = petersen_graph()
    cs = enumerate_longest_cycles(pet)
    auto = automorphism_sample(pet, limit=1)[0]
    img = apply_automorphism(cs.cycles[0], auto)
    assert img.length == 9 and img.is_valid(pet)


def test_merge_search_none_on_longest():
    g = circulant(12, {1, 2, 10, 11})
    cs = enumerate_longest_cycles(g, limit=5)
    assert automorphism_merge_search(g, cs.cycles[0]) is None
    c9 = cycle_graph(9)
    only = enumerate_longest_cycles(c9).cycles[0]
    assert automorphism_merge_search(c9, only) is None


def test_merge_search_improves_short_cycle():
    g = circulant(12, {1, 2, 10, 11})
    short = CycleEmbedding.from_sequence(g, [0, 1, 2])
    out = automorphism_merge_search(g, short)
    if out is not None:
        assert out.length > 3 and out.is_valid(g)


def test_merge_search_budget_error():
    g = circulant(16, {1, 2, 14, 15})
    short = CycleEmbedding.from_sequence(g, [0, 1, 2])
    with pytest.raises(BudgetExceededError):
        automorphism_merge_search(g, short, budget=1)


def test_devos_inequality_on_transversals():
    # c(G) * |A| >= t * n for verified t-transversals of vertex-transitive graphs
    for g in [cycle_graph(8), petersen_graph(), circulant(10, {1, 9, 5})]:
        assert is_connected(g) and is_vertex_transitive(g)
        cs = enumerate_longest_cycles(g)
        a = cs.cycles[0].vertex_set()
        t = 1
        assert is_t_transversal(g, a, t)
        assert cs.length * len(a) >= t * g.n


def test_babai_bound_on_samples():
    for g in random_circulants(10, seed=4, max_n=24):
        c = longest_cycle_length(g)
        assert c * c >= 3 * g.n
        assert c >= math.isqrt(3 * g.n - 1) + 1 or c * c >= 3 * g.n
