from __future__ import annotations

import itertools

import pytest

from holechord.generators import (complete, complete_multipartite, cycle,
                                  efl_near_pencil, empty, path, random_graph,
                                  sharpness_instance)
from holechord.graph import Graph, GraphError
from holechord.oracles import (ALPHA_DEFAULT_LIMIT, Correspondence,
                               ListAssignment, NotChordalError,
                               OracleLimitError, check_efl_instance,
                               chordal_clique_and_coloring, chromatic_number,
                               clique_number, contains_join_subgraph,
                               degeneracy, degeneracy_and_cover_numbers,
                               dp_chromatic_tiny, dp_colorable,
                               has_clique_minor, independence_number,
                               is_chordal, is_chordal_with_peo,
                               list_colorable, maximal_cliques, maximum_clique)

from bruteforce import (naive_chromatic_number, naive_clique_number,
                        naive_dp_colorable_all_covers,
                        naive_independence_number, naive_is_chordal)


def test_peo_on_complete_graph():
    peo = is_chordal_with_peo(complete(5))
    assert peo.perfect and sorted(peo.order) == list(range(5))


def test_c4_hole_witness():
    peo = is_chordal_with_peo(cycle(4))
    assert not peo.perfect
    assert sorted(peo.hole) == [0, 1, 2, 3]


def test_hole_witness_is_always_a_real_hole():
    from holechord.holes import is_hole_of
    for seed in range(150):
        g = random_graph(9, 0.35, seed)
        peo = is_chordal_with_peo(g)
        if not peo.perfect:
            assert is_hole_of(g, peo.hole)


def test_chordality_agrees_with_bruteforce():
    for seed in range(200):
        g = random_graph(5 + seed % 4, 0.4, seed)
        assert is_chordal(g) == naive_is_chordal(g)


def test_chordal_coloring_uses_exactly_omega_colors():
    for seed in range(200):
        g = random_graph(9, 0.3, seed)
        if not is_chordal(g):
            continue
        om, coloring = chordal_clique_and_coloring(g)
        assert om == naive_clique_number(g)
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert len(set(coloring)) == om


def test_chordal_coloring_rejects_holes():
    with pytest.raises(NotChordalError):
        chordal_clique_and_coloring(cycle(5))


def test_clique_number_cross_check():
    for seed in range(150):
        g = random_graph(8, 0.5, seed)
        assert clique_number(g) == naive_clique_number(g)
        mc = maximum_clique(g)
        assert all(g.has_edge(u, v) for u, v in itertools.combinations(mc, 2))


def test_maximal_cliques_bron_kerbosch():
    g = cycle(4)
    assert maximal_cliques(g) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert maximal_cliques(complete(3)) == [(0, 1, 2)]


def test_chromatic_small_cases():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(complete_multipartite([2, 4])) == 2
    assert chromatic_number(complete(7)) == 7
    assert chromatic_number(empty(4)) == 1


def test_chromatic_cross_check():
    for seed in range(150):
        g = random_graph(7, 0.5, seed)
        assert chromatic_number(g) == naive_chromatic_number(g)


def test_chromatic_limit():
    g = random_graph(13, 0.2, 1)
    with pytest.raises(OracleLimitError):
        chromatic_number(g)
    assert chromatic_number(g, cap=13) <= 13


def test_chromatic_at_least_omega():
    for seed in range(100):
        g = random_graph(8, 0.5, seed)
        assert chromatic_number(g) >= clique_number(g)


def test_list_colorable_uniform_equals_k_colorability():
    for seed in range(80):
        g = random_graph(6, 0.5, seed)
        chi = chromatic_number(g)
        for k in (1, 2, 3):
            ok, coloring = list_colorable(g, ListAssignment.uniform(g, k))
            assert ok == (chi <= k)
            if ok:
                assert all(coloring[u] != coloring[v] for u, v in g.edges())


def test_list_refutation_k24():
    # 2-side lists {1,2},{3,4}; 4-side lists are the four transversals
    g = complete_multipartite([2, 4])
    lists = {0: [1, 2], 1: [3, 4],
             2: [1, 3], 3: [1, 4], 4: [2, 3], 5: [2, 4]}
    ok, _ = list_colorable(g, ListAssignment.from_mapping(g, lists))
    assert not ok


def test_list_chordal_omega_lists_suffice():
    for seed in range(120):
        g = random_graph(8, 0.3, seed)
        if not is_chordal(g) or g.order == 0:
            continue
        om = clique_number(g)
        # skewed but omega-sized lists
        lists = {v: list(range(v % 3, v % 3 + om)) for v in range(g.order)}
        ok, _ = list_colorable(g, ListAssignment.from_mapping(g, lists))
        assert ok


def test_dp_identity_equals_proper_coloring():
    for seed in range(60):
        g = random_graph(6, 0.5, seed)
        chi = chromatic_number(g)
        for k in (1, 2, 3):
            ok, choice = dp_colorable(g, Correspondence.identity(g, k))
            assert ok == (chi <= k)
            if ok:
                assert all(choice[u] != choice[v] for u, v in g.edges())


def test_dp_twisted_square_not_two_colorable():
    g = cycle(4)
    ident = frozenset({(0, 0), (1, 1)})
    twist = frozenset({(0, 1), (1, 0)})
    cover = Correspondence(2, {(0, 1): ident, (1, 2): ident,
                               (2, 3): ident, (0, 3): twist})
    ok, _ = dp_colorable(g, cover)
    assert not ok


def test_dp_trees_two_colorable_under_full_matchings():
    g = path(5)
    for choice in itertools.product(
            [frozenset({(0, 0), (1, 1)}), frozenset({(0, 1), (1, 0)})],
            repeat=4):
        cover = Correspondence(2, dict(zip(g.edges(), choice)))
        ok, _ = dp_colorable(g, cover)
        assert ok


def test_correspondence_validation():
    g = cycle(4)
    with pytest.raises(GraphError):
        Correspondence(2, {(0, 2): frozenset({(0, 0)})}).validate(g)  # non-edge
    with pytest.raises(GraphError):
        Correspondence(2, {(0, 1): frozenset({(0, 0), (0, 1)})}).validate(g)
    with pytest.raises(GraphError):
        Correspondence(2, {(0, 1): frozenset({(0, 5)})}).validate(g)


def test_correspondence_json():
    g = cycle(4)
    cov = Correspondence.from_json_dict(
        g, {"k": 2, "edges": {"0-1": [[0, 1], [1, 0]]}})
    assert cov.forbidden(0, 1) == frozenset({(0, 1), (1, 0)})
    assert cov.forbidden(1, 0) == frozenset({(1, 0), (0, 1)})


def test_dp_chromatic_tiny_values():
    assert dp_chromatic_tiny(cycle(4)) == 3
    assert dp_chromatic_tiny(cycle(5)) == 3
    assert dp_chromatic_tiny(cycle(6)) == 3
    assert dp_chromatic_tiny(complete(3)) == 3
    assert dp_chromatic_tiny(path(3)) == 2
    assert dp_chromatic_tiny(empty(3)) == 1
    with pytest.raises(OracleLimitError):
        dp_chromatic_tiny(complete(4))  # needs 4 > k_max colors


def test_dp_chromatic_tiny_matches_raw_enumeration():
    # the spanning-forest normalization against the (k!)^m definition
    for g in (path(3), complete(3), cycle(4)):
        norm = dp_chromatic_tiny(g)
        raw = next(k for k in range(1, 4)
                   if naive_dp_colorable_all_covers(g, k))
        assert norm == raw


def test_degeneracy_values():
    assert degeneracy(cycle(4))[0] == 2
    assert degeneracy(complete(6))[0] == 5
    assert degeneracy(path(5))[0] == 1


def test_degeneracy_of_chordal_is_omega_minus_one():
    for seed in range(150):
        g = random_graph(9, 0.3, seed)
        if is_chordal(g) and g.order:
            assert degeneracy(g)[0] == clique_number(g) - 1


def test_cover_numbers():
    d, alpha, beta = degeneracy_and_cover_numbers(cycle(4), want_beta=True)
    assert (d, alpha, beta) == (2, 2, 2)
    d, alpha, beta = degeneracy_and_cover_numbers(complete(6), want_beta=True)
    assert (d, alpha, beta) == (5, 1, 5)


def test_independence_cross_check_and_degenerate_bound():
    for seed in range(100):
        g = random_graph(8, 0.5, seed)
        alpha = independence_number(g)
        assert alpha == naive_independence_number(g)
        d, _ = degeneracy(g)
        assert d <= g.order - alpha
        assert chromatic_number(g) <= d + 1


def test_independence_limit():
    with pytest.raises(OracleLimitError):
        independence_number(empty(ALPHA_DEFAULT_LIMIT + 1))


def test_join_subgraph_examples():
    assert contains_join_subgraph(complete_multipartite([2, 4]), 4, 1)[0]
    assert contains_join_subgraph(complete(6), 3, 3)[0]
    assert not contains_join_subgraph(cycle(6), 2, 2)[0]
    found, witness = contains_join_subgraph(complete(6), 3, 3)
    a, b = witness
    assert len(a) == 3 and len(b) == 3 and not set(a) & set(b)
    with pytest.raises(GraphError):
        contains_join_subgraph(complete(3), 1, 2)  # m < n


def test_join_subgraph_bruteforce_cross_check():
    def naive(g, m, n):
        for b in itertools.combinations(range(g.order), n):
            if not all(g.has_edge(u, v)
                       for u, v in itertools.combinations(b, 2)):
                continue
            others = [v for v in range(g.order) if v not in b]
            for a in itertools.combinations(others, m):
                if all(g.has_edge(x, y) for x in a for y in b):
                    return True
        return False

    for seed in range(80):
        g = random_graph(7, 0.5, seed)
        for m, n in ((2, 1), (2, 2), (3, 2), (4, 2)):
            assert contains_join_subgraph(g, m, n)[0] == naive(g, m, n)


def test_clique_minor_examples():
    assert has_clique_minor(cycle(5), 3).found is True
    assert has_clique_minor(path(6), 3).found is False
    # contracting a 6-cycle chordalized through one vertex: its largest
    # clique is a triangle and triangles are minors of the cycle
    assert has_clique_minor(cycle(6), 3).found is True
    assert has_clique_minor(complete(5), 5).found is True
    assert has_clique_minor(complete(5), 6).found is False


def test_clique_minor_branch_sets_are_valid():
    res = has_clique_minor(cycle(5), 3)
    sets = res.branch_sets
    assert len(sets) == 3
    flat = [v for s in sets for v in s]
    assert len(flat) == len(set(flat))
    g = cycle(5)
    for s1, s2 in itertools.combinations(sets, 2):
        assert any(g.has_edge(u, v) for u in s1 for v in s2)


def test_clique_minor_budget_indeterminate():
    res = has_clique_minor(random_graph(10, 0.5, 3), 5, budget=3)
    assert res.found is None


def test_clique_minor_planar_k5_free():
    # the 3x3 grid is planar, so no 5-clique minor
    edges = []
    for r in range(3):
        for c in range(3):
            v = 3 * r + c
            if c < 2:
                edges.append((v, v + 1))
            if r < 2:
                edges.append((v, v + 3))
    grid = Graph.from_edges(9, edges)
    assert has_clique_minor(grid, 4).found is True
    assert has_clique_minor(grid, 5).found is False


def test_efl_near_pencil_certificates():
    for k in range(2, 7):
        g, cliques = efl_near_pencil(k)
        cert = check_efl_instance(g, cliques)
        assert cert.status == "pass"
        assert cert.omega == k
        assert cert.chi == k
        assert len(set(cert.simplicial)) == k
        coloring = cert.coloring
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert len(set(coloring)) == k


def test_efl_two_disjoint_edges():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    cert = check_efl_instance(g, [(0, 1), (2, 3)])
    assert cert.status == "pass" and cert.chi == 2


def test_efl_wrong_sizes_rejected():
    # k = 3 names of size-2 cliques: sizes must equal the count
    cert = check_efl_instance(complete(3), [(0, 1), (1, 2), (0, 2)])
    assert cert.status == "fail" and "size" in cert.reason


def test_efl_not_edge_disjoint_rejected():
    g = complete(3)
    cert = check_efl_instance(g, [(0, 1, 2), (0, 1, 2), (0, 1, 2)])
    assert cert.status == "fail" and "two cliques" in cert.reason


def test_efl_union_mismatch_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3), (1, 2)])
    cert = check_efl_instance(g, [(0, 1), (2, 3)])
    assert cert.status == "fail" and "not covered" in cert.reason


def test_efl_chain_of_triangles_certified():
    # chordal union: three triangles glued at cut vertices 2 and 4
    g = Graph.from_edges(
        7, [(0, 1), (1, 2), (2, 0),
            (2, 3), (3, 4), (4, 2),
            (4, 5), (5, 6), (6, 4)])
    cert = check_efl_instance(g, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
    assert cert.status == "pass" and cert.omega == 3 and cert.chi == 3


def test_efl_nonchordal_ring_instance_certified():
    # four edge-disjoint K_4s pairwise glued around the 4-hole (0,1,2,3);
    # the private vertices are simplicial and the hole admits a one-stage
    # cover, so the removal/completion pipeline must certify chi = 4
    cliques = [(0, 3, 4, 5), (0, 1, 6, 7), (1, 2, 8, 9), (2, 3, 10, 11)]
    edges = [e for c in cliques for e in itertools.combinations(sorted(c), 2)]
    g = Graph.from_edges(12, edges)
    assert not is_chordal(g)
    cert = check_efl_instance(g, cliques)
    assert cert.status == "pass" and cert.omega == 4 and cert.chi == 4
    coloring = cert.coloring
    assert all(coloring[u] != coloring[v] for u, v in g.edges())
    assert max(coloring) <= 3


def test_sandwich_chain_on_small_graphs():
    # chi <= list suffices check <= dp bound on every instance where all run
    for seed in range(40):
        g = random_graph(5, 0.5, seed)
        chi = chromatic_number(g)
        try:
            dp = dp_chromatic_tiny(g)
        except OracleLimitError:
            continue
        assert chi <= dp
        for k in range(1, dp + 1):
            ok, _ = list_colorable(g, ListAssignment.uniform(g, k))
            if ok and k < chi:
                raise AssertionError("list coloring beat chromatic number")
            if not ok and k >= dp:
                raise AssertionError("dp bound failed to cover list case")


def test_sharpness_instance_is_k24():
    assert sharpness_instance([1]) == complete_multipartite([2, 4])
