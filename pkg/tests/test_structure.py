import itertools
import random

import pytest

from centrascope.experiments import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    octahedron,
    path,
    prism,
    star,
)
from centrascope.graph import bfs_distances, from_edge_list, walk_diagonals
from centrascope.structure import (
    automorphism_orbits,
    find_automorphism,
    is_bipartite,
    is_distance_regular,
    is_regular,
    is_vertex_transitive,
    is_walk_regular,
    structure_profile,
)

from conftest import random_connected


def brute_orbits(g):
    """Orbits from the images of every node under all n! automorphism candidates."""
    edges = set(g.edges())
    images = {v: {v} for v in range(g.n)}
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            for v in range(g.n):
                images[v].add(perm[v])
    return tuple(sorted({tuple(sorted(images[v])) for v in range(g.n)}))


def intersection_array(g):
    dist = [bfs_distances(g, u) for u in range(g.n)]
    table = {}
    for u, v in itertools.product(range(g.n), repeat=2):
        k = dist[u][v]
        counts = [0, 0, 0]
        for w in g.neighbors(v):
            counts[dist[u][w] - k + 1] += 1
        table.setdefault(k, set()).add(tuple(counts))
    return table


def test_is_regular_examples():
    assert is_regular(cycle(6))
    assert not is_regular(path(3))
    assert is_regular(prism())


def test_is_walk_regular_examples(corpus):
    assert is_walk_regular(prism())
    assert not is_walk_regular(path(3))
    regular7 = [g for g in corpus(7) if is_regular(g) and g.degrees()[0] == 4]
    assert len(regular7) == 2
    c712 = circulant(7, (1, 2))
    from centrascope.graph import canonical_graph6

    other = [g for g in regular7 if canonical_graph6(g) != canonical_graph6(c712)]
    assert len(other) == 1
    assert not is_walk_regular(other[0])
    assert is_walk_regular(c712)


def test_walk_regular_cutoff_against_longer_walks(corpus):
    for n in range(1, 8):
        for g in corpus(n):
            brute = all(len(set(wd.diag)) == 1 for wd in walk_diagonals(g, 2 * n))
            assert is_walk_regular(g) == brute


def test_orbit_examples():
    assert automorphism_orbits(cycle(5)) == ((0, 1, 2, 3, 4),)
    assert automorphism_orbits(path(3)) == ((0, 2), (1,))
    assert automorphism_orbits(star(3)) == ((0,), (1, 2, 3))


def test_orbits_match_brute_force(small_corpus):
    for g in small_corpus:
        assert automorphism_orbits(g) == brute_orbits(g)


def test_found_automorphisms_are_automorphisms():
    rng = random.Random(8)
    for _ in range(20):
        g = random_connected(rng, rng.randint(3, 10), 0.4)
        for u, v in itertools.combinations(range(g.n), 2):
            perm = find_automorphism(g, u, v)
            if perm is not None:
                assert perm[u] == v
                assert g.relabel(perm) == g


def test_orbit_soundness_sampled(corpus):
    from centrascope.centrality import subgraph_centrality

    rng = random.Random(12)
    sample = corpus(6) + rng.sample(corpus(7), 100) + rng.sample(corpus(8), 100)
    for g in sample:
        ee = subgraph_centrality(g).values
        dist = [sorted(bfs_distances(g, v)) for v in range(g.n)]
        for block in automorphism_orbits(g):
            first = block[0]
            for v in block[1:]:
                assert g.degrees()[v] == g.degrees()[first]
                assert dist[v] == dist[first]
                assert abs(ee[v] - ee[first]) <= 1e-9


def test_vertex_transitive_examples():
    assert is_vertex_transitive(complete_bipartite(3, 3))
    assert not is_vertex_transitive(star(3))
    assert is_vertex_transitive(prism())
    # rotation (0 1 2)(3 4 5) and the swap of the two triangles generate a transitive group
    rotation = [1, 2, 0, 4, 5, 3]
    swap = [3, 4, 5, 0, 1, 2]
    assert prism().relabel(rotation) == prism() and prism().relabel(swap) == prism()


def test_distance_regular_examples():
    assert is_distance_regular(complete_bipartite(3, 3))
    assert is_distance_regular(cycle(6))
    # C6: b_0=2, b_1=1, b_2=1; c_1=1, c_2=1, c_3=2
    table = intersection_array(cycle(6))
    assert table == {0: {(0, 0, 2)}, 1: {(1, 0, 1)}, 2: {(1, 0, 1)}, 3: {(2, 0, 0)}}
    assert not is_distance_regular(prism())
    assert intersection_array(prism())[1] == {(1, 1, 1), (1, 0, 2)}
    with pytest.raises(ValueError):
        is_distance_regular(from_edge_list(4, [(0, 1), (2, 3)]))


def test_bipartite_examples():
    assert is_bipartite(complete_bipartite(3, 3))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(path(3))


def test_profile_examples():
    k6 = structure_profile(complete(6))
    assert k6.regular and k6.walk_regular and k6.vertex_transitive and k6.distance_regular
    pr = structure_profile(prism())
    assert (pr.regular, pr.walk_regular, pr.vertex_transitive, pr.distance_regular) == (True, True, True, False)
    p3 = structure_profile(path(3))
    assert p3.flags() == {"regular": False, "walk_regular": False, "vertex_transitive": False,
                          "distance_regular": False, "bipartite": True}
    # the octahedron is strongly regular (6, 4, 2, 4), hence distance-regular
    octa = structure_profile(octahedron())
    assert octa.vertex_transitive and octa.distance_regular


def test_paper_counts(corpus):
    regular7 = [g for g in corpus(7) if is_regular(g)]
    assert sum(not is_walk_regular(g) for g in regular7) == 1
    assert sum(is_walk_regular(g) for g in corpus(8)) == 10


def test_larger_graph_orbits():
    # Petersen graph: vertex-transitive, distance-regular
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    petersen = from_edge_list(10, outer + inner + spokes)
    profile = structure_profile(petersen)
    assert profile.vertex_transitive and profile.distance_regular and profile.walk_regular
