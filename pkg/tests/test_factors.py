import itertools
import random

import pytest

from ramsey_turan import (
    Graph,
    clique_factor,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    near_triangle_factor,
)
from ramsey_turan.factors import verify_factor

from helpers import partitions_into_sizes


def test_clique_factor_examples():
    k6 = complete_graph(6)
    f = clique_factor(k6, [3, 3])
    assert f is not None and verify_factor(k6, f)
    assert clique_factor(complete_bipartite_graph(3, 3), [3, 3]) is None


def test_clique_factor_matching_complement_plus_apex():
    # complement of a perfect matching on 8 vertices, plus one vertex joined
    # to everything: minimum degree 7 > 6 = 2*9/3, so a triangle factor
    # must exist
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(8), 2)
        if not (u % 2 == 0 and v == u + 1)
    ]
    edges += [(v, 8) for v in range(8)]
    g = Graph(9, edges)
    assert min(g.degree(v) for v in range(9)) == 7  # only the partner is missing
    f = clique_factor(g, [3, 3, 3])
    assert f is not None and verify_factor(g, f)
    for block in f.blocks:
        assert len(block) == 3


def test_clique_factor_validates_sizes():
    with pytest.raises(ValueError):
        clique_factor(complete_graph(6), [3, 4])
    with pytest.raises(ValueError):
        clique_factor(complete_graph(3), [3, 0])


def test_clique_factor_agrees_with_partition_enumeration():
    rng = random.Random(71)
    size_options = {
        4: [[2, 2], [4], [3, 1]],
        5: [[3, 2], [5]],
        6: [[3, 3], [2, 2, 2], [4, 2]],
        7: [[3, 4], [3, 2, 2], [7]],
    }
    for _ in range(60):
        n = rng.choice([4, 5, 6, 7])
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        g = Graph(n, edges)
        sizes = rng.choice(size_options[n])
        brute = any(
            all(g.is_clique(sum(1 << v for v in block)) for block in partition)
            for partition in partitions_into_sizes(list(range(n)), sorted(sizes))
        )
        got = clique_factor(g, sizes)
        assert (got is not None) == brute, (g.edges, sizes)
        if got is not None:
            assert verify_factor(g, got)
            assert sorted(len(b) for b in got.blocks) == sorted(sizes)


def test_near_triangle_factor_cases():
    f7 = near_triangle_factor(complete_graph(7))
    assert f7 is not None and sorted(len(b) for b in f7.blocks) == [3, 4]
    f8 = near_triangle_factor(complete_graph(8))
    # n = 2 mod 3 tries two K_4 first, then triangle + K_5
    assert f8 is not None and sorted(len(b) for b in f8.blocks) == [4, 4]
    f9 = near_triangle_factor(complete_graph(9))
    assert f9 is not None and [len(b) for b in f9.blocks] == [3, 3, 3]
    f5 = near_triangle_factor(complete_graph(5))
    assert f5 is not None and [len(b) for b in f5.blocks] == [5]
    f4 = near_triangle_factor(complete_graph(4))
    assert f4 is not None and [len(b) for b in f4.blocks] == [4]
    assert near_triangle_factor(cycle_graph(9)) is None
    with pytest.raises(ValueError):
        near_triangle_factor(Graph(2, [(0, 1)]))


def test_near_triangle_factor_k8_without_k4s():
    # K_8 minus a K_4's edges inside one half still has the K_5 + triangle
    # fallback when the two-K_4 shape dies
    g = Graph(8, [
        (u, v)
        for u, v in itertools.combinations(range(8), 2)
        if not (u < 4 and v < 4 and (u, v) != (0, 1))
    ])
    f = near_triangle_factor(g)
    if f is not None:
        assert verify_factor(g, f)


def _random_min_degree_graph(rng: random.Random, n: int, threshold: float) -> Graph:
    """Random graph topped up edge by edge until min degree > threshold."""
    present = {e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5}
    missing = [e for e in itertools.combinations(range(n), 2) if e not in present]
    rng.shuffle(missing)
    g = Graph(n, present)
    while min(g.degree(v) for v in range(n)) <= threshold:
        present.add(missing.pop())
        g = Graph(n, present)
    return g


def test_corradi_hajnal_property():
    rng = random.Random(1812)
    for n in (6, 9, 12):
        for _ in range(50):
            g = _random_min_degree_graph(rng, n, 2 * n / 3)
            f = clique_factor(g, [3] * (n // 3))
            assert f is not None, (n, g.edges)
            assert verify_factor(g, f)
