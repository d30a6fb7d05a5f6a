import itertools
import random
from fractions import Fraction

import pytest

from ramsey_turan import (
    EdgeColoring,
    ExactlyKColors,
    Graph,
    KLocal,
    RhoMean,
    canonical_code,
    complete_graph,
    constraint_from_string,
    constraint_to_string,
    find_monochromatic,
    k5_no_mono_triangle,
    satisfies,
)
from ramsey_turan.coloring import count_monochromatic_triangles

from helpers import coloring_profile, permuted_coloring, set_partition_strings

K3 = complete_graph(3)


def test_normalization_first_use_order():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    col = EdgeColoring(g, [5, 2, 5])
    assert col.colors == (0, 1, 0)
    assert col.q == 2


def test_normalization_idempotent():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        col = EdgeColoring(Graph(n, edges), [rng.randrange(4) for _ in edges])
        again = EdgeColoring(col.host, col.colors)
        assert again.colors == col.colors


def test_color_degree_examples():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    mono = EdgeColoring(star, [0, 0, 0])
    assert mono.color_degree(0) == 1
    lonely = EdgeColoring(Graph(2, []), [])
    assert lonely.color_degree(1) == 0
    k5 = k5_no_mono_triangle()
    assert all(k5.coloring.color_degree(v) == 2 for v in range(5))
    with pytest.raises(ValueError):
        mono.color_degree(4)


def test_total_color_incidence_examples():
    assert k5_no_mono_triangle().coloring.total_color_incidence() == 10
    assert EdgeColoring(Graph(4, []), []).total_color_incidence() == 0
    rainbow = EdgeColoring(K3, [0, 1, 2])
    assert rainbow.total_color_incidence() == 6


def test_satisfies_examples():
    rainbow = EdgeColoring(K3, [0, 1, 2])
    assert satisfies(rainbow, RhoMean(2))  # sum 6 = 2*3 exactly
    k5 = k5_no_mono_triangle().coloring
    assert satisfies(k5, KLocal(2))
    star4 = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    col = EdgeColoring(star4, [0, 1, 2, 3])
    assert not satisfies(col, RhoMean(Fraction(3, 2)))  # 8 > 15/2
    assert satisfies(col, RhoMean(Fraction(8, 5)))  # boundary: 8 = (8/5)*5
    assert satisfies(rainbow, ExactlyKColors(3))
    assert not satisfies(rainbow, ExactlyKColors(2))


def test_mean_counts_isolated_vertices():
    # rainbow K_3 has color-degree sum 6; mean 3/2 fails on 3 vertices
    # (6 > 9/2) but holds exactly once an isolated vertex joins n (6 <= 6)
    bare = EdgeColoring(K3, [0, 1, 2])
    assert not satisfies(bare, RhoMean(Fraction(3, 2)))
    padded = EdgeColoring(Graph(4, [(0, 1), (0, 2), (1, 2)]), [0, 1, 2])
    assert satisfies(padded, RhoMean(Fraction(3, 2)))


def test_local_implies_mean():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(1, 6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        col = EdgeColoring(Graph(n, edges), [rng.randrange(3) for _ in edges])
        for k in (1, 2, 3):
            if satisfies(col, KLocal(k)):
                assert satisfies(col, RhoMean(k))


def test_constraint_strings():
    for text in ("colors:2", "local:3", "mean:2", "mean:5/3"):
        assert constraint_to_string(constraint_from_string(text)) == text
    with pytest.raises(ValueError):
        constraint_from_string("mean")
    with pytest.raises(ValueError):
        constraint_from_string("strict:2")
    with pytest.raises(ValueError):
        constraint_from_string("local:0")
    with pytest.raises(ValueError):
        constraint_from_string("mean:1/2")


def test_find_monochromatic_examples():
    k5 = k5_no_mono_triangle().coloring
    assert find_monochromatic(k5, K3) is None
    mono6 = EdgeColoring(complete_graph(6), [0] * 15)
    hit = find_monochromatic(mono6, K3)
    assert hit is not None and hit[0] == 0
    # any 2-coloring of K_6 has a monochromatic triangle
    rng = random.Random(9)
    g6 = complete_graph(6)
    for _ in range(50):
        col = EdgeColoring(g6, [rng.randrange(2) for _ in range(15)])
        assert find_monochromatic(col, K3) is not None


def test_find_monochromatic_returns_lowest_color():
    g = complete_graph(6)
    # color 0: triangle on 0,1,2 plus fill; color 1: triangle on 3,4,5
    colors = []
    tri0 = {(0, 1), (0, 2), (1, 2)}
    tri1 = {(3, 4), (3, 5), (4, 5)}
    for e in g.edges:
        colors.append(0 if e in tri0 else (1 if e in tri1 else 2))
    hit = find_monochromatic(EdgeColoring(g, colors), K3)
    assert hit is not None
    color, emb = hit
    assert color == 0 and set(emb) == {0, 1, 2}


def test_find_monochromatic_matches_brute_force():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(3, 6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.7]
        g = Graph(n, edges)
        colors = tuple(rng.randrange(3) for _ in edges)
        col = EdgeColoring(g, colors)
        mono, _, _, _ = coloring_profile(g, col.colors)
        assert (find_monochromatic(col, K3) is not None) == mono


def test_find_monochromatic_matches_brute_force_general_patterns():
    # oracle: per color class, all injective maps (not just triangles)
    from helpers import brute_force_has_subgraph

    rng = random.Random(63)
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    p3 = Graph(3, [(0, 1), (1, 2)])
    for _ in range(60):
        n = rng.randint(2, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.7]
        col = EdgeColoring(Graph(n, edges), [rng.randrange(2) for _ in edges])
        for h in (K3, c4, p3):
            expected = None
            for i in range(col.q):
                if brute_force_has_subgraph(col.color_class(i), h):
                    expected = i
                    break
            got = find_monochromatic(col, h)
            assert (got[0] if got else None) == expected


def test_canonical_code_budget():
    from ramsey_turan import BudgetExceededError, canonical_graph_code, empty_graph

    big = Graph(17, [(0, 1)])
    with pytest.raises(BudgetExceededError):
        canonical_code(EdgeColoring(big, [0]))
    with pytest.raises(BudgetExceededError):
        canonical_graph_code(empty_graph(17))


def test_canonical_code_color_swap_and_relabel():
    k5 = k5_no_mono_triangle().coloring
    code = canonical_code(k5)
    assert canonical_code(permuted_coloring(k5, list(range(5)), [1, 0])) == code
    assert canonical_code(permuted_coloring(k5, [4, 2, 0, 3, 1], [0, 1])) == code


def test_canonical_code_invariance_random():
    rng = random.Random(101)
    for _ in range(1000):
        n = rng.randint(1, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        col = EdgeColoring(Graph(n, edges), [rng.randrange(3) for _ in edges])
        vperm = list(range(n))
        rng.shuffle(vperm)
        cperm = list(range(col.q))
        rng.shuffle(cperm)
        assert canonical_code(col) == canonical_code(permuted_coloring(col, vperm, cperm))


def test_canonical_code_separates_mono_triangle_counts():
    rng = random.Random(55)
    g5 = complete_graph(5)
    k5 = k5_no_mono_triangle().coloring
    base_code = canonical_code(k5)
    checked = 0
    while checked < 50:
        col = EdgeColoring(g5, [rng.randrange(2) for _ in range(10)])
        if count_monochromatic_triangles(col) != count_monochromatic_triangles(k5):
            assert canonical_code(col) != base_code
            checked += 1


def test_canonical_code_separates_random_pairs_by_invariant():
    rng = random.Random(77)
    g = complete_graph(5)
    partitions = []
    for colors in set_partition_strings(10):
        partitions.append(colors)
        if len(partitions) == 400:
            break
    for _ in range(60):
        a = EdgeColoring(g, partitions[rng.randrange(len(partitions))])
        b = EdgeColoring(g, partitions[rng.randrange(len(partitions))])
        if count_monochromatic_triangles(a) != count_monochromatic_triangles(b):
            assert canonical_code(a) != canonical_code(b)
