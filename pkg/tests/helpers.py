"""Shared brute-force oracles for the test suite.

Everything here stays deliberately dumb and independent of the library's
search paths: full enumeration over injective maps, restricted-growth
strings for colorings, and naive partition generators.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from ramsey_turan import Graph, EdgeColoring, ColoredGraph, canonical_graph_code


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def brute_force_has_subgraph(g: Graph, h: Graph) -> bool:
    """All injective maps V(h) -> V(g), edge preservation checked directly."""
    if h.n > g.n:
        return False
    for image in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(image[u], image[v]) for u, v in h.edges):
            return True
    return False


def brute_force_chromatic(g: Graph) -> int:
    """Smallest k admitting a proper vertex k-coloring, by backtracking."""
    if g.n == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def assign(v: int) -> bool:
            if v == g.n:
                return True
            for c in range(min(v + 1, k)):
                if all(not g.has_edge(v, w) or colors[w] != c for w in range(v)):
                    colors[v] = c
                    if assign(v + 1):
                        return True
                    colors[v] = -1
            return False

        return assign(0)

    for k in range(1, g.n + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable")


def set_partition_strings(m: int) -> Iterator[tuple[int, ...]]:
    """All restricted-growth strings of length m: every edge coloring once
    up to color relabeling."""
    if m == 0:
        yield ()
        return
    word = [0] * m

    def rec(i: int, maxc: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(word)
            return
        for c in range(maxc + 2):
            word[i] = c
            yield from rec(i + 1, max(maxc, c))

    yield from rec(1, 0)


def coloring_profile(g: Graph, colors: tuple[int, ...]):
    """(has mono triangle, color-degree sum, max color degree, #colors) of a
    coloring given as a color-per-edge tuple, computed naively."""
    edge_color = dict(zip(g.edges, colors))
    mono = False
    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            x, y, z = edge_color[(a, b)], edge_color[(a, c)], edge_color[(b, c)]
            if x == y == z:
                mono = True
                break
    seen = [set() for _ in range(g.n)]
    for (u, v), c in edge_color.items():
        seen[u].add(c)
        seen[v].add(c)
    cdegs = [len(s) for s in seen]
    q = len(set(colors)) if colors else 0
    return mono, sum(cdegs), max(cdegs, default=0), q


def all_graphs_up_to_iso(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices."""
    seen = set()
    out = []
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
        key = canonical_graph_code(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def random_colored_graph(
    rng: random.Random, n_max: int = 5, q_max: int = 3, min_edges: int = 1
) -> ColoredGraph:
    while True:
        n = rng.randint(1, n_max)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        if len(edges) < min_edges:
            continue
        g = Graph(n, edges)
        col = EdgeColoring(g, [rng.randrange(q_max) for _ in edges])
        return ColoredGraph(g, col)


def permuted_coloring(col: EdgeColoring, vperm, cperm) -> EdgeColoring:
    host = col.host
    g2 = Graph(host.n, [(vperm[u], vperm[v]) for u, v in host.edges])
    mapping = {
        (vperm[u], vperm[v]): cperm[c] for (u, v), c in col.as_edge_map().items()
    }
    return EdgeColoring.from_edge_map(g2, mapping)


def partitions_into_sizes(vertices: list[int], sizes: list[int]) -> Iterator[list[tuple[int, ...]]]:
    """All partitions of the vertex list into blocks of the given size
    multiset (blocks anchored at their lowest member to avoid repeats)."""
    if not vertices:
        yield []
        return
    v, rest = vertices[0], vertices[1:]
    tried = set()
    for idx, s in enumerate(sizes):
        if s in tried:
            continue
        tried.add(s)
        remaining_sizes = sizes[:idx] + sizes[idx + 1:]
        for extra in itertools.combinations(rest, s - 1):
            leftover = [w for w in rest if w not in extra]
            for tail in partitions_into_sizes(leftover, remaining_sizes):
                yield [(v, *extra)] + tail
