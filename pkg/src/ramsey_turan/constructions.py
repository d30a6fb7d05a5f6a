"""Extremal and proof-device constructions: the triangle-free 2-coloring of
K_5, blow-ups, the balanced 5-partite witness, and mean-sparsification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .graph_core import Graph, MAX_VERTICES, complete_graph
from .coloring import EdgeColoring, RhoMean, satisfies


@dataclass(frozen=True)
class ColoredGraph:
    """A graph together with an edge coloring of that same graph."""

    graph: Graph
    coloring: EdgeColoring

    def __post_init__(self) -> None:
        if self.coloring.host != self.graph:
            raise ValueError("coloring host differs from the given graph")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @property
    def q(self) -> int:
        return self.coloring.q


def k5_no_mono_triangle() -> ColoredGraph:
    """K_5 split into two edge-disjoint 5-cycles, one color each.

    Both color classes are triangle-free, every vertex meets both colors,
    so the coloring is 2-local and 2-mean with color-degree sum exactly 10.
    """
    g = complete_graph(5)
    cycle = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    col = EdgeColoring(g, [0 if e in cycle else 1 for e in g.edges])
    return ColoredGraph(g, col)


def blow_up(cg: ColoredGraph, sizes: Sequence[int]) -> ColoredGraph:
    """Replace vertex v by an independent set of sizes[v] clones; an edge uv
    becomes the complete bipartite graph between the clone sets, every copy
    inheriting the color of uv."""
    if len(sizes) != cg.n:
        raise ValueError(f"need one size per vertex ({cg.n}), got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes must be non-negative")
    total = sum(sizes)
    if total > MAX_VERTICES:
        raise ValueError(f"blow-up on {total} vertices exceeds the {MAX_VERTICES}-vertex cap")
    offset = [0] * cg.n
    acc = 0
    for v, s in enumerate(sizes):
        offset[v] = acc
        acc += s
    edge_colors = {}
    for (u, v), c in zip(cg.graph.edges, cg.coloring.colors):
        for i in range(sizes[u]):
            for j in range(sizes[v]):
                edge_colors[(offset[u] + i, offset[v] + j)] = c
    g = Graph(total, edge_colors.keys())
    return ColoredGraph(g, EdgeColoring.from_edge_map(g, edge_colors))


def turan5_witness(n: int) -> ColoredGraph:
    """Balanced 5-partite blow-up of the K_5 coloring: t(n,5) edges, no
    monochromatic triangle, 2-local and exactly 2-mean."""
    if not 5 <= n <= MAX_VERTICES:
        raise ValueError(f"witness needs 5 <= n <= {MAX_VERTICES}, got {n}")
    big, size = n % 5, n // 5
    sizes = [size + 1 if i < big else size for i in range(5)]
    return blow_up(k5_no_mono_triangle(), sizes)


class SparsifyResult(NamedTuple):
    result: ColoredGraph
    edges_removed: int


def sparsify_to_mean(cg: ColoredGraph, rho) -> SparsifyResult:
    """Delete all edges at one vertex at a time until the coloring is
    rho-mean, greedily clearing a non-isolated vertex of maximum color
    degree (lowest id on ties). The vertex set is kept; the surviving
    coloring is renormalized."""
    constraint = RhoMean(Fraction(rho))
    graph, col = cg.graph, cg.coloring
    removed = 0
    while not satisfies(col, constraint):
        degs = col.color_degrees()
        victim = max(
            (v for v in range(graph.n) if graph.degree(v) > 0),
            key=lambda v: (degs[v], -v),
        )
        keep = [(e, c) for e, c in zip(graph.edges, col.colors) if victim not in e]
        removed += graph.edge_count - len(keep)
        graph = Graph(graph.n, [e for e, _ in keep])
        col = EdgeColoring.from_edge_map(graph, dict(keep))
    return SparsifyResult(ColoredGraph(graph, col), removed)
