"""Exact, desk-scale regularity machinery: pair densities, gamma-regular
pairs by full subset enumeration, equitable partitions, cluster graphs and
majority-color cluster colorings.

Regularity is a universally quantified statement over subset pairs, so the
only faithful check at this scale is brute force; class sizes are capped to
keep that enumeration exact and affordable. All densities and thresholds
are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .graph_core import BudgetExceededError, Graph, iter_bits, mask_of
from .coloring import EdgeColoring
from .constructions import ColoredGraph

REGULAR_PAIR_MAX_CLASS = 12


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty vertex classes covering 0..n-1, as bitmasks."""

    n: int
    classes: tuple[int, ...]

    def __post_init__(self) -> None:
        union = 0
        for cls in self.classes:
            if cls == 0:
                raise ValueError("partition classes must be non-empty")
            if cls & union:
                raise ValueError("partition classes must be disjoint")
            union |= cls
        if union != (1 << self.n) - 1:
            raise ValueError("partition classes must cover every vertex")

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Partition":
        return cls(n, tuple(mask_of(c) for c in classes))

    @property
    def m(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(c.bit_count() for c in self.classes)


def is_equitable(p: Partition) -> bool:
    """Class sizes differ by at most one."""
    sizes = p.sizes()
    return max(sizes) - min(sizes) <= 1


def cross_edge_count(g: Graph, a: int, b: int) -> int:
    return sum((g.adj[v] & b).bit_count() for v in iter_bits(a))


def density(g: Graph, a: int, b: int) -> Fraction:
    """Edge density between two disjoint non-empty vertex sets."""
    if a == 0 or b == 0:
        raise ValueError("density needs non-empty vertex sets")
    if a & b:
        raise ValueError("density needs disjoint vertex sets")
    return Fraction(cross_edge_count(g, a, b), a.bit_count() * b.bit_count())


def is_regular_pair(g: Graph, a: int, b: int, gamma) -> bool:
    """Is (A, B) gamma-regular: every X within A with |X| > gamma|A| and Y
    within B with |Y| > gamma|B| has |d(X,Y) - d(A,B)| < gamma?

    Checked by exhaustive subset enumeration with exact rational
    comparisons; class sizes are capped at REGULAR_PAIR_MAX_CLASS.
    """
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    if a == 0 or b == 0:
        raise ValueError("regularity needs non-empty vertex sets")
    if a & b:
        raise ValueError("regularity needs disjoint vertex sets")
    averts = tuple(iter_bits(a))
    bverts = tuple(iter_bits(b))
    na, nb = len(averts), len(bverts)
    if na > REGULAR_PAIR_MAX_CLASS or nb > REGULAR_PAIR_MAX_CLASS:
        raise BudgetExceededError(
            f"exact regularity limited to classes of <= {REGULAR_PAIR_MAX_CLASS} vertices"
        )
    num, den = gamma.numerator, gamma.denominator
    eab = cross_edge_count(g, a, b)
    sab = na * nb

    # row counts per B-subset: cnt[i][yset] = |N(averts[i]) & Y|
    cnt = []
    for v in averts:
        row = [0] * (1 << nb)
        adj = g.adj[v]
        for yset in range(1, 1 << nb):
            low = yset & -yset
            j = low.bit_length() - 1
            row[yset] = row[yset ^ low] + (adj >> bverts[j] & 1)
        cnt.append(row)

    y_sizes = [yset.bit_count() for yset in range(1 << nb)]
    for xset in range(1, 1 << na):
        xs = xset.bit_count()
        # qualifying X: |X| > gamma |A|
        if xs * den <= num * na:
            continue
        members = [i for i in range(na) if xset >> i & 1]
        for yset in range(1, 1 << nb):
            ys = y_sizes[yset]
            if ys * den <= num * nb:
                continue
            exy = 0
            for i in members:
                exy += cnt[i][yset]
            sxy = xs * ys
            # |exy/sxy - eab/sab| < gamma, cross-multiplied
            diff = exy * sab - eab * sxy
            if abs(diff) * den >= num * sxy * sab:
                return False
    return True


@dataclass(frozen=True)
class ClusterGraph:
    """Cluster graph of a partition: pair densities for every class pair,
    the regular pairs, and the edges (regular pairs of density >= eta).
    When built from a colored host it also carries the majority-color
    cluster coloring on its edges."""

    m: int
    gamma: Fraction
    eta: Fraction
    pair_density: dict[tuple[int, int], Fraction]
    regular_pairs: frozenset[tuple[int, int]]
    edges: frozenset[tuple[int, int]]
    cluster_coloring: Optional[dict[tuple[int, int], int]] = None

    def graph(self) -> Graph:
        return Graph(self.m, sorted(self.edges))

    def colored(self) -> ColoredGraph:
        """The cluster coloring as a normalized colored graph."""
        if self.cluster_coloring is None:
            raise ValueError("this cluster graph carries no coloring")
        g = self.graph()
        return ColoredGraph(g, EdgeColoring.from_edge_map(g, self.cluster_coloring))

    def mean_color_degree(self) -> Fraction:
        """Average number of colors incident with a cluster vertex."""
        cg = self.colored()
        return Fraction(cg.coloring.total_color_incidence(), self.m)


def _cluster_core(
    g: Graph, p: Partition, gamma: Fraction, eta: Fraction
) -> tuple[dict[tuple[int, int], Fraction], frozenset, frozenset]:
    densities: dict[tuple[int, int], Fraction] = {}
    regular = set()
    edges = set()
    for i in range(p.m):
        for j in range(i + 1, p.m):
            a, b = p.classes[i], p.classes[j]
            d = density(g, a, b)
            densities[(i, j)] = d
            if is_regular_pair(g, a, b, gamma):
                regular.add((i, j))
                if d >= eta:
                    edges.add((i, j))
    return densities, frozenset(regular), frozenset(edges)


def cluster_graph(g: Graph, p: Partition, gamma, eta) -> ClusterGraph:
    """Cluster graph on the partition classes: ij is an edge when (V_i, V_j)
    is a gamma-regular pair with density at least eta."""
    gamma, eta = Fraction(gamma), Fraction(eta)
    if p.n != g.n:
        raise ValueError("partition and graph disagree on the vertex count")
    densities, regular, edges = _cluster_core(g, p, gamma, eta)
    return ClusterGraph(p.m, gamma, eta, densities, regular, edges)


def majority_color_clusters(cg: ColoredGraph, p: Partition, gamma, eta) -> ClusterGraph:
    """Cluster graph of the colored host with each cluster edge colored by
    the most frequent color among its cross edges (smallest color id wins
    ties)."""
    gamma, eta = Fraction(gamma), Fraction(eta)
    if p.n != cg.n:
        raise ValueError("partition and graph disagree on the vertex count")
    densities, regular, edges = _cluster_core(cg.graph, p, gamma, eta)
    coloring: dict[tuple[int, int], int] = {}
    edge_color = cg.coloring.as_edge_map()
    for i, j in edges:
        a, b = p.classes[i], p.classes[j]
        freq: dict[int, int] = {}
        for u in iter_bits(a):
            for v in iter_bits(cg.graph.adj[u] & b):
                c = edge_color[(u, v) if u < v else (v, u)]
                freq[c] = freq.get(c, 0) + 1
        coloring[(i, j)] = max(freq.items(), key=lambda kv: (kv[1], -kv[0]))[0]
    return ClusterGraph(p.m, gamma, eta, densities, regular, edges, coloring)
