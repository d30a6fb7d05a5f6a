"""Bitset-backed simple graphs and the exact graph parameters used everywhere else.

Vertices are integers 0..n-1 and adjacency is one bitmask per vertex, so any
neighborhood intersection is a single machine-word AND for every graph this
project handles (n <= 64).
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64

#: Exact chromatic number is only offered for small pattern graphs.
CHROMATIC_MAX_VERTICES = 16


class BudgetExceededError(RuntimeError):
    """An exact routine was asked to run beyond its configured size budget."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex ids set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1.

    ``adj[v]`` is the neighbor bitmask of ``v``; edges are exposed as the
    lexicographically sorted tuple of pairs ``(u, v)`` with ``u < v``.
    """

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges: Optional[tuple[tuple[int, int], ...]] = None

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            out = []
            for u in range(self.n):
                rest = self.adj[u] >> (u + 1)
                for off in iter_bits(rest):
                    out.append((u, u + 1 + off))
            self._edges = tuple(out)
        return self._edges

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        g = Graph(self.n)
        g.adj = tuple((full & ~a) & ~(1 << v) for v, a in enumerate(self.adj))
        return g

    def induced(self, vertices: int) -> "Graph":
        """Induced subgraph on the bitmask ``vertices``, relabeled to 0..k-1
        in increasing order of the original ids."""
        keep = list(iter_bits(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v])
            for i, u in enumerate(keep)
            for v in keep[i + 1:]
            if self.adj[u] >> v & 1
        ]
        return Graph(len(keep), edges)

    def is_clique(self, vertices: int) -> bool:
        for v in iter_bits(vertices):
            if (vertices & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def turan_graph(n: int, k: int) -> Graph:
    """Complete k-partite graph on n vertices with classes as equal as
    possible; vertex i sits in class ``i % k``."""
    if k < 1:
        raise ValueError("turan_graph needs k >= 1")
    if n < 0:
        raise ValueError("turan_graph needs n >= 0")
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if u % k != v % k
    ]
    return Graph(n, edges)


def turan_edge_count(n: int, k: int) -> int:
    """Edge count of turan_graph(n, k), computed arithmetically."""
    if k < 1:
        raise ValueError("turan_edge_count needs k >= 1")
    if n < 0:
        raise ValueError("turan_edge_count needs n >= 0")
    big = n % k
    size = n // k
    return comb(n, 2) - big * comb(size + 1, 2) - (k - big) * comb(size, 2)


def find_clique(g: Graph, s: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least s-clique of g as an increasing vertex tuple,
    or None."""
    if s < 1:
        raise ValueError("clique size must be >= 1")
    if s > g.n:
        return None
    full = (1 << g.n) - 1
    chosen: list[int] = []

    def extend(cand: int) -> bool:
        if len(chosen) == s:
            return True
        # not enough candidates left to finish
        if len(chosen) + cand.bit_count() < s:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            chosen.append(v)
            if extend(cand & g.adj[v]):
                return True
            chosen.pop()
        return False

    if extend(full):
        return tuple(chosen)
    return None


def find_subgraph(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """First injective embedding of h into g (as a subgraph, not induced)
    under backtracking in vertex order; None if there is none.

    The result maps h-vertex i to g-vertex ``result[i]``.
    """
    if h.n > g.n:
        return None
    full = (1 << g.n) - 1
    image: list[int] = []
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == h.n:
            return True
        cand = full & ~used
        mapped_nbrs = h.adj[i] & ((1 << i) - 1)
        for hj in iter_bits(mapped_nbrs):
            cand &= g.adj[image[hj]]
        while cand:
            gv = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            image.append(gv)
            used |= 1 << gv
            if extend(i + 1):
                return True
            image.pop()
            used ^= 1 << gv
        return False

    if extend(0):
        return tuple(image)
    return None


def clique_number(g: Graph) -> int:
    """Exact clique number via branch and bound on candidate bitmasks."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, cand & g.adj[v])

    expand(0, (1 << g.n) - 1)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by inclusion-exclusion over vertex subsets.

    Counts coverings of V by k independent sets; the least k with a nonzero
    count is the chromatic number. O(2^n) space, hence the size budget.
    """
    n = g.n
    if n > CHROMATIC_MAX_VERTICES:
        raise BudgetExceededError(
            f"exact chromatic number limited to n <= {CHROMATIC_MAX_VERTICES}, got {n}"
        )
    if n == 0:
        return 0
    full = 1 << n
    # ind[S] = number of independent subsets of S (empty set included)
    ind = [0] * full
    ind[0] = 1
    for s in range(1, full):
        v = (s & -s).bit_length() - 1
        without = s & (s - 1)
        ind[s] = ind[without] + ind[without & ~g.adj[v]]
    sign = [1 if (n - s.bit_count()) % 2 == 0 else -1 for s in range(full)]
    powers = [1] * full
    for k in range(1, n + 1):
        total = 0
        for s in range(full):
            powers[s] *= ind[s]
            total += sign[s] * powers[s]
        if total > 0:
            return k
    raise AssertionError("unreachable: K_n is n-colorable")
