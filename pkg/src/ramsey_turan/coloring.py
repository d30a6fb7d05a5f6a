"""Edge colorings, the three coloring-class predicates, and canonical codes.

A coloring assigns one small-integer color to every edge of a host graph.
Color ids are always normalized to first-use order along the host's sorted
edge list, which makes equal colorings literally equal tuples and keeps
search output reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .graph_core import (
    BudgetExceededError,
    Graph,
    find_subgraph,
    iter_bits,
)

CANON_MAX_VERTICES = 16

# edge labels used by the canonical-code machinery
_NON_EDGE = -2
_UNCOLORED = -1  # pinned sentinel: never permuted with real colors


def _normalize_colors(colors: Sequence[int]) -> tuple[int, ...]:
    """Relabel colors to first-use order along the edge sequence."""
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        out.append(relabel.setdefault(c, len(relabel)))
    return tuple(out)


class EdgeColoring:
    """Total edge coloring of a host graph, normalized on construction."""

    __slots__ = ("host", "colors", "q", "_cdeg")

    def __init__(self, host: Graph, colors: Sequence[int]):
        colors = tuple(colors)
        if len(colors) != len(host.edges):
            raise ValueError(
                f"expected {len(host.edges)} colors for the host edges, got {len(colors)}"
            )
        if any(c < 0 for c in colors):
            raise ValueError("color ids must be non-negative")
        self.host = host
        self.colors = _normalize_colors(colors)
        self.q = max(self.colors) + 1 if self.colors else 0
        self._cdeg: Optional[tuple[int, ...]] = None

    @classmethod
    def from_edge_map(cls, host: Graph, mapping: Mapping[tuple[int, int], int]) -> "EdgeColoring":
        """Build from a dict keyed by edges, either endpoint order accepted."""
        colors = []
        for u, v in host.edges:
            if (u, v) in mapping:
                colors.append(mapping[(u, v)])
            elif (v, u) in mapping:
                colors.append(mapping[(v, u)])
            else:
                raise ValueError(f"edge ({u},{v}) missing from the color map")
        return cls(host, colors)

    def color_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        idx = self.host.edges.index((u, v))
        return self.colors[idx]

    def color_degrees(self) -> tuple[int, ...]:
        """c(v) for every vertex: number of distinct colors at v."""
        if self._cdeg is None:
            seen: list[set[int]] = [set() for _ in range(self.host.n)]
            for (u, v), c in zip(self.host.edges, self.colors):
                seen[u].add(c)
                seen[v].add(c)
            self._cdeg = tuple(len(s) for s in seen)
        return self._cdeg

    def color_degree(self, v: int) -> int:
        if not 0 <= v < self.host.n:
            raise ValueError(f"vertex {v} out of range for n={self.host.n}")
        return self.color_degrees()[v]

    def total_color_incidence(self) -> int:
        """Sum of c(v) over all vertices."""
        return sum(self.color_degrees())

    def color_class(self, color: int) -> Graph:
        """Spanning subgraph carrying exactly the edges of one color."""
        edges = [e for e, c in zip(self.host.edges, self.colors) if c == color]
        return Graph(self.host.n, edges)

    def color_classes(self) -> tuple[Graph, ...]:
        return tuple(self.color_class(i) for i in range(self.q))

    def as_edge_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.host.edges, self.colors))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self.host == other.host
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.host, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.host.n}, m={len(self.colors)}, q={self.q})"


@dataclass(frozen=True)
class ExactlyKColors:
    """At most k colors overall (classical k-coloring class)."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("ExactlyKColors needs k >= 1")


@dataclass(frozen=True)
class KLocal:
    """Every vertex meets at most k colors."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("KLocal needs k >= 1")


@dataclass(frozen=True)
class RhoMean:
    """Average color degree at most rho; rho kept as an exact fraction."""

    rho: Fraction

    def __init__(self, rho) -> None:
        rho = Fraction(rho)
        if rho < 1:
            raise ValueError("RhoMean needs rho >= 1")
        object.__setattr__(self, "rho", rho)


ColoringConstraint = Union[ExactlyKColors, KLocal, RhoMean]


def constraint_from_string(text: str) -> ColoringConstraint:
    """Parse ``colors:K``, ``local:K``, ``mean:NUM`` or ``mean:NUM/DEN``."""
    kind, _, arg = text.partition(":")
    if not arg:
        raise ValueError(f"malformed constraint {text!r}")
    if kind == "colors":
        return ExactlyKColors(int(arg))
    if kind == "local":
        return KLocal(int(arg))
    if kind == "mean":
        return RhoMean(Fraction(arg))
    raise ValueError(f"unknown constraint kind {kind!r}")


def constraint_to_string(constraint: ColoringConstraint) -> str:
    if isinstance(constraint, ExactlyKColors):
        return f"colors:{constraint.k}"
    if isinstance(constraint, KLocal):
        return f"local:{constraint.k}"
    if isinstance(constraint, RhoMean):
        r = constraint.rho
        return f"mean:{r.numerator}" if r.denominator == 1 else f"mean:{r}"
    raise TypeError(f"not a coloring constraint: {constraint!r}")


def satisfies(coloring: EdgeColoring, constraint: ColoringConstraint) -> bool:
    """Exact membership test for the three coloring classes.

    The mean test is the rational comparison sum(c(v)) * den <= num * n, so
    boundary cases (the sum hitting rho*n exactly) never depend on rounding.
    Isolated vertices contribute 0 to the sum but do count in n.
    """
    if isinstance(constraint, ExactlyKColors):
        return coloring.q <= constraint.k
    if isinstance(constraint, KLocal):
        return max(coloring.color_degrees(), default=0) <= constraint.k
    if isinstance(constraint, RhoMean):
        rho = constraint.rho
        total = coloring.total_color_incidence()
        return total * rho.denominator <= rho.numerator * coloring.host.n
    raise TypeError(f"not a coloring constraint: {constraint!r}")


def find_monochromatic(
    coloring: EdgeColoring, h: Graph
) -> Optional[tuple[int, tuple[int, ...]]]:
    """Lowest color whose class contains a copy of h, with the embedding.

    Copies are plain subgraph embeddings (not induced). Returns None when no
    color class contains one.
    """
    for i in range(coloring.q):
        emb = find_subgraph(coloring.color_class(i), h)
        if emb is not None:
            return i, emb
    return None


def count_monochromatic_triangles(coloring: EdgeColoring) -> int:
    """Number of vertex triples spanning a one-colored triangle."""
    n = coloring.host.n
    count = 0
    for i in range(coloring.q):
        adj = coloring.color_class(i).adj
        for u in range(n):
            for v in iter_bits(adj[u] >> (u + 1)):
                v += u + 1
                count += (adj[u] & adj[v] & ~((1 << (v + 1)) - 1)).bit_count()
    return count


# ---------------------------------------------------------------------------
# Canonical codes
#
# Two colored graphs get the same code exactly when one can be turned into
# the other by relabeling vertices and relabeling colors simultaneously.
# The code is found by partition refinement plus exhaustive completion:
# refine an ordered vertex partition with color-relabeling-invariant
# signatures, individualize vertices from the first non-singleton cell, and
# take the minimal serialized form over all discrete orderings reached.
# ---------------------------------------------------------------------------


def _label_matrix(host: Graph, labels: Sequence[int]) -> list[list[int]]:
    n = host.n
    lab = [[_NON_EDGE] * n for _ in range(n)]
    for (u, v), c in zip(host.edges, labels):
        lab[u][v] = c
        lab[v][u] = c
    return lab


def _refine(n: int, lab: Sequence[Sequence[int]], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        cell_of = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        ncells = len(cells)

        def signature(v: int):
            struct = [0] * ncells
            pinned = [0] * ncells
            per_color: dict[int, list[int]] = {}
            row = lab[v]
            for u in range(n):
                l = row[u]
                if l == _NON_EDGE or u == v:
                    continue
                cj = cell_of[u]
                struct[cj] += 1
                if l == _UNCOLORED:
                    pinned[cj] += 1
                else:
                    vec = per_color.get(l)
                    if vec is None:
                        vec = per_color[l] = [0] * ncells
                    vec[cj] += 1
            return (
                tuple(struct),
                tuple(pinned),
                tuple(sorted(tuple(vec) for vec in per_color.values())),
            )

        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(signature(v), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for _, members in sorted(groups.items(), key=lambda kv: kv[0]):
                new_cells.append(tuple(members))
        if not changed:
            return new_cells
        cells = new_cells


def _encode(n: int, lab: Sequence[Sequence[int]], order: Sequence[int]) -> bytes:
    colmap: dict[int, int] = {}
    parts = [f"{n}"]
    for a in range(n):
        va = order[a]
        row = lab[va]
        for b in range(a + 1, n):
            l = row[order[b]]
            if l == _NON_EDGE:
                continue
            if l == _UNCOLORED:
                sym = -1
            else:
                sym = colmap.setdefault(l, len(colmap))
            parts.append(f"{a},{b},{sym}")
    return ";".join(parts).encode("ascii")


def _swap_class_reps(cell: Sequence[int], lab: Sequence[Sequence[int]]) -> list[int]:
    """One representative per transposition-equivalence class of a cell.

    Vertices x, y are equivalent when swapping them is an automorphism of
    the labeled graph (identical label rows away from the pair); branches of
    equivalent vertices reach identical minimal codes, so one suffices.
    """
    reps: list[int] = []
    for v in cell:
        row_v = lab[v]
        for r in reps:
            row_r = lab[r]
            if all(row_v[u] == row_r[u] for u in range(len(row_v)) if u != v and u != r):
                break
        else:
            reps.append(v)
    return reps


def _canonical_code_from_labels(host: Graph, labels: Sequence[int]) -> bytes:
    n = host.n
    if n == 0:
        return b"0"
    lab = _label_matrix(host, labels)
    best: Optional[bytes] = None

    def complete(cells: list[tuple[int, ...]]) -> None:
        nonlocal best
        cells = _refine(n, lab, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _encode(n, lab, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            return
        cell = cells[target]
        for v in _swap_class_reps(cell, lab):
            rest = tuple(w for w in cell if w != v)
            complete(cells[:target] + [(v,), rest] + cells[target + 1:])

    complete([tuple(range(n))])
    assert best is not None
    return best


def canonical_code(coloring: EdgeColoring) -> bytes:
    """Isomorphism-invariant code of a colored graph.

    Codes of two colorings are equal iff the colored graphs are isomorphic
    under simultaneous vertex and color relabeling.
    """
    if coloring.host.n > CANON_MAX_VERTICES:
        raise BudgetExceededError(
            f"canonical codes limited to n <= {CANON_MAX_VERTICES}, got {coloring.host.n}"
        )
    return _canonical_code_from_labels(coloring.host, coloring.colors)


def canonical_graph_code(g: Graph) -> bytes:
    """Canonical code of an uncolored graph (all edges treated as one color)."""
    if g.n > CANON_MAX_VERTICES:
        raise BudgetExceededError(
            f"canonical codes limited to n <= {CANON_MAX_VERTICES}, got {g.n}"
        )
    return _canonical_code_from_labels(g, [0] * len(g.edges))


def partial_canonical_code(host: Graph, partial_colors: Sequence[Optional[int]]) -> bytes:
    """Canonical code of a partially colored host.

    Uncolored edges are carried as a pinned sentinel label that never trades
    places with a real color, so equal codes mean the partial states are
    isomorphic as (host, colored-prefix) structures. Used by the search
    engine for isomorph rejection at shallow depths.
    """
    labels = [(_UNCOLORED if c is None else c) for c in partial_colors]
    return _canonical_code_from_labels(host, labels)
