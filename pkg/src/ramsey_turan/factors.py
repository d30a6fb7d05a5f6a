"""Clique-factor existence checks (triangle factors, triangles plus a few
larger cliques), found by canonical backtracking from the lowest uncovered
vertex."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph_core import Graph, iter_bits


@dataclass(frozen=True)
class CliqueFactor:
    """Partition of the vertex set into blocks, each inducing a clique."""

    blocks: tuple[tuple[int, ...], ...]


def verify_factor(g: Graph, factor: CliqueFactor) -> bool:
    """Blocks are disjoint, cover every vertex, and each induces a clique."""
    seen = 0
    for block in factor.blocks:
        bm = 0
        for v in block:
            if not 0 <= v < g.n or bm >> v & 1:
                return False
            bm |= 1 << v
        if bm & seen or not g.is_clique(bm):
            return False
        seen |= bm
    return seen == (1 << g.n) - 1


def clique_factor(g: Graph, sizes: Iterable[int]) -> Optional[CliqueFactor]:
    """Partition of V(g) into cliques with exactly the requested size
    multiset, or None. Blocks always extend from the lowest uncovered
    vertex, which prunes symmetric block orderings."""
    remaining = sorted(sizes)
    if any(s < 1 for s in remaining):
        raise ValueError("block sizes must be >= 1")
    if sum(remaining) != g.n:
        raise ValueError(f"block sizes sum to {sum(remaining)}, need {g.n}")
    blocks: list[tuple[int, ...]] = []

    def backtrack(uncovered: int) -> bool:
        if not uncovered:
            return True
        v = (uncovered & -uncovered).bit_length() - 1
        tried: set[int] = set()
        for idx, s in enumerate(remaining):
            if s in tried:
                continue
            tried.add(s)
            remaining.pop(idx)
            cand = uncovered & g.adj[v] & ~((1 << (v + 1)) - 1)
            for extra in combinations(tuple(iter_bits(cand)), s - 1):
                block_mask = 1 << v
                for w in extra:
                    block_mask |= 1 << w
                if not g.is_clique(block_mask):
                    continue
                blocks.append((v, *extra))
                if backtrack(uncovered & ~block_mask):
                    return True
                blocks.pop()
            remaining.insert(idx, s)
        return False

    if backtrack((1 << g.n) - 1):
        return CliqueFactor(tuple(blocks))
    return None


def near_triangle_factor(g: Graph) -> Optional[CliqueFactor]:
    """Factor of g into triangles plus, depending on n mod 3, one K_4, two
    K_4, or one K_5 (the two n = 2 mod 3 shapes tried in that order).

    Pure checker: no minimum-degree hypothesis is assumed; graphs missing
    the factor simply return None.
    """
    n = g.n
    if n < 3:
        raise ValueError("factors need at least 3 vertices")
    residue = n % 3
    if residue == 0:
        candidates = [[3] * (n // 3)]
    elif residue == 1:
        candidates = [[3] * ((n - 4) // 3) + [4]]
    else:
        candidates = []
        if n >= 8:
            candidates.append([3] * ((n - 8) // 3) + [4, 4])
        candidates.append([3] * ((n - 5) // 3) + [5])
    for sizes in candidates:
        factor = clique_factor(g, sizes)
        if factor is not None:
            return factor
    return None
