"""Exact decision and optimization engine.

The decision core colors host edges in lexicographic order, branching over
the colors already in use plus at most one fresh color (color classes are
unlabeled, so one fresh branch collapses the color-relabeling symmetry
exactly). Three prunes keep the tree small:

  (a) a would-be monochromatic copy of the pattern through the new edge,
  (b) an exact rational lower bound on the final color-degree sum against
      rho * n (color degrees only grow as edges get colored),
  (c) isomorph rejection of partially colored states at shallow depths via
      canonical codes with the uncolored edges pinned.

Everything is sequential and deterministic: values, witnesses and node
counts are identical across runs regardless of the requested thread count
(threads are accepted for interface compatibility; exploration order is
fixed, so results are trivially independent of them).
"""

from __future__ import annotations

import hashlib
import itertools
import os
from dataclasses import dataclass, field
from math import comb
from typing import Mapping, Optional, Sequence

from . import __version__ as ENGINE_VERSION
from .graph_core import (
    BudgetExceededError,
    Graph,
    complete_graph,
    iter_bits,
)
from .coloring import (
    ColoringConstraint,
    EdgeColoring,
    ExactlyKColors,
    KLocal,
    RhoMean,
    canonical_code,
    canonical_graph_code,
    constraint_to_string,
    find_monochromatic,
    partial_canonical_code,
    satisfies,
)
from .constructions import ColoredGraph

LOWER_BOUND_WITNESS = "LowerBoundWitness"
EXHAUSTIVE_UPPER_BOUND = "ExhaustiveUpperBound"
RAMSEY_VALUE = "RamseyValue"
ORACLE_VALUE = "OracleValue"


@dataclass(frozen=True)
class SearchBudget:
    """Size limits for the exact searches; all configurable, none hard-coded.

    Environment overrides (read by :meth:`from_env`): RT_BUDGET_DECISION,
    RT_BUDGET_RT, RT_BUDGET_RAMSEY, RT_BUDGET_COMPLEMENT, RT_BUDGET_ISO_DEPTH,
    RT_BUDGET_THREADS.
    """

    decision_max_n: int = 10     # largest host for exists_good_coloring
    rt_max_n: int = 8            # largest n for rt_exact
    ramsey_max_n: int = 10       # largest n_max for ramsey_exact
    complement_cap: int = 4      # rt_exact scans hosts missing at most this many edges
    iso_depth: int = 6           # isomorph rejection for the first this many edges
    threads: int = 1             # accepted but does not change exploration order

    def __post_init__(self) -> None:
        for name in ("decision_max_n", "rt_max_n", "ramsey_max_n", "threads"):
            if getattr(self, name) < 1:
                raise ValueError(f"budget {name} must be positive")
        if self.complement_cap < 0 or self.iso_depth < 0:
            raise ValueError("budget caps must be non-negative")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "SearchBudget":
        env = os.environ if environ is None else environ
        base = cls()

        def get(name: str, default: int) -> int:
            raw = env.get(name)
            return default if raw is None else int(raw)

        return cls(
            decision_max_n=get("RT_BUDGET_DECISION", base.decision_max_n),
            rt_max_n=get("RT_BUDGET_RT", base.rt_max_n),
            ramsey_max_n=get("RT_BUDGET_RAMSEY", base.ramsey_max_n),
            complement_cap=get("RT_BUDGET_COMPLEMENT", base.complement_cap),
            iso_depth=get("RT_BUDGET_ISO_DEPTH", base.iso_depth),
            threads=get("RT_BUDGET_THREADS", base.threads),
        )


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact search.

    Lower-bound witnesses are independently re-checkable colored graphs;
    exhaustive kinds additionally carry the search-space description and
    deterministic node counts in the attestation.
    """

    kind: str
    value: Optional[int]
    witness: Optional[ColoredGraph]
    attestation: dict = field(default_factory=dict)


def pattern_label(h: Graph) -> str:
    """Stable human-readable name for a pattern graph (K3, C5, ...)."""
    n, m = h.n, h.edge_count
    if n >= 1 and m == comb(n, 2):
        return f"K{n}"
    if n >= 3 and m == n and all(h.degree(v) == 2 for v in range(n)):
        # connected 2-regular = one cycle
        seen = 1
        prev, cur = 0, h.neighbors(0)[0]
        while cur != 0:
            seen += 1
            nxt = [w for w in h.neighbors(cur) if w != prev][0]
            prev, cur = cur, nxt
        if seen == n:
            return f"C{n}"
    digest = hashlib.sha256(canonical_graph_code(h)).hexdigest()[:8]
    return f"G{n}e{m}-{digest}"


def _has_clique(adj: Sequence[int], cand: int, size: int) -> bool:
    if size <= 0:
        return True
    if cand.bit_count() < size:
        return False
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if _has_clique(adj, cand & adj[v], size - 1):
            return True
    return False


def _anchored_embedding(adj: Sequence[int], n: int, u: int, v: int, h: Graph) -> bool:
    """Does a copy of h using the edge (u, v) exist in the graph given by
    the adjacency masks ``adj``?"""
    hn = h.n
    if hn > n:
        return False
    full = (1 << n) - 1
    image = [-1] * hn

    def extend(order: list[int], pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        hv = order[pos]
        cand = full & ~used
        for hw in iter_bits(h.adj[hv]):
            img = image[hw]
            if img >= 0:
                cand &= adj[img]
        while cand:
            gv = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            image[hv] = gv
            if extend(order, pos + 1, used | (1 << gv)):
                return True
            image[hv] = -1
        return False

    for a, b in h.edges:
        rest = [x for x in range(hn) if x != a and x != b]
        for x, y in ((u, v), (v, u)):
            image = [-1] * hn
            image[a], image[b] = x, y
            if extend(rest, 0, (1 << x) | (1 << y)):
                return True
    return False


class _DecisionStats:
    __slots__ = ("nodes", "prune_mono", "prune_bound", "prune_local", "prune_iso")

    def __init__(self) -> None:
        self.nodes = 0
        self.prune_mono = 0
        self.prune_bound = 0
        self.prune_local = 0
        self.prune_iso = 0


def _decide(
    g: Graph, h: Graph, constraint: ColoringConstraint, iso_depth: int
) -> tuple[Optional[tuple[int, ...]], _DecisionStats]:
    """DFS for a constraint-satisfying coloring of g with no monochromatic h.

    Returns the color tuple (first-use normalized by construction) or None,
    plus deterministic search statistics.
    """
    stats = _DecisionStats()
    edges = g.edges
    m = len(edges)
    n = g.n

    if isinstance(constraint, RhoMean):
        mode = "mean"
        num, den = constraint.rho.numerator, constraint.rho.denominator
        cap = 0
    elif isinstance(constraint, KLocal):
        mode, num, den, cap = "local", 0, 0, constraint.k
    elif isinstance(constraint, ExactlyKColors):
        mode, num, den, cap = "colors", 0, 0, constraint.k
    else:
        raise TypeError(f"not a coloring constraint: {constraint!r}")

    hm = h.edge_count
    if hm == comb(h.n, 2) and h.n >= 2:
        clique_size: Optional[int] = h.n
    else:
        clique_size = None

    if m == 0:
        return (), stats

    adjc: list[list[int]] = []  # per color: neighbor masks
    vseen: list[int] = []       # per color: vertices that met the color
    cdeg = [0] * n
    colors = [0] * m
    dedup: dict[int, set[bytes]] = {}
    iso_depth = min(iso_depth, m - 1)

    def dfs(i: int, sum_c: int, zero: int) -> bool:
        u, v = edges[i]
        bu, bv = 1 << u, 1 << v
        q = len(adjc)
        for c in range(q + 1):
            fresh = c == q
            if fresh:
                if mode == "colors" and q >= cap:
                    break
                du = dv = 1
            else:
                du = 0 if vseen[c] & bu else 1
                dv = 0 if vseen[c] & bv else 1
            if mode == "mean":
                ns = sum_c + du + dv
                nz = zero - (1 if cdeg[u] == 0 else 0) - (1 if cdeg[v] == 0 else 0)
                if (ns + nz) * den > num * n:
                    stats.prune_bound += 1
                    continue
            else:
                ns, nz = sum_c, zero
                if mode == "local" and (cdeg[u] + du > cap or cdeg[v] + dv > cap):
                    stats.prune_local += 1
                    continue
            # monochromatic-copy check through the new edge
            if fresh:
                adjc.append([0] * n)
                vseen.append(0)
            row = adjc[c]
            if clique_size == 3:
                if row[u] & row[v]:
                    stats.prune_mono += 1
                    if fresh:
                        adjc.pop()
                        vseen.pop()
                    continue
            row[u] |= bv
            row[v] |= bu
            if clique_size == 3:
                hit = False
            elif clique_size is not None:
                hit = clique_size == 2 or _has_clique(row, row[u] & row[v], clique_size - 2)
            else:
                hit = _anchored_embedding(row, n, u, v, h)
            if hit:
                stats.prune_mono += 1
                row[u] ^= bv
                row[v] ^= bu
                if fresh:
                    adjc.pop()
                    vseen.pop()
                continue
            stats.nodes += 1
            colors[i] = c
            old_seen = vseen[c]
            vseen[c] = old_seen | bu | bv
            cdeg[u] += du
            cdeg[v] += dv
            keep = True
            if i + 1 <= iso_depth:
                code = partial_canonical_code(
                    g, [colors[j] if j <= i else None for j in range(m)]
                )
                bucket = dedup.setdefault(i, set())
                if code in bucket:
                    stats.prune_iso += 1
                    keep = False
                else:
                    bucket.add(code)
            if keep:
                if i + 1 == m:
                    return True
                if dfs(i + 1, ns, nz):
                    return True
            cdeg[u] -= du
            cdeg[v] -= dv
            vseen[c] = old_seen
            row[u] ^= bv
            row[v] ^= bu
            if fresh:
                adjc.pop()
                vseen.pop()
        return False

    zero0 = sum(1 for v in range(n) if g.adj[v])
    if dfs(0, 0, zero0):
        return tuple(colors), stats
    return None, stats


def exists_good_coloring(
    g: Graph,
    h: Graph,
    constraint: ColoringConstraint,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[EdgeColoring]:
    """A coloring of g in the constraint class with no monochromatic h, or
    None if an exhaustive (symmetry-collapsed) search finds none."""
    col, _ = _exists_with_stats(g, h, constraint, budget)
    return col


def _exists_with_stats(
    g: Graph, h: Graph, constraint: ColoringConstraint, budget: SearchBudget
) -> tuple[Optional[EdgeColoring], _DecisionStats]:
    if g.n > budget.decision_max_n:
        raise BudgetExceededError(
            f"decision search limited to n <= {budget.decision_max_n}, got {g.n}"
        )
    if h.edge_count < 1:
        raise ValueError("pattern graph needs at least one edge")
    colors, stats = _decide(g, h, constraint, budget.iso_depth)
    if colors is None:
        return None, stats
    return EdgeColoring(g, colors), stats


def _graphs_with_edge_count(n: int, m: int) -> list[Graph]:
    """All graphs on n vertices with m edges, one per isomorphism class,
    enumerated as complements of the missing-edge sets (deterministic
    first-representative order)."""
    all_edges = complete_graph(n).edges
    k = len(all_edges) - m
    seen: set[bytes] = set()
    out: list[Graph] = []
    for missing in itertools.combinations(all_edges, k):
        touched = sorted({x for e in missing for x in e})
        relab = {v: i for i, v in enumerate(touched)}
        small = Graph(len(touched), [(relab[u], relab[v]) for u, v in missing])
        key = canonical_graph_code(small)
        if key in seen:
            continue
        seen.add(key)
        missing_set = set(missing)
        out.append(Graph(n, [e for e in all_edges if e not in missing_set]))
    return out


def _base_attestation(h: Graph, constraint: ColoringConstraint) -> dict:
    return {
        "engine_version": ENGINE_VERSION,
        "pattern": pattern_label(h),
        "constraint": constraint_to_string(constraint),
    }


def rt_exact(
    n: int,
    h: Graph,
    constraint: ColoringConstraint,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Certificate:
    """Exact maximum edge count of an n-vertex graph admitting a coloring in
    the constraint class with no monochromatic h.

    Hosts are enumerated up to isomorphism by descending edge count and the
    scan stops at the first count admitting a good coloring; the certificate
    carries the witness (canonical-code-minimal among the optima) and the
    exhaustiveness attestation for all denser hosts.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > budget.rt_max_n:
        raise BudgetExceededError(f"rt_exact limited to n <= {budget.rt_max_n}, got {n}")
    if h.edge_count < 1:
        raise ValueError("pattern graph needs at least one edge")
    total = comb(n, 2)
    nodes = 0
    hosts_examined = 0
    prunes = {"prune_mono": 0, "prune_bound": 0, "prune_local": 0, "prune_iso": 0}
    for m in range(total, -1, -1):
        missing = total - m
        if missing > budget.complement_cap:
            raise BudgetExceededError(
                f"rt_exact(n={n}) undecided down to {m + 1} edges; hosts missing "
                f"{missing} edges exceed the complement cap {budget.complement_cap}"
            )
        admitting: list[ColoredGraph] = []
        for host in _graphs_with_edge_count(n, m):
            hosts_examined += 1
            col, stats = _exists_with_stats(host, h, constraint, budget)
            nodes += stats.nodes
            for key in prunes:
                prunes[key] += getattr(stats, key)
            if col is not None:
                admitting.append(ColoredGraph(host, col))
        if admitting:
            witness = min(admitting, key=lambda cg: canonical_code(cg.coloring))
            attestation = _base_attestation(h, constraint)
            attestation.update(
                {
                    "host_n": n,
                    "value": m,
                    "edge_counts_scanned": f"{m}..{total}",
                    "hosts_examined": hosts_examined,
                    "witnesses_at_optimum": len(admitting),
                    "node_count": max(nodes, 1),
                    "search_space": (
                        f"all graphs on {n} vertices with {m}..{total} edges up to "
                        f"isomorphism; colorings by lex-edge DFS with fresh-color collapse"
                    ),
                    **prunes,
                }
            )
            return Certificate(EXHAUSTIVE_UPPER_BOUND, m, witness, attestation)
    raise AssertionError("unreachable: the empty graph admits the empty coloring")


def ramsey_exact(
    h: Graph,
    constraint: ColoringConstraint,
    n_max: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Certificate:
    """Least n <= n_max such that every coloring of K_n in the constraint
    class has a monochromatic h; value None when not found up to n_max.

    The witness is a good coloring of K_{n-1} showing minimality.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > budget.ramsey_max_n:
        raise BudgetExceededError(
            f"ramsey_exact limited to n_max <= {budget.ramsey_max_n}, got {n_max}"
        )
    if h.edge_count < 1:
        raise ValueError("pattern graph needs at least one edge")
    nodes = 0
    last_good: Optional[ColoredGraph] = None
    for n in range(1, n_max + 1):
        host = complete_graph(n)
        col, stats = _exists_with_stats(host, h, constraint, budget)
        nodes += stats.nodes
        if col is None:
            attestation = _base_attestation(h, constraint)
            attestation.update(
                {
                    "value": n,
                    "n_max": n_max,
                    "node_count": max(nodes, 1),
                    "search_space": (
                        f"colorings of K_1..K_{n} by lex-edge DFS with fresh-color "
                        f"collapse; exhaustive refutation at K_{n}"
                    ),
                }
            )
            return Certificate(RAMSEY_VALUE, n, last_good, attestation)
        last_good = ColoredGraph(host, col)
    attestation = _base_attestation(h, constraint)
    attestation.update(
        {
            "status": "none-found-up-to-budget",
            "n_max": n_max,
            "node_count": max(nodes, 1),
            "search_space": f"colorings of K_1..K_{n_max}",
        }
    )
    return Certificate(RAMSEY_VALUE, None, last_good, attestation)


def min_color_sum(m: int, budget: SearchBudget = DEFAULT_BUDGET) -> Certificate:
    """Minimum of the color-degree sum over all colorings of K_m with no
    monochromatic triangle, by exhaustive search over color-normalized
    colorings. Exact for 3 <= m <= 5."""
    if not 3 <= m <= 5:
        raise ValueError(f"oracle defined for 3 <= m <= 5, got {m}")
    g = complete_graph(m)
    edges = g.edges
    em = len(edges)
    n = m
    best: Optional[int] = None
    best_colors: Optional[tuple[int, ...]] = None
    adjc: list[list[int]] = []
    vseen: list[int] = []
    cdeg = [0] * n
    colors = [0] * em
    nodes = 0

    def dfs(i: int, sum_c: int, zero: int) -> None:
        nonlocal best, best_colors, nodes
        if i == em:
            if best is None or sum_c < best:
                best = sum_c
                best_colors = tuple(colors)
            return
        u, v = edges[i]
        bu, bv = 1 << u, 1 << v
        q = len(adjc)
        for c in range(q + 1):
            fresh = c == q
            if fresh:
                du = dv = 1
            else:
                if adjc[c][u] & adjc[c][v]:
                    continue
                du = 0 if vseen[c] & bu else 1
                dv = 0 if vseen[c] & bv else 1
            ns = sum_c + du + dv
            nz = zero - (1 if cdeg[u] == 0 else 0) - (1 if cdeg[v] == 0 else 0)
            if best is not None and ns + nz >= best:
                continue
            nodes += 1
            if fresh:
                adjc.append([0] * n)
                vseen.append(0)
            row = adjc[c]
            row[u] |= bv
            row[v] |= bu
            old_seen = vseen[c]
            vseen[c] = old_seen | bu | bv
            cdeg[u] += du
            cdeg[v] += dv
            colors[i] = c
            dfs(i + 1, ns, nz)
            cdeg[u] -= du
            cdeg[v] -= dv
            vseen[c] = old_seen
            row[u] ^= bv
            row[v] ^= bu
            if fresh:
                adjc.pop()
                vseen.pop()

    dfs(0, 0, n)
    assert best is not None and best_colors is not None
    witness = ColoredGraph(g, EdgeColoring(g, best_colors))
    attestation = {
        "engine_version": ENGINE_VERSION,
        "pattern": "K3",
        "m": m,
        "value": best,
        "node_count": max(nodes, 1),
        "search_space": (
            f"all colorings of K_{m} up to color relabeling with no "
            f"monochromatic triangle, branch-and-bound on the color-degree sum"
        ),
    }
    return Certificate(ORACLE_VALUE, best, witness, attestation)


def lower_bound_certificate(cg: ColoredGraph) -> Certificate:
    """Wrap a constructed colored graph as an independently checkable
    lower-bound certificate (value = its edge count)."""
    return Certificate(
        LOWER_BOUND_WITNESS,
        cg.edge_count,
        cg,
        {"engine_version": ENGINE_VERSION, "source": "construction"},
    )


def verify_certificate(
    cert: Certificate, h: Graph, constraint: ColoringConstraint
) -> bool:
    """Re-check a certificate without trusting the search that made it.

    Lower-bound witnesses are fully re-validated (constraint membership,
    edge count against the claimed value, absence of a monochromatic h).
    Exhaustive kinds get their attestation checked for internal consistency;
    any witness they carry is re-validated as well. Returns False on any
    mismatch and never raises.
    """
    try:
        att = cert.attestation
        w = cert.witness
        if cert.kind == LOWER_BOUND_WITNESS:
            return (
                w is not None
                and w.edge_count == cert.value
                and satisfies(w.coloring, constraint)
                and find_monochromatic(w.coloring, h) is None
            )
        if cert.kind not in (EXHAUSTIVE_UPPER_BOUND, RAMSEY_VALUE, ORACLE_VALUE):
            return False
        if int(att.get("node_count", 0)) < 1 or "search_space" not in att:
            return False
        if att.get("pattern") != pattern_label(h):
            return False
        if cert.kind != ORACLE_VALUE and att.get("constraint") != constraint_to_string(
            constraint
        ):
            return False
        if cert.kind == EXHAUSTIVE_UPPER_BOUND:
            if not isinstance(cert.value, int) or cert.value < 0:
                return False
            if att.get("value") != cert.value:
                return False
            if w is not None:
                return (
                    w.edge_count == cert.value
                    and satisfies(w.coloring, constraint)
                    and find_monochromatic(w.coloring, h) is None
                )
            return True
        if cert.kind == RAMSEY_VALUE:
            if cert.value is None:
                return att.get("status") == "none-found-up-to-budget"
            if att.get("value") != cert.value or cert.value < 1:
                return False
            if w is not None:
                return (
                    w.n == cert.value - 1
                    and w.edge_count == comb(w.n, 2)
                    and satisfies(w.coloring, constraint)
                    and find_monochromatic(w.coloring, h) is None
                )
            return cert.value == 1
        # oracle: witness must meet the claimed minimum exactly
        return (
            isinstance(cert.value, int)
            and w is not None
            and w.coloring.total_color_incidence() == cert.value
            and find_monochromatic(w.coloring, h) is None
        )
    except Exception:
        return False
