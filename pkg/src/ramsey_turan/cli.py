"""Batch command-line frontend: constructions, verification, exact searches,
oracles and conjecture evidence scans.

File format for (colored) graphs: first line ``n q m`` (vertex, color and
edge counts), then one line per edge, ``u v c`` with 0-based ids, edges in
lexicographic order and colors normalized to first-use order. Uncolored
graphs are the same with ``q = 1`` and two-token ``u v`` lines.
Partitions: one class per line as space-separated vertex ids. Certificates
and tables are key=value text, one record per line, never binary; reports
carry no timestamps or thread counts, so identical jobs emit identical
bytes.

Exit codes: 0 success, 1 verification violation, 2 malformed input,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .graph_core import (
    BudgetExceededError,
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    turan_edge_count,
)
from .coloring import (
    ColoringConstraint,
    EdgeColoring,
    ExactlyKColors,
    KLocal,
    RhoMean,
    constraint_from_string,
    constraint_to_string,
    find_monochromatic,
    satisfies,
)
from .constructions import ColoredGraph, blow_up, turan5_witness
from .factors import near_triangle_factor
from .regularity import Partition, cluster_graph, majority_color_clusters
from .search import (
    Certificate,
    SearchBudget,
    min_color_sum,
    ramsey_exact,
    rt_exact,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_MALFORMED = 2
EXIT_BUDGET = 3


@dataclass
class JobSpec:
    """Validated description of one CLI invocation."""

    command: str
    params: dict = field(default_factory=dict)
    out: Optional[str] = None
    threads: int = 1
    seed: int = 0
    budget: SearchBudget = field(default_factory=SearchBudget.from_env)


# ---------------------------------------------------------------------------
# graph / partition / certificate text formats
# ---------------------------------------------------------------------------


def format_colored_graph(cg: ColoredGraph) -> str:
    g, col = cg.graph, cg.coloring
    lines = [f"{g.n} {col.q} {g.edge_count}"]
    for (u, v), c in zip(g.edges, col.colors):
        lines.append(f"{u} {v} {c}")
    return "\n".join(lines) + "\n"


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} 1 {g.edge_count}"]
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_colored_graph(text: str) -> ColoredGraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 3:
        raise ValueError("graph files start with a line 'n q m'")
    n, q, m = (int(x) for x in rows[0])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges, file has {len(rows) - 1}")
    edges = []
    colors = []
    for row in rows[1:]:
        if len(row) == 2:
            u, v = int(row[0]), int(row[1])
            c = 0
        elif len(row) == 3:
            u, v, c = int(row[0]), int(row[1]), int(row[2])
        else:
            raise ValueError(f"malformed edge line: {' '.join(row)}")
        if c < 0:
            raise ValueError("negative color id")
        edges.append((u, v) if u < v else (v, u))
        colors.append(c)
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge in graph file")
    g = Graph(n, edges)
    order = {e: i for i, e in enumerate(edges)}
    coloring = EdgeColoring(g, [colors[order[e]] for e in g.edges])
    if m == 0:
        if q not in (0, 1):
            raise ValueError(f"header announces {q} colors for an edgeless graph")
    elif coloring.q != q:
        raise ValueError(f"header announces {q} colors, file uses {coloring.q}")
    return ColoredGraph(g, coloring)


def read_colored_graph(path: str) -> ColoredGraph:
    return parse_colored_graph(Path(path).read_text())


def read_graph(path: str) -> Graph:
    return read_colored_graph(path).graph


def read_partition(path: str, n: int) -> Partition:
    classes = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            classes.append([int(tok) for tok in line.split()])
    return Partition.from_classes(n, classes)


def format_certificate(cert: Certificate) -> str:
    lines = [f"kind={cert.kind}", f"value={'none' if cert.value is None else cert.value}"]
    if cert.witness is None:
        lines.append("witness=none")
    else:
        body = format_colored_graph(cert.witness).strip().replace("\n", ";")
        lines.append(f"witness={body}")
    for key in sorted(cert.attestation):
        lines.append(f"att.{key}={cert.attestation[key]}")
    return "\n".join(lines) + "\n"


def parse_pattern(text: str) -> Graph:
    """Named pattern (k3, c5, p4, ...) or a graph file path."""
    kind, num = text[:1].lower(), text[1:]
    if num.isdigit():
        n = int(num)
        if kind == "k":
            return complete_graph(n)
        if kind == "c":
            return cycle_graph(n)
        if kind == "p":
            return path_graph(n)
    return read_graph(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _emit(job: JobSpec, text: str) -> None:
    if job.out:
        Path(job.out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(job: JobSpec) -> int:
    if job.params["what"] == "turan5":
        cg = turan5_witness(job.params["n"])
    else:
        base = read_colored_graph(job.params["infile"])
        cg = blow_up(base, job.params["sizes"])
    _emit(job, format_colored_graph(cg))
    return EXIT_OK


def _cmd_verify(job: JobSpec) -> int:
    cg = read_colored_graph(job.params["infile"])
    h: Graph = job.params["pattern"]
    constraint: ColoringConstraint = job.params["constraint"]
    lines = [
        f"n={cg.n}",
        f"edges={cg.edge_count}",
        f"colors={cg.q}",
        f"constraint={constraint_to_string(constraint)}",
    ]
    ok = True
    if not satisfies(cg.coloring, constraint):
        ok = False
        lines.append("violation=constraint")
        if isinstance(constraint, RhoMean):
            total = cg.coloring.total_color_incidence()
            bound = Fraction(constraint.rho * cg.n)
            lines.append(f"color_degree_sum={total}")
            lines.append(f"allowed_sum={bound}")
        elif isinstance(constraint, KLocal):
            lines.append(f"max_color_degree={max(cg.coloring.color_degrees(), default=0)}")
            lines.append(f"allowed_local={constraint.k}")
        else:
            lines.append(f"colors_used={cg.q}")
            lines.append(f"allowed_colors={constraint.k}")
    hit = find_monochromatic(cg.coloring, h)
    if hit is not None:
        ok = False
        color, emb = hit
        lines.append("violation=monochromatic")
        lines.append(f"mono_color={color}")
        lines.append(f"mono_vertices={','.join(str(v) for v in emb)}")
    lines.append(f"verified={1 if ok else 0}")
    _emit(job, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_rt_exact(job: JobSpec) -> int:
    cert = rt_exact(job.params["n"], job.params["pattern"], job.params["constraint"], job.budget)
    sys.stdout.write(f"{cert.value}\n")
    _emit_certificate(job, cert)
    return EXIT_OK


def _cmd_ramsey_exact(job: JobSpec) -> int:
    cert = ramsey_exact(
        job.params["pattern"], job.params["constraint"], job.params["nmax"], job.budget
    )
    sys.stdout.write("none\n" if cert.value is None else f"{cert.value}\n")
    _emit_certificate(job, cert)
    return EXIT_OK


def _emit_certificate(job: JobSpec, cert: Certificate) -> None:
    text = format_certificate(cert)
    if job.out:
        Path(job.out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_oracle(job: JobSpec) -> int:
    cert = min_color_sum(job.params["m"], job.budget)
    sys.stdout.write(f"{cert.value}\n")
    assert cert.witness is not None
    sys.stdout.write(format_colored_graph(cert.witness))
    if job.out:
        Path(job.out).write_text(format_certificate(cert))
    return EXIT_OK


def _cmd_factor(job: JobSpec) -> int:
    g = read_graph(job.params["infile"])
    factor = near_triangle_factor(g)
    if factor is None:
        _emit(job, "factor=none\n")
    else:
        lines = ["factor=found", f"blocks={len(factor.blocks)}"]
        for i, block in enumerate(factor.blocks):
            lines.append(f"block.{i}={','.join(str(v) for v in block)}")
        _emit(job, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_cluster(job: JobSpec) -> int:
    cg = read_colored_graph(job.params["infile"])
    p = read_partition(job.params["partition"], cg.n)
    gamma, eta = job.params["gamma"], job.params["eta"]
    if job.params["colored"]:
        cl = majority_color_clusters(cg, p, gamma, eta)
    else:
        cl = cluster_graph(cg.graph, p, gamma, eta)
    lines = [f"m={cl.m}", f"gamma={gamma}", f"eta={eta}"]
    for i, j in sorted(cl.pair_density):
        lines.append(f"density.{i}.{j}={cl.pair_density[(i, j)]}")
        lines.append(f"regular.{i}.{j}={1 if (i, j) in cl.regular_pairs else 0}")
        lines.append(f"edge.{i}.{j}={1 if (i, j) in cl.edges else 0}")
    if cl.cluster_coloring is not None:
        for i, j in sorted(cl.cluster_coloring):
            lines.append(f"color.{i}.{j}={cl.cluster_coloring[(i, j)]}")
        lines.append(f"rho_star={cl.mean_color_degree() if cl.edges else 0}")
    _emit(job, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_conjecture_scan(job: JobSpec) -> int:
    h = job.params["pattern"]
    nmax = job.params["nmax"]
    constraints: list[tuple[str, ColoringConstraint]] = [
        ("colors2", ExactlyKColors(2)),
        ("local2", KLocal(2)),
        ("mean2", RhoMean(2)),
    ]
    # the t(n,5) reference column encodes R(K3,2) = 6; only emit it for k3
    triangle = h.n == 3 and h.edge_count == 3
    lines = []
    for n in range(3, nmax + 1):
        for label, constraint in constraints:
            cert = rt_exact(n, h, constraint, job.budget)
            lines.append(f"n.{n}.{label}={cert.value}")
        if triangle:
            lines.append(f"n.{n}.turan5={turan_edge_count(n, 5)}")
    _emit(job, "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey-turan",
        description="Exact Ramsey / Ramsey-Turán engine for mean, local and "
        "classical edge-coloring constraints.",
    )
    parser.add_argument("--threads", type=int, default=1, help="worker hint; results never depend on it")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampling subcommands (reserved)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a construction")
    csub = p.add_subparsers(dest="what", required=True)
    p1 = csub.add_parser("turan5", help="balanced 5-partite triangle-free witness")
    p1.add_argument("--n", type=int, required=True)
    p1.add_argument("--out")
    p2 = csub.add_parser("blowup", help="blow up a colored graph")
    p2.add_argument("--in", dest="infile", required=True)
    p2.add_argument("--sizes", required=True, help="comma-separated class sizes")
    p2.add_argument("--out")

    p = sub.add_parser("verify", help="check constraint + absence of monochromatic pattern")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--constraint", required=True)
    p.add_argument("--out")

    p = sub.add_parser("rt-exact", help="exact Ramsey-Turán value with certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--constraint", required=True)
    p.add_argument("--out")

    p = sub.add_parser("ramsey-exact", help="least n forcing a monochromatic pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--constraint", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("oracle", help="counting oracles")
    osub = p.add_subparsers(dest="what", required=True)
    p3 = osub.add_parser("color-sum", help="min color-degree sum without a mono triangle")
    p3.add_argument("--m", type=int, required=True, choices=(3, 4, 5))
    p3.add_argument("--out")

    p = sub.add_parser("factor", help="triangle/K4/K5 factor of a graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")

    p = sub.add_parser("cluster", help="cluster graph of a partition")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--colored", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("conjecture-scan", help="rt values per constraint vs t(n,5)")
    p.add_argument("--pattern", default="k3")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out")

    return parser


def _job_from_args(args: argparse.Namespace) -> JobSpec:
    if args.threads < 1:
        raise ValueError("--threads must be positive")
    budget = SearchBudget.from_env()
    if args.threads != budget.threads:
        budget = SearchBudget(
            decision_max_n=budget.decision_max_n,
            rt_max_n=budget.rt_max_n,
            ramsey_max_n=budget.ramsey_max_n,
            complement_cap=budget.complement_cap,
            iso_depth=budget.iso_depth,
            threads=args.threads,
        )
    job = JobSpec(
        command=args.command,
        out=getattr(args, "out", None),
        threads=args.threads,
        seed=args.seed,
        budget=budget,
    )
    if args.command == "construct":
        if args.what == "turan5":
            job.params = {"what": "turan5", "n": args.n}
        else:
            sizes = [int(tok) for tok in args.sizes.split(",") if tok != ""]
            job.params = {"what": "blowup", "infile": args.infile, "sizes": sizes}
    elif args.command == "verify":
        job.params = {
            "infile": args.infile,
            "pattern": parse_pattern(args.pattern),
            "constraint": constraint_from_string(args.constraint),
        }
    elif args.command == "rt-exact":
        if args.n < 0:
            raise ValueError("--n must be non-negative")
        job.params = {
            "n": args.n,
            "pattern": parse_pattern(args.pattern),
            "constraint": constraint_from_string(args.constraint),
        }
    elif args.command == "ramsey-exact":
        if args.nmax < 1:
            raise ValueError("--nmax must be positive")
        job.params = {
            "pattern": parse_pattern(args.pattern),
            "constraint": constraint_from_string(args.constraint),
            "nmax": args.nmax,
        }
    elif args.command == "oracle":
        job.params = {"m": args.m}
    elif args.command == "factor":
        job.params = {"infile": args.infile}
    elif args.command == "cluster":
        job.params = {
            "infile": args.infile,
            "partition": args.partition,
            "gamma": Fraction(args.gamma),
            "eta": Fraction(args.eta),
            "colored": args.colored,
        }
    elif args.command == "conjecture-scan":
        if args.nmax < 3:
            raise ValueError("--nmax must be at least 3")
        job.params = {"pattern": parse_pattern(args.pattern), "nmax": args.nmax}
    return job


_DISPATCH = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "rt-exact": _cmd_rt_exact,
    "ramsey-exact": _cmd_ramsey_exact,
    "oracle": _cmd_oracle,
    "factor": _cmd_factor,
    "cluster": _cmd_cluster,
    "conjecture-scan": _cmd_conjecture_scan,
}


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_MALFORMED
    try:
        job = _job_from_args(args)
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return _DISPATCH[job.command](job)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
