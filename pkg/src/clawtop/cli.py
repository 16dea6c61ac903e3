from __future__ import annotations

from pathlib import Path
from typing import Sequence, TextIO
import argparse
import os
import sys

from dotenv import find_dotenv, load_dotenv

from .analysis import AnalysisReport, analyze_graph
from .cache import HomologyCache
from .config import OUTPUT_FORMATS, RunConfig
from .connectivity import format_connectivity
from .ensemble import ENSEMBLES, EnsembleGraph
from .errors import ClawtopError, InputError
from .families import FAMILIES, FamilySpec, generate
from .graph import Graph
from .graph_io import GRAPH_FORMATS, format_graph, parse_graph, read_graph
from .logger import Logger
from .reports import dumps, save_csv, write_csv, write_json_lines, write_text
from .runner import ALL_SUITES, SUITE_ALIASES, SUITES, SuiteRequest, run_suite


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap-vertices", type=int, help="Vertex cap for Ind(G) (default: 30)")
    parser.add_argument("--cap-faces", type=int, help="Face cap per dimension (default: 200000)")
    parser.add_argument("--format", choices=list(OUTPUT_FORMATS), help="Output format")
    parser.add_argument("--jobs", type=int, help="Worker processes (0 = all cores)")
    parser.add_argument("--seed", type=int, help="Random seed (default: 0)")
    parser.add_argument("--retry-cap", type=int, help="Rejection-sampling retries")
    parser.add_argument("--tietze-budget", type=int, help="Tietze rewriting steps")
    parser.add_argument("--timings", action="store_true", help="Include ms in JSON records")
    parser.add_argument("--log-json", action="store_true", help="Output logs as JSON")
    parser.add_argument(
        "--log-level",
        choices=["debug", "info", "warn", "error"],
        help="Log level (default: info)",
    )


def _add_family(
    parser: argparse.ArgumentParser, required: bool, with_k: bool = True
) -> None:
    parser.add_argument("--family", choices=list(FAMILIES), required=required)
    parser.add_argument("--n", type=int, default=0, help="Vertex count (star: leaves)")
    if with_k:
        parser.add_argument("--k", type=int, default=1, help="Distance parameter for L and C")
    parser.add_argument("--p", type=float, default=0.5, help="Edge probability")
    parser.add_argument("--base", help="Base graph file for line-graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clawtop",
        description="clawtop: independence complexes of claw-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a graph from a named family")
    _add_family(gen, required=True)
    gen.add_argument("--graph-format", choices=list(GRAPH_FORMATS), default="edgelist")
    gen.add_argument("--out", help="Output path (default: stdout)")
    _add_common(gen)

    analyze = sub.add_parser("analyze", help="Homology and connectivity of Ind(G)")
    analyze.add_argument("graph", nargs="?", help="Graph file, or - for stdin")
    analyze.add_argument("--graph-format", choices=list(GRAPH_FORMATS))
    _add_family(analyze, required=False)
    analyze.add_argument("--out", help="Output path (default: stdout)")
    _add_common(analyze)

    verify = sub.add_parser("verify", help="Run verification suites")
    verify.add_argument(
        "--suite", choices=[*SUITES, *SUITE_ALIASES, ALL_SUITES], default=ALL_SUITES
    )
    verify.add_argument("--ensemble", choices=list(ENSEMBLES), default="default")
    verify.add_argument(
        "--graph", action="append", default=[], help="Graph file (repeatable)"
    )
    verify.add_argument("--graph-format", choices=list(GRAPH_FORMATS))
    _add_family(verify, required=False, with_k=False)
    verify.add_argument("--kind", choices=["general", "claw_free"], help="Bound kind")
    verify.add_argument(
        "--k", dest="ks", type=int, action="append", default=[], help="k for L/C suites"
    )
    verify.add_argument("--n-min", type=int)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--trials", type=int, help="Trials for collapse/snf suites")
    verify.add_argument("--out", help="JSON-lines output path (default: stdout)")
    verify.add_argument("--csv", help="Also write the CSV summary here")
    _add_common(verify)

    return parser


def _apply_env(args: argparse.Namespace) -> None:
    if args.cap_vertices is not None:
        os.environ["CLAWTOP_CAP_VERTICES"] = str(args.cap_vertices)
    if args.cap_faces is not None:
        os.environ["CLAWTOP_CAP_FACES"] = str(args.cap_faces)
    if args.format:
        os.environ["CLAWTOP_FORMAT"] = args.format
    if args.jobs is not None:
        os.environ["CLAWTOP_JOBS"] = str(args.jobs)
    if args.seed is not None:
        os.environ["CLAWTOP_SEED"] = str(args.seed)
    if args.retry_cap is not None:
        os.environ["CLAWTOP_RETRY_CAP"] = str(args.retry_cap)
    if args.tietze_budget is not None:
        os.environ["CLAWTOP_TIETZE_BUDGET"] = str(args.tietze_budget)
    if args.timings:
        os.environ["CLAWTOP_TIMINGS"] = "true"
    if args.log_json:
        os.environ["LOG_JSON"] = "true"
    if args.log_level:
        os.environ["LOG_LEVEL"] = args.log_level


def _family_k(args: argparse.Namespace) -> int:
    # verify takes a repeatable --k; the first value also parameterizes --family
    if hasattr(args, "k"):
        return int(args.k)
    ks = getattr(args, "ks", None) or [1]
    return int(ks[0])


def _family_graph(args: argparse.Namespace, cfg: RunConfig) -> Graph:
    base = read_graph(args.base) if args.base else None
    spec = FamilySpec(
        family=args.family,
        n=args.n,
        k=_family_k(args),
        p=args.p,
        seed=cfg.seed,
        base=base,
        retry_cap=cfg.retry_cap,
    )
    return generate(spec)


def _load_graph(path: str, fmt: str | None) -> Graph:
    if path == "-":
        try:
            text = sys.stdin.read()
        except UnicodeDecodeError as e:
            raise InputError(f"cannot decode graph from stdin: {e}") from e
        return parse_graph(text, fmt)
    return read_graph(path, fmt)


def _open_out(path: str | None) -> TextIO:
    if not path:
        return sys.stdout
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    return p.open("w", encoding="utf-8", newline="")


def cmd_gen(args: argparse.Namespace, cfg: RunConfig, log: Logger) -> int:
    g = _family_graph(args, cfg)
    text = format_graph(g, args.graph_format)
    out = _open_out(args.out)
    try:
        out.write(text)
    finally:
        if out is not sys.stdout:
            out.close()
    log.info("gen.done", family=args.family, n=g.n, edges=g.edge_count, out=args.out)
    return 0


def _analysis_text(report: AnalysisReport) -> str:
    m = report.measurement
    lines = [
        f"vertices: {report.n}  edges: {report.edges}  max degree: {report.max_degree}",
        f"claw-free: {'yes' if report.claw_free else 'no'}",
        f"folds: {len(report.folds)} (reduced graph has {report.reduced_vertices} vertices)",
        f"f-vector: {list(report.f_vector)}",
        f"collapsed f-vector: {list(m.collapsed_f_vector)}",
    ]
    if m.profile.empty:
        lines.append("homology: empty complex")
    for i, grp in enumerate(m.profile.groups):
        torsion = "".join(f" + Z/{t}" for t in grp.torsion)
        lines.append(f"H~_{i}: Z^{grp.betti}{torsion}")
    lines.append(f"connectivity: {format_connectivity(m.conn)}")
    lines.append(f"pi1: {m.pi1.value}")
    if m.report.pi1_unverified:
        lines.append("warning: pi1-unverified, connectivity is homological only")
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace, cfg: RunConfig, log: Logger) -> int:
    if args.graph:
        g = _load_graph(args.graph, args.graph_format)
        source = args.graph
    elif args.family:
        g = _family_graph(args, cfg)
        source = args.family
    else:
        raise InputError("analyze needs a graph file or --family")

    cache = HomologyCache.in_directory(cfg.cache_dir) if cfg.cache_dir else None
    try:
        log.info("analyze.start", source=source, n=g.n, edges=g.edge_count)
        report = analyze_graph(g, cfg, cache=cache)
    finally:
        if cache is not None:
            cache.close()

    out = _open_out(args.out)
    try:
        if cfg.output_format == "text":
            out.write(_analysis_text(report))
        else:
            out.write(dumps(report.to_json()) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    log.info(
        "analyze.done",
        conn=report.measurement.conn,
        pi1=report.measurement.pi1.value,
        folds=len(report.folds),
    )
    return 0


def cmd_verify(args: argparse.Namespace, cfg: RunConfig, log: Logger) -> int:
    graphs: list[EnsembleGraph] = [
        EnsembleGraph(Path(p).stem, _load_graph(p, args.graph_format), p) for p in args.graph
    ]
    if args.family:
        g = _family_graph(args, cfg)
        graphs.append(EnsembleGraph(args.family, g, args.family))

    req = SuiteRequest(
        suite=args.suite,
        ensemble=args.ensemble,
        graphs=tuple(graphs),
        kind=args.kind,
        ks=tuple(args.ks),
        n_min=args.n_min,
        n_max=args.n_max,
        trials=args.trials,
    )
    run = run_suite(cfg, req, log)

    out = _open_out(args.out)
    try:
        if cfg.output_format == "csv":
            write_csv(out, run.records)
        elif cfg.output_format == "text":
            write_text(out, run.records, run.summary())
        else:
            write_json_lines(
                out, run.records, run.summary(), include_ms=cfg.record_timings
            )
    finally:
        if out is not sys.stdout:
            out.close()
    if args.csv:
        save_csv(args.csv, run.records)
    return run.exit_code


COMMANDS = {"gen": cmd_gen, "analyze": cmd_analyze, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv(find_dotenv(usecwd=True))

    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_env(args)

    cfg = RunConfig.from_env(args.command)
    log = Logger(enabled=True, json_mode=cfg.log_json, level=cfg.log_level)
    try:
        return COMMANDS[args.command](args, cfg, log)
    except ClawtopError as e:
        log.error("run.failed", command=args.command, error=str(e))
        return e.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
