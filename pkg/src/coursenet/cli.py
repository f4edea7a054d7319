"""Command-line pipeline: enrollments -> pairs -> networks -> reports.

Each subcommand wraps library calls and file handoffs only, so chaining
subcommands gives the same results as calling the library directly. All
outputs are deterministic given the inputs and flags; the only randomness
lives in the synth subcommand's seed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import analysis, graph, ingest, metrics, pairing, reports, synth
from .errors import CoursenetError

DEFAULT_STATIC_THRESHOLD = 20
DEFAULT_K = 0.017
DEFAULT_FLOOR = 20

_MAX_SKIPS_SHOWN = 10


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except (CoursenetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coursenet",
        description="Build and analyze course co-enrollment networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pairs", help="aggregate enrollments into the course-pair dataset")
    p.add_argument("enrollments", help="enrollment CSV")
    p.add_argument("--floor", type=int, default=DEFAULT_FLOOR, help="minimum common students per pair")
    _add_out(p)
    p.set_defaults(handler=_cmd_pairs)

    p = sub.add_parser("build", help="build a thresholded course network edge list")
    p.add_argument("pairs", help="pair CSV from the pairs subcommand")
    p.add_argument("--courses", help="course summary CSV (default: courses.csv next to the pair file)")
    p.add_argument("--mode", choices=("static", "dynamic"), default="static")
    p.add_argument("--static-threshold", type=int, default=DEFAULT_STATIC_THRESHOLD)
    p.add_argument("--k", type=float, default=DEFAULT_K, help="co-occurrence rate threshold")
    p.add_argument("--floor", type=int, default=DEFAULT_FLOOR, help="dynamic threshold floor")
    _add_out(p)
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("stats", help="department/category subnetwork statistics")
    p.add_argument("edges", nargs="+", help="edge list CSV(s); with two, the first is static and the second dynamic")
    p.add_argument("--courses", help="course summary CSV (default: courses.csv next to the first edge list)")
    p.add_argument("--category-map", required=True, help="department,category CSV")
    _add_out(p)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("hubs", help="top hub courses per centrality metric and by combined rank")
    p.add_argument("edges", help="edge list CSV")
    p.add_argument("--courses", help="course summary CSV (default: courses.csv next to the edge list)")
    p.add_argument("--top", type=int, default=analysis.DEFAULT_TOP_N)
    _add_out(p)
    p.set_defaults(handler=_cmd_hubs)

    p = sub.add_parser("linkage", help="hub edge linkage between course categories")
    p.add_argument("edges", help="edge list CSV")
    p.add_argument("--courses", help="course summary CSV (default: courses.csv next to the edge list)")
    p.add_argument("--category-map", required=True, help="department,category CSV")
    p.add_argument("--hub-degree", type=int, default=analysis.DEFAULT_HUB_DEGREE)
    p.add_argument("--no-plot", action="store_true", help="skip the heatmap figure")
    _add_out(p)
    p.set_defaults(handler=_cmd_linkage)

    p = sub.add_parser("hist", help="common-student and co-occurrence rate distributions")
    p.add_argument("pairs", help="pair CSV")
    p.add_argument(
        "--bin-edges",
        default=",".join(str(e) for e in analysis.DEFAULT_COMMON_BIN_EDGES),
        help="comma-separated ascending bin edges for the common-student histogram",
    )
    p.add_argument("--bin-width", type=float, default=analysis.DEFAULT_RATE_BIN_WIDTH)
    p.add_argument("--no-plot", action="store_true", help="skip the distribution figures")
    _add_out(p)
    p.set_defaults(handler=_cmd_hist)

    p = sub.add_parser("synth", help="generate a synthetic enrollment dataset")
    p.add_argument("config", help="generator config file")
    p.add_argument("--seed", type=int, help="override the config's seed")
    _add_out(p)
    p.set_defaults(handler=_cmd_synth)

    return parser


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=".", help="output directory (created if missing)")


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _require(path: str | Path) -> Path:
    resolved = Path(path)
    if not resolved.is_file():
        raise FileNotFoundError(f"input file not found: {resolved}")
    return resolved


def _load_summaries(args: argparse.Namespace, anchor: Path) -> dict:
    """Course summaries from --courses, or the anchor's sibling courses.csv,
    or none (node set then falls back to edge endpoints)."""
    if args.courses:
        return ingest.read_course_summaries(_require(args.courses))
    sibling = anchor.parent / "courses.csv"
    if sibling.is_file():
        return ingest.read_course_summaries(sibling)
    return {}


def _load_network(args: argparse.Namespace, edges_path: Path) -> graph.CourseNetwork:
    edges = graph.read_edge_list(edges_path)
    summaries = _load_summaries(args, edges_path)
    return graph.network_from_edge_list(edges, summaries or None)


def _cmd_pairs(args: argparse.Namespace) -> None:
    source = _require(args.enrollments)
    records, report = ingest.parse_enrollment_file(source)
    summaries = ingest.summarize_courses(records)
    data = pairing.build_pairs(records, summaries, floor=args.floor)
    out = _out_dir(args)
    ingest.write_course_summaries(summaries, out / "courses.csv")
    pairing.write_pairs(data, out / "pairs.csv")
    print(f"accepted rows: {report.accepted}")
    print(f"skipped rows: {report.skipped_count}")
    for row_no, reason in report.skipped[:_MAX_SKIPS_SHOWN]:
        print(f"  row {row_no}: {reason}")
    if report.skipped_count > _MAX_SKIPS_SHOWN:
        print(f"  ... {report.skipped_count - _MAX_SKIPS_SHOWN} more")
    print(f"courses: {len(summaries)}")
    print(f"pairs (floor {args.floor}): {len(data.pairs)}")
    print(f"wrote {out / 'courses.csv'}")
    print(f"wrote {out / 'pairs.csv'}")


def _policy(args: argparse.Namespace) -> graph.ThresholdPolicy:
    if args.mode == "static":
        return graph.StaticThreshold(t=args.static_threshold)
    return graph.DynamicThreshold(k=args.k, floor=args.floor)


def _cmd_build(args: argparse.Namespace) -> None:
    pairs_path = _require(args.pairs)
    summaries = _load_summaries(args, pairs_path)
    data = pairing.read_pairs(pairs_path, summaries=summaries or None)
    net = graph.build_network(data, _policy(args))
    out = _out_dir(args)
    target = out / f"edges_{args.mode}.csv"
    graph.write_edge_list(net, target)
    print(f"nodes: {net.node_count}")
    print(f"edges kept: {net.edge_count} of {len(data.pairs)} pairs")
    print(f"wrote {target}")


def _cmd_stats(args: argparse.Namespace) -> None:
    if len(args.edges) > 2:
        raise ValueError("stats accepts at most two edge lists (static and dynamic)")
    edge_paths = [_require(p) for p in args.edges]
    cat_map = analysis.load_category_map(_require(args.category_map))
    tables = [
        analysis.subnetwork_stats_table(_load_network(args, path), cat_map) for path in edge_paths
    ]
    out = _out_dir(args)
    target = out / "stats.csv"
    if len(tables) == 1:
        reports.write_stats_csv(tables[0], target)
    else:
        reports.write_stats_csv_dual(tables[0], tables[1], target)
    print(f"wrote {target}")


def _cmd_hubs(args: argparse.Namespace) -> None:
    net = _load_network(args, _require(args.edges))
    report = metrics.centrality_report(net)
    out = _out_dir(args)
    by_metric = out / "hubs_by_metric.csv"
    combined = out / "hubs_combined.csv"
    reports.write_hub_metric_table(report, net, args.top, by_metric)
    reports.write_hub_combined_table(report, net, args.top, combined)
    print(f"wrote {by_metric}")
    print(f"wrote {combined}")


def _cmd_linkage(args: argparse.Namespace) -> None:
    net = _load_network(args, _require(args.edges))
    cat_map = analysis.load_category_map(_require(args.category_map))
    hubs = {v for v in net.nodes() if net.degree(v) >= args.hub_degree}
    matrix = analysis.category_linkage(net, hubs, cat_map)
    out = _out_dir(args)
    target = out / "linkage.csv"
    reports.write_linkage_csv(matrix, target)
    print(f"hubs (degree >= {args.hub_degree}): {len(hubs)}")
    print(f"wrote {target}")
    if not args.no_plot:
        from . import figures

        figure = out / "linkage.png"
        figures.render_linkage_heatmap(matrix, figure)
        print(f"wrote {figure}")


def _cmd_hist(args: argparse.Namespace) -> None:
    data = pairing.read_pairs(_require(args.pairs))
    edges = tuple(int(e) for e in str(args.bin_edges).split(",") if e.strip())
    common = analysis.common_students_histogram(data, edges)
    rates = analysis.co_occurrence_histogram(data, args.bin_width)
    out = _out_dir(args)
    common_csv = out / "common_students_hist.csv"
    rate_csv = out / "co_occurrence_hist.csv"
    reports.write_common_hist_csv(common, common_csv)
    reports.write_rate_hist_csv(rates, rate_csv)
    print(f"wrote {common_csv}")
    print(f"wrote {rate_csv}")
    if not args.no_plot:
        from . import figures

        common_png = out / "common_students_hist.png"
        rate_png = out / "co_occurrence_hist.png"
        figures.render_common_students_figure(common, common_png)
        figures.render_co_occurrence_figure(rates, rate_png)
        print(f"wrote {common_png}")
        print(f"wrote {rate_png}")


def _cmd_synth(args: argparse.Namespace) -> None:
    config = synth.load_synth_config(_require(args.config))
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    records = synth.generate(config)
    out = _out_dir(args)
    enrollments = out / "enrollments.csv"
    category_map = out / "category_map.csv"
    ingest.write_enrollments(records, enrollments)
    analysis.write_category_map(synth.config_category_map(config), category_map)
    print(f"students: {config.students}")
    print(f"records: {len(records)}")
    print(f"wrote {enrollments}")
    print(f"wrote {category_map}")


if __name__ == "__main__":
    raise SystemExit(main())
