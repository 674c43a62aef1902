"""
Command-line interface

    python -m workbench.cli recognize --class 1po-k4mf --in graph.txt
    python -m workbench.cli orient --sink 0 --in graph.g6
    python -m workbench.cli witness --pattern F1 --in grid.txt
    python -m workbench.cli generate --kind hollowed_two_tree --n 9 --hole 5 --seed 7
    python -m workbench.cli crosscheck --max-n 6 --suite k4mf-recognizer,rooted

Exit codes: 0 accept/success, 1 reject, 2 usage or parse error,
3 precondition or mode error.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import config
from classes.registry import CLASSES, in_class
from errors import GraphError, OnePOError, ParseError, PreconditionError
from graphs.graph import Graph
from oracles.orientation import Orientation
from patterns.catalog import pattern
from patterns.containment import ContainmentMode, find_containment
from structural.biconnected import orient_chordal_with_sink, orient_sink_free, recognize_biconnected_rooted
from structural.certificate import Certificate
from structural.recognize import RecognitionMode, certify_2sat, check_mode, recognize, recognize_block_cactus
from structural.sequence import build_sequence
from workbench.crosscheck import SUITES, crosscheck
from workbench.generators import KINDS, GeneratorSpec, generate
from workbench.serialize import TextFormat, detect_format, parse, serialize
from workbench.storage import ReportStore

logger = logging.getLogger(__name__)

RECOGNIZERS = ("1po-k4mf", "1po-outerplanar", "1po-2sat", "1po-blockcactus")
FORMATS = [f.value for f in TextFormat]
GENERATOR_PARAMS = ("n", "hole", "k", "rows", "cols", "a", "b", "pieces", "max_piece", "max_block")


class UsageError(OnePOError):
    pass


def _read_text(path: str) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(text: str, path: str):
    if path in (None, "-"):
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        Path(path).write_text(text)


def _read_graph(args) -> Graph:
    text = _read_text(args.input)
    fmt = detect_format(text) if args.format == "auto" else TextFormat(args.format)
    value = parse(text, fmt)
    if isinstance(value, Orientation):
        return value.host
    if not isinstance(value, Graph):
        raise UsageError(f"expected a graph, got {type(value).__name__}")
    return value


def _emit_certificate(certificate: Certificate, graph: Graph, args) -> int:
    fmt = args.out_format or TextFormat.JSON.value
    _write_text(serialize(certificate, fmt, host=graph), args.output)
    return config.EXIT_CODES["accept" if certificate.accepted else "reject"]


def cmd_recognize(args) -> int:
    graph = _read_graph(args)
    name = args.class_name
    if name in CLASSES:
        member = in_class(name, graph)
        _write_text(json.dumps({"class": name, "member": member}), args.output)
        return config.EXIT_CODES["accept" if member else "reject"]

    if name == "1po-2sat":
        certificate = certify_2sat(graph, args.sink)
    elif name == "1po-blockcactus":
        certificate = recognize_block_cactus(graph)
    elif args.sink is not None:
        # rooted question; the structural answer is for biconnected graphs
        mode = RecognitionMode.K4MF if name == "1po-k4mf" else RecognitionMode.OUTERPLANAR
        check_mode(graph, mode)
        certificate = recognize_biconnected_rooted(graph, args.sink)
    else:
        mode = RecognitionMode.K4MF if name == "1po-k4mf" else RecognitionMode.OUTERPLANAR
        certificate = recognize(graph, mode)
    return _emit_certificate(certificate, graph, args)


def cmd_orient(args) -> int:
    graph = _read_graph(args)
    if args.sink is not None:
        if not 0 <= args.sink < graph.n:
            raise UsageError(f"--sink {args.sink} is not a vertex of a graph with n={graph.n}")
        orientation = orient_chordal_with_sink(graph, args.sink)
    else:
        orientation = orient_sink_free(graph)
    _write_text(serialize(orientation, args.out_format or TextFormat.JSON.value), args.output)
    return config.EXIT_CODES["accept"]


def cmd_witness(args) -> int:
    graph = _read_graph(args)
    target = pattern(args.pattern)
    model = find_containment(graph, target.graph, ContainmentMode(args.mode))
    if model is None:
        _write_text(json.dumps(None), args.output)
        return config.EXIT_CODES["reject"]
    _write_text(json.dumps({"pattern": target.name, "branch_sets": model.as_dict()}), args.output)
    return config.EXIT_CODES["accept"]


def cmd_generate(args) -> int:
    params = {p: getattr(args, p) for p in GENERATOR_PARAMS if getattr(args, p) is not None}
    if args.allow_disjoint:
        params["allow_disjoint"] = 1
    graph = generate(GeneratorSpec(args.kind, params, args.seed))
    _write_text(serialize(graph, args.out_format or TextFormat.GRAPH6.value), args.output)
    return config.EXIT_CODES["accept"]


def cmd_sequence(args) -> int:
    graph = _read_graph(args)
    sequence = build_sequence(graph, args.mode)
    if sequence is None:
        _write_text(json.dumps(None), args.output)
        return config.EXIT_CODES["reject"]
    data = {
        "n": sequence.n,
        "base": list(sequence.base),
        "steps": [{"kind": s.kind.value, "vertex": s.vertex, "targets": list(s.targets)} for s in sequence.steps],
    }
    _write_text(json.dumps(data), args.output)
    return config.EXIT_CODES["accept"]


def _save_report(report, path: str):
    target = Path(path)
    if target.suffix == ".xlsx":
        ReportStore().export_excel(target, {"summary": report.summary_frame(),
                                            "disagreements": report.to_dataframe()})
    elif target.suffix == ".pdf":
        from reports.pdf_generator import PDFReportGenerator
        PDFReportGenerator(output_dir=target.parent).generate_crosscheck_report(report, target.name)
    else:
        report.to_dataframe().to_csv(target, index=False)
    logger.info("Report written to %s", target)


def cmd_crosscheck(args) -> int:
    suites = [s.strip() for s in args.suite.split(",") if s.strip()] if args.suite else None
    report = crosscheck(args.max_n, suites, workers=args.workers, progress=args.progress)
    summary = report.summary_frame()
    lines = [summary.to_string(index=False)]
    lines.extend(f"{d.graph6}\t{d.suite}\t{' vs '.join(d.predicates)}\t{d.verdicts}" for d in report.disagreements)
    _write_text("\n".join(lines), args.output)
    if args.report:
        _save_report(report, args.report)
    return config.EXIT_CODES["accept" if report.ok else "reject"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Recognize, orient and certify 1-perfectly orientable graphs",
    )
    parser.add_argument("--log-level", default=None, help="logging level (default from ONEPO_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--in", dest="input", default="-", help="input file ('-' for stdin)")
    io.add_argument("--out", dest="output", default="-", help="output file ('-' for stdout)")
    io.add_argument("--format", default="auto", choices=["auto", *FORMATS], help="input format")
    io.add_argument("--out-format", default=None, choices=FORMATS, help="output format")

    p = sub.add_parser("recognize", parents=[io], help="decide a class or 1-perfect orientability")
    p.add_argument("--class", dest="class_name", required=True, choices=[*RECOGNIZERS, *CLASSES])
    p.add_argument("--sink", type=int, default=None, help="ask for a 1-perfect orientation with this sink")
    p.set_defaults(handler=cmd_recognize)

    p = sub.add_parser("orient", parents=[io], help="orient a chordal graph or a (hollowed) 2-tree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sink", type=int, help="chordal input: unique sink at this vertex")
    group.add_argument("--sink-free", action="store_true", help="2-tree or hollowed 2-tree input")
    p.set_defaults(handler=cmd_orient)

    p = sub.add_parser("witness", parents=[io], help="search a catalog pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--mode", default=ContainmentMode.INDUCED.value, choices=[m.value for m in ContainmentMode])
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("generate", parents=[io], help="seeded graph generators")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=config.GENERATOR_DEFAULTS["seed"])
    for name in GENERATOR_PARAMS:
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=None)
    p.add_argument("--allow-disjoint", action="store_true", help="paste_sep2: allow 0-clique pastes")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("sequence", parents=[io], help="A1/A2 construction sequence")
    p.add_argument("--mode", default=RecognitionMode.K4MF.value, choices=[m.value for m in RecognitionMode])
    p.set_defaults(handler=cmd_sequence)

    p = sub.add_parser("crosscheck", help="sweep recognizers against oracles")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--suite", default=None,
                   help=f"comma-separated subset of: {', '.join(SUITES)} (short ids such as thm51 also work)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--report", default=None, help="write the report (.csv, .xlsx or .pdf)")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--out", dest="output", default="-")
    p.set_defaults(handler=cmd_crosscheck)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config.setup_logging(args.log_level)
    try:
        return args.handler(args)
    except PreconditionError as e:
        print(f"precondition: {e}", file=sys.stderr)
        return config.EXIT_CODES["precondition"]
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return config.EXIT_CODES["usage"]
    except (GraphError, OnePOError, KeyError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_CODES["usage"]


if __name__ == "__main__":
    sys.exit(main())
