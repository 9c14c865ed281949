"""Command-line entry point: ``tsim {stats,matrix,cluster,pipeline}``.

Exit codes: 0 success, 1 usage, 2 parse, 3 compute.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, casestudy
from .clustering import DEFAULT_THRESHOLD, threshold_cluster, threshold_sweep
from .errors import ComputeError, ParseError
from .io import parse_dataset, read_matrix, write_clusters, write_matrix, write_stats
from .pipeline import (
    CLUSTERS_FILE,
    FORMATS,
    MATRIX_FILE,
    STATS_FILE,
    RunManifest,
    UsageError,
    run_pipeline,
    write_outputs,
)
from .similarity import Measure, SimilarityConfig, StdMode, compute_stats, similarity_matrix

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_COMPUTE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input(p, required_measure=True):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", type=Path, help="transaction file")
    src.add_argument("--case-study", action="store_true", help="use the bundled nine-transaction example")
    p.add_argument("--format", choices=FORMATS, default="basket")
    p.add_argument("--std-mode", choices=[s.value for s in StdMode], default="sample")
    if required_measure:
        p.add_argument("--measure", choices=[m.value for m in Measure], default="tsim")
        p.add_argument("--lambda", dest="lam", type=float, default=1.0)
        p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output-dir", type=Path, help="write files here instead of stdout")


def build_parser():
    parser = _Parser(prog="tsim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="per-item standard deviations")
    _add_input(p, required_measure=False)

    p = sub.add_parser("matrix", help="pairwise similarity matrix")
    _add_input(p)

    p = sub.add_parser("cluster", help="threshold-graph clusters")
    _add_input(p)
    p.add_argument("--matrix-file", type=Path, help="cluster a precomputed matrix CSV instead")
    p.add_argument("--published", action="store_true", help="cluster the published case-study matrix")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--sweep", type=int, metavar="STEPS", help="print cluster counts over STEPS+1 thresholds")

    p = sub.add_parser("pipeline", help="stats, matrix, clusters (and errata) in one run")
    p.add_argument("--manifest", type=Path, help="JSON run manifest")
    p.add_argument("--input", type=Path)
    p.add_argument("--case-study", action="store_true")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--measure")
    p.add_argument("--std-mode")
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--threshold", type=float)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output-dir", type=Path)
    return parser


def _load(args):
    if args.case_study:
        path = Path(str(casestudy.data_path("case_study_baskets.csv")))
        fmt = "basket"
    elif args.input is not None:
        path, fmt = args.input, args.format
    else:
        raise UsageError("one of --input or --case-study is required")
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_dataset(data, fmt, path=path)


def _emit(args, name, data):
    if args.output_dir is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        write_outputs({name: data}, args.output_dir)


def _config(args):
    return SimilarityConfig(args.lam, args.std_mode, args.measure)


def cmd_stats(args):
    ds = _load(args)
    stats = compute_stats(ds, SimilarityConfig(std_mode=args.std_mode))
    _emit(args, STATS_FILE, write_stats(ds, stats))


def cmd_matrix(args):
    ds = _load(args)
    matrix = similarity_matrix(ds, _config(args), workers=args.workers)
    _emit(args, MATRIX_FILE, write_matrix(matrix))


def cmd_cluster(args):
    if args.published:
        matrix = casestudy.published_matrix()
    elif args.matrix_file is not None:
        matrix = read_matrix(args.matrix_file.read_bytes(), args.measure, path=args.matrix_file)
    else:
        matrix = similarity_matrix(_load(args), _config(args), workers=args.workers)
    if args.sweep is not None:
        lines = ["threshold,n_clusters"]
        lines += [f"{t:.6f},{len(c)}" for t, c in threshold_sweep(matrix, args.sweep)]
        sys.stdout.write("\n".join(lines) + "\n")
        return
    _emit(args, CLUSTERS_FILE, write_clusters(threshold_cluster(matrix, args.threshold)))


def cmd_pipeline(args):
    overrides = dict(
        format=args.format,
        measure=args.measure,
        std_mode=args.std_mode,
        lam=args.lam,
        threshold=args.threshold,
        output_dir=str(args.output_dir) if args.output_dir else None,
    )
    if args.case_study:
        overrides["input"] = str(casestudy.data_path("case_study_baskets.csv"))
        overrides["format"] = "basket"
    elif args.input is not None:
        overrides["input"] = str(args.input)
    if args.manifest is not None:
        manifest = RunManifest.from_file(args.manifest, **overrides)
    else:
        given = {k: v for k, v in overrides.items() if v is not None}
        if "input" not in given or "output_dir" not in given:
            raise UsageError("pipeline needs --manifest, or --input/--case-study and --output-dir")
        manifest = RunManifest(**given)
    if not Path(manifest.input).is_file():
        raise UsageError(f"input file not found: {manifest.input}")
    for path in run_pipeline(manifest, workers=args.workers):
        print(path)


COMMANDS = {"stats": cmd_stats, "matrix": cmd_matrix, "cluster": cmd_cluster, "pipeline": cmd_pipeline}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        # ParseError/ComputeError are ValueErrors too; order matters.
        if isinstance(exc, ParseError):
            print(f"tsim: parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        if isinstance(exc, ComputeError):
            print(f"tsim: {exc}", file=sys.stderr)
            return EXIT_COMPUTE
        print(f"tsim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
