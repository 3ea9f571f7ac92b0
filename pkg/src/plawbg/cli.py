"""Command line interface: ``plawbg fit|synth|filter|rebin``.

Exit codes: 0 success, 1 I/O or parse failure, 2 when the data or
parameters do not admit a power-law model.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from plawbg.degree import DegreeDistribution, degree_distribution, degree_vector
from plawbg.errors import (
    EmptyDistributionError,
    EstimatorPreconditionError,
    ParameterError,
    StructuralInputError,
)
from plawbg.matrix_core import (
    AdjacencyMatrix,
    IncidenceMatrix,
    adjacency_from_edge_list,
    incidence_to_adjacency,
)
from plawbg.model import FitConfig, PowerLawModel, fit_perfect_power_law
from plawbg.plot import loglog_svg
from plawbg.rebin import (
    DEFAULT_FACTOR,
    DEFAULT_RATIO_THRESHOLD,
    FitReport,
    RebinnedDistribution,
    compare,
    filter_high_degree,
    rebin,
)
from plawbg.synth import GeneratorSpec, sample_graph

log = logging.getLogger("plawbg")

BINS_HEADER = ["degree", "observed_count", "rebinned_count", "model_count"]
EMIT_CHOICES = ("json", "csv", "svg")


class ParseError(Exception):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.lineno = lineno


@dataclass
class RunConfig:
    input: Path
    format: str = "edgelist"
    direction: str = "out"
    fit: FitConfig = field(default_factory=FitConfig)
    ratio_threshold: float = DEFAULT_RATIO_THRESHOLD
    factor: float = DEFAULT_FACTOR
    out_dir: Path = Path(".")
    emit: tuple[str, ...] = ("json", "csv")


@dataclass
class PipelineResult:
    adjacency: AdjacencyMatrix
    degrees: dict
    observed: DegreeDistribution
    model: PowerLawModel
    objective: float
    rebinned: RebinnedDistribution
    report: FitReport


# ---------------------------------------------------------------- ingestion


def _data_lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield lineno, line


def read_edge_list(path) -> tuple[AdjacencyMatrix, dict]:
    pairs = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2 or not all(fields):
            raise ParseError(path, lineno, "expected 'source<TAB>destination'")
        pairs.append((fields[0], fields[1]))
    return adjacency_from_edge_list(pairs)


def read_triples(path) -> tuple[AdjacencyMatrix, dict]:
    index: dict[str, int] = {}
    rows = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 3 or not fields[1]:
            raise ParseError(path, lineno, "expected 'edge_index<TAB>vertex_id<TAB>sign'")
        try:
            edge = int(fields[0])
        except ValueError:
            raise ParseError(path, lineno, f"edge index {fields[0]!r} is not an integer") from None
        if edge < 0:
            raise ParseError(path, lineno, "edge index must be non-negative")
        if fields[2] not in ("-1", "1", "+1"):
            raise ParseError(path, lineno, f"sign must be -1 or 1, got {fields[2]!r}")
        rows.append((edge, index.setdefault(fields[1], len(index)), int(fields[2])))
    n_edges = 1 + max((r[0] for r in rows), default=-1)
    e = IncidenceMatrix.from_triples(n_edges, len(index), rows)
    a = incidence_to_adjacency(e)
    return AdjacencyMatrix(a.n_vertices, a.matrix, labels=tuple(index)), index


def load(cfg: RunConfig) -> AdjacencyMatrix:
    reader = read_edge_list if cfg.format == "edgelist" else read_triples
    return reader(cfg.input)[0]


# ---------------------------------------------------------------- pipeline


def run_pipeline(cfg: RunConfig) -> PipelineResult:
    a = load(cfg)
    degrees = degree_vector(a, cfg.direction)
    observed = degree_distribution(degrees, cfg.direction)
    model, obj = fit_perfect_power_law(observed, cfg.fit)
    rebinned = rebin(observed, model)
    report = compare(
        rebinned, model, ratio_threshold=cfg.ratio_threshold, factor=cfg.factor, objective_value=obj
    )
    log.info("alpha=%.6g objective=%.6g verdict=%s", model.alpha, obj, report.verdict)
    return PipelineResult(a, degrees, observed, model, obj, rebinned, report)


def report_dict(res: PipelineResult, cfg: RunConfig) -> dict:
    obs, model, rep = res.observed, res.model, res.report
    return {
        "direction": cfg.direction,
        "alpha": model.alpha,
        "N": obs.N,
        "M": obs.M,
        "d_max": obs.d_max,
        "N_d": obs.N_d,
        "n_d1": obs.n_d1,
        "objective": res.objective,
        "verdict": rep.verdict,
        "divergence": rep.divergence,
        "ratio_threshold": cfg.ratio_threshold,
        "factor": cfg.factor,
        "flagged_degrees": list(rep.flagged_degrees),
        "no_overlap": rep.no_overlap,
        "optimizer": cfg.fit.optimizer,
        "seed": cfg.fit.seed,
        "model": {
            "scale_c": model.scale_c,
            "N": model.model_N,
            "M": model.model_M,
            "d_max": model.d_max,
            "N_d": model.N_d,
            "bins": list(model.bins),
            "counts": list(model.counts),
        },
    }


def bins_csv(res: PipelineResult) -> str:
    observed = dict(zip(res.observed.bins, res.observed.counts))
    rebinned = dict(zip(res.rebinned.bins, res.rebinned.counts))
    model = dict(zip(res.model.bins, res.model.counts))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BINS_HEADER)
    for d in sorted(set(observed) | set(model)):
        w.writerow([d, observed.get(d, 0), rebinned.get(d, ""), model.get(d, "")])
    return buf.getvalue()


def fit_svg(res: PipelineResult) -> str:
    return loglog_svg(
        [
            ("observed", res.observed.bins, res.observed.counts, "circle", "#1f4fbf"),
            ("power-law model", res.model.bins, res.model.counts, "triangle", "black"),
            ("rebinned", res.rebinned.bins, res.rebinned.counts, "plus", "#d62728"),
        ],
        title=f"{res.observed.direction}-degree distribution, alpha = {res.model.alpha:.3f}",
    )


def write_atomic(files: dict[Path, str]) -> None:
    """Write every file to a temporary sibling first, then rename them all."""
    staged = []
    try:
        for path, text in files.items():
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
            staged.append((tmp, path))
    except BaseException:
        for tmp, _ in staged:
            os.unlink(tmp)
        raise
    for tmp, path in staged:
        os.replace(tmp, path)


# ---------------------------------------------------------------- commands


def cmd_fit(cfg: RunConfig) -> int:
    res = run_pipeline(cfg)
    files = {}
    if "json" in cfg.emit:
        files[cfg.out_dir / "report.json"] = json.dumps(report_dict(res, cfg), indent=2) + "\n"
    if "csv" in cfg.emit:
        files[cfg.out_dir / "bins.csv"] = bins_csv(res)
    if "svg" in cfg.emit:
        files[cfg.out_dir / "fit.svg"] = fit_svg(res)
    write_atomic(files)
    return 0


def cmd_rebin(cfg: RunConfig) -> int:
    res = run_pipeline(cfg)
    write_atomic({cfg.out_dir / "bins.csv": bins_csv(res)})
    return 0


def cmd_filter(cfg: RunConfig) -> int:
    res = run_pipeline(cfg)
    flagged = filter_high_degree(res.degrees, res.model, res.rebinned, cfg.factor)
    ids = sorted(str(v) for v in flagged)
    write_atomic({cfg.out_dir / "flagged.txt": "".join(f"{v}\n" for v in ids)})
    log.info("%d vertices flagged", len(ids))
    return 0


def edge_list_text(e: IncidenceMatrix) -> str:
    """One ``v<source>\tv<destination>`` line per complete edge, in edge order."""
    src = np.full(e.n_edges, -1, dtype=np.int64)
    dst = np.full(e.n_edges, -1, dtype=np.int64)
    out = e.sign < 0
    src[e.edge[out]] = e.vertex[out]
    dst[e.edge[~out]] = e.vertex[~out]
    keep = (src >= 0) & (dst >= 0)
    return "".join(f"v{u}\tv{v}\n" for u, v in zip(src[keep].tolist(), dst[keep].tolist()))


def cmd_synth(spec: GeneratorSpec, output: Path) -> int:
    e = sample_graph(spec)
    header = (
        f"# plawbg synth kind={spec.kind} exponent={spec.exponent} mu={spec.mu} "
        f"sigma={spec.sigma} n={spec.n_samples} x_min={spec.x_min} seed={spec.seed}\n"
    )
    write_atomic({output: header + edge_list_text(e)})
    log.info("wrote %d edges to %s", e.n_edges, output)
    return 0


# ---------------------------------------------------------------- argparse


def _emit(value: str) -> tuple[str, ...]:
    items = tuple(v.strip() for v in value.split(",") if v.strip())
    bad = [v for v in items if v not in EMIT_CHOICES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown emit target(s): {', '.join(bad)}")
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plawbg", description="Fit power-law background models to graph degree distributions."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path)
    common.add_argument("--format", choices=("edgelist", "triples"), default="edgelist")
    common.add_argument("--direction", choices=("in", "out"), default="out")
    common.add_argument("--optimizer", choices=("exhaustive", "annealing"), default="exhaustive")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-bins", type=int, default=16)
    common.add_argument("--budget", type=int, default=100_000)
    common.add_argument("--tolerance", type=float, default=0.0)
    common.add_argument("--ratio-threshold", type=float, default=DEFAULT_RATIO_THRESHOLD)
    common.add_argument("--factor", type=float, default=DEFAULT_FACTOR)
    common.add_argument("--out-dir", type=Path, default=Path("."))

    p = sub.add_parser("fit", parents=[common], help="fit, rebin and report")
    p.add_argument("--emit", type=_emit, default=("json", "csv"), help="comma list of json,csv,svg")
    sub.add_parser("rebin", parents=[common], help="write bins.csv only")
    sub.add_parser("filter", parents=[common], help="write flagged.txt of high-degree vertices")

    s = sub.add_parser("synth", help="write a synthetic edge list")
    s.add_argument("--kind", choices=("power_law", "log_normal"), default="power_law")
    s.add_argument("--exponent", type=float, default=1.8)
    s.add_argument("--mu", type=float, default=0.0)
    s.add_argument("--sigma", type=float, default=1.0)
    s.add_argument("--n", type=int, default=10_000)
    s.add_argument("--x-min", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out-dir", type=Path, default=Path("."))
    s.add_argument("--output", type=Path, help="defaults to OUT_DIR/synth.tsv")
    return parser


def _run_config(args) -> RunConfig:
    return RunConfig(
        input=args.input,
        format=args.format,
        direction=args.direction,
        fit=FitConfig(
            optimizer=args.optimizer,
            max_bins=args.max_bins,
            seed=args.seed,
            iteration_budget=args.budget,
            tolerance=args.tolerance,
        ),
        ratio_threshold=args.ratio_threshold,
        factor=args.factor,
        out_dir=args.out_dir,
        emit=getattr(args, "emit", ("json", "csv")),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        if args.command == "synth":
            spec = GeneratorSpec(
                kind=args.kind,
                exponent=args.exponent,
                mu=args.mu,
                sigma=args.sigma,
                n_samples=args.n,
                x_min=args.x_min,
                seed=args.seed,
            )
            return cmd_synth(spec, args.output or args.out_dir / "synth.tsv")
        cfg = _run_config(args)
        if not cfg.factor > 1:
            raise ParameterError(f"--factor must exceed 1, got {cfg.factor}")
        return {"fit": cmd_fit, "rebin": cmd_rebin, "filter": cmd_filter}[args.command](cfg)
    except (EstimatorPreconditionError, EmptyDistributionError, ParameterError) as exc:
        print(f"plawbg: {exc}", file=sys.stderr)
        return 2
    except (ParseError, StructuralInputError, OSError, UnicodeDecodeError) as exc:
        print(f"plawbg: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
