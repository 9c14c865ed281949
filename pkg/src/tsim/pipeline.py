"""Reproducible end-to-end runs: parse, statistics, matrix, clusters, errata."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__, casestudy
from .clustering import DEFAULT_THRESHOLD, threshold_cluster
from .errors import ParseError
from .io import parse_dataset, write_clusters, write_matrix, write_stats
from .similarity import Measure, SimilarityConfig, StdMode, compute_stats, similarity_matrix

FORMATS = ("basket", "matrix")

STATS_FILE = "stats.csv"
MATRIX_FILE = "matrix.csv"
CLUSTERS_FILE = "clusters.json"
ERRATA_FILE = "errata.csv"
MANIFEST_FILE = "manifest.json"


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunManifest:
    """Everything that determines a run's outputs."""

    input: str
    output_dir: str
    format: str = "basket"
    measure: str = "tsim"
    std_mode: str = "sample"
    lam: float = 1.0
    threshold: float = DEFAULT_THRESHOLD
    tool_version: str = field(default=__version__)

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}; expected one of {FORMATS}")
        if self.measure not in [m.value for m in Measure]:
            raise UsageError(f"unknown measure {self.measure!r}")
        if self.std_mode not in [s.value for s in StdMode]:
            raise UsageError(f"unknown std mode {self.std_mode!r}")
        try:
            lam = float(self.lam)
            threshold = float(self.threshold)
        except (TypeError, ValueError):
            raise UsageError("lambda and threshold must be numbers") from None
        if not lam > 0:
            raise UsageError(f"lambda must be positive, got {lam}")
        if not 0 <= threshold <= 1:
            raise UsageError(f"threshold must lie in [0, 1], got {threshold}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "threshold", threshold)

    @property
    def config(self) -> SimilarityConfig:
        return SimilarityConfig(self.lam, self.std_mode, self.measure)

    def to_json(self) -> bytes:
        doc = asdict(self)
        doc["lambda"] = doc.pop("lam")
        # Output location does not influence output bytes.
        doc.pop("output_dir")
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")

    @classmethod
    def from_file(cls, path, **overrides) -> RunManifest:
        path = Path(path)
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid manifest JSON: {exc.msg}", line=exc.lineno, path=path) from None
        if not isinstance(doc, dict):
            raise ParseError("manifest must be a JSON object", path=path)
        if "lambda" in doc:
            doc["lam"] = doc.pop("lambda")
        doc.pop("tool_version", None)
        unknown = set(doc) - {f for f in cls.__dataclass_fields__ if f != "tool_version"}
        if unknown:
            raise UsageError(f"unknown manifest fields: {sorted(unknown)}")
        if "input" in doc and not Path(doc["input"]).is_absolute():
            doc["input"] = str(path.parent / doc["input"])
        doc.update({k: v for k, v in overrides.items() if v is not None})
        if "input" not in doc or "output_dir" not in doc:
            raise UsageError("manifest needs 'input' and an output directory")
        return cls(**doc)


def render(manifest: RunManifest, workers: int = 1) -> dict[str, bytes]:
    """Compute every output of a run in memory, keyed by file name."""
    path = Path(manifest.input)
    ds = parse_dataset(path.read_bytes(), manifest.format, path=path)
    cfg = manifest.config
    stats = compute_stats(ds, cfg)
    matrix = similarity_matrix(ds, cfg, stats, workers=workers)
    clusters = threshold_cluster(matrix, manifest.threshold)
    outputs = {
        STATS_FILE: write_stats(ds, stats),
        MATRIX_FILE: write_matrix(matrix),
        CLUSTERS_FILE: write_clusters(clusters),
        MANIFEST_FILE: manifest.to_json(),
    }
    if casestudy.is_case_study(ds):
        outputs[ERRATA_FILE] = casestudy.write_errata(casestudy.errata_report(ds))
    return outputs


def write_outputs(outputs: dict[str, bytes], output_dir) -> list[Path]:
    """Write all files or none: each goes to a temp file first, then is renamed."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    staged = []
    done = []
    try:
        for name, data in outputs.items():
            fd, tmp = tempfile.mkstemp(dir=out, prefix=f".{name}.")
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            staged.append((Path(tmp), out / name))
        for tmp, final in staged:
            os.replace(tmp, final)
            done.append(final)
    except BaseException:
        for tmp, _ in staged:
            tmp.unlink(missing_ok=True)
        for final in done:
            final.unlink(missing_ok=True)
        raise
    return done


def run_pipeline(manifest: RunManifest, workers: int = 1) -> list[Path]:
    return write_outputs(render(manifest, workers), manifest.output_dir)
