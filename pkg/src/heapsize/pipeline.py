"""Stage functions shared by the CLI subcommands."""
from __future__ import annotations

import csv
import hashlib
import json
import os
from dataclasses import dataclass, field
from typing import Optional

from . import svg
from .errors import ConfigError, HeapsizeError
from .growth import (
    cumulative_series,
    order_by_types_desc,
    order_manifest,
    order_pinned_shuffle,
    write_growth_csv,
)
from .heaps import HeapsParams, fit_heaps, write_fit_json
from .ingest import CorpusManifest, load_manifest, read_documents
from .projection import (
    DEFAULT_THRESHOLD,
    ProjectionGrid,
    project,
    recommend_size,
    recommendation_to_dict,
    write_projection_csv,
    write_recommendation_json,
)
from .rng import derive_seed
from .sampler import SampleSpec, SampleUnit, SubCorpus, downsample
from .tokenizer import DEFAULT_RULES, TokenRules, build_inventory, merge_all, tokenize

# CLI spelling -> (policy, file tag)
ORDERINGS = {
    "types-desc": ("types_desc", "types_desc"),
    "manifest": ("manifest", "manifest"),
    "shuffle": ("pinned_shuffle", "shuffle"),
}


@dataclass
class RunConfig:
    manifest: str
    seed: int = 0
    target_tokens: Optional[int] = None  # None: smallest raw domain size
    unit: str = "sentence"
    orderings: tuple = ("types-desc", "manifest")
    pins: dict = field(default_factory=dict)
    grid: ProjectionGrid = field(default_factory=ProjectionGrid)
    threshold: float = DEFAULT_THRESHOLD
    mode: str = "paper_compat"
    out: str = "."
    emit_svg: bool = False
    rules: TokenRules = DEFAULT_RULES


@dataclass(frozen=True)
class DomainStats:
    id: str
    label: str
    register: str
    raw: object  # TypeInventory of the whole domain
    sample: SubCorpus


def domain_units(manifest: CorpusManifest, domain_id: str, unit: str, rules: TokenRules) -> list:
    read_unit = "line" if unit == "token" else unit
    units = []
    for doc in read_documents(manifest, domain_id, read_unit):
        units.extend(tokenize(u, rules) for u in doc.units)
    return units


def collect_stats(config: RunConfig, manifest: Optional[CorpusManifest] = None) -> list:
    manifest = manifest or load_manifest(config.manifest)
    per_domain = []
    for d in manifest.domains:
        units = domain_units(manifest, d.id, config.unit, config.rules)
        raw = build_inventory(tok for u in units for tok in u)
        if raw.token_total == 0:
            raise ConfigError(f"domain {d.id!r} has no tokens after tokenization")
        per_domain.append((d, units, raw))

    target = config.target_tokens
    if target is None:
        target = min(raw.token_total for _, _, raw in per_domain)
    unit = SampleUnit(config.unit)
    stats = []
    for d, units, raw in per_domain:
        spec = SampleSpec(target, unit, derive_seed(config.seed, d.id))
        stats.append(DomainStats(d.id, d.label, d.register, raw, downsample(units, spec, d.id)))
    return stats


STATS_COLUMNS = ("domain", "label", "register", "raw_tokens", "raw_types", "sampled_tokens", "sampled_types")


def stats_rows(stats) -> list:
    rows = [
        (s.id, s.label, s.register, s.raw.token_total, s.raw.type_total,
         s.sample.token_total, s.sample.type_total)
        for s in stats
    ]
    raw_all = merge_all(s.raw for s in stats)
    sample_all = merge_all(s.sample.inventory for s in stats)
    rows.append(("TOTAL", "", "", raw_all.token_total, raw_all.type_total,
                 sample_all.token_total, sample_all.type_total))
    return rows


def write_stats_csv(stats, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(STATS_COLUMNS)
        w.writerows(stats_rows(stats))


def format_table(header, rows) -> str:
    cells = [list(map(str, header))] + [[f"{c:,}" if isinstance(c, int) else str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for j, r in enumerate(cells):
        lines.append("  ".join(c.rjust(w) if j and c[:1].isdigit() else c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if j == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def build_ordering(name: str, subcorpora, seed: int, pins: dict):
    if name not in ORDERINGS:
        raise ConfigError(f"unknown ordering {name!r}; expected one of {sorted(ORDERINGS)}")
    policy = ORDERINGS[name][0]
    if policy == "types_desc":
        return order_by_types_desc(subcorpora)
    if policy == "manifest":
        return order_manifest(subcorpora)
    return order_pinned_shuffle(subcorpora, pins, derive_seed(seed, "ordering"))


def growth_for(config: RunConfig, stats) -> dict:
    subcorpora = [s.sample for s in stats]
    out = {}
    for name in config.orderings:
        ordering = build_ordering(name, subcorpora, config.seed, config.pins)
        out[ORDERINGS[name][1]] = cumulative_series(subcorpora, ordering)
    return out


def chart_set(named_series: dict, named_rows: dict) -> dict:
    """Build the four figure SVGs: observed growth, projected V, TTR and TTR change."""
    charts = {}
    growth = [(name, [(n, v) for n, v in pts]) for name, pts in named_series.items() if pts]
    if growth:
        charts["growth.svg"] = svg.line_chart(
            growth, "Cumulative types against cumulative tokens", "tokens (N)", "types (V)", markers=True
        )
    charts["types.svg"] = svg.line_chart(
        [(name, [(r.n, r.v_real) for r in rows]) for name, rows in named_rows.items()],
        "Projected types", "tokens (N)", "types (V)",
    )
    charts["ttr.svg"] = svg.line_chart(
        [(name, [(r.n, r.ttr) for r in rows]) for name, rows in named_rows.items()],
        "Projected type-token ratio", "tokens (N)", "TTR",
    )
    charts["ttr_change.svg"] = svg.line_chart(
        [(name, [(r.n, r.delta_ttr) for r in rows[1:]]) for name, rows in named_rows.items()],
        "Change in TTR per grid step", "tokens (N)", "TTR change",
    )
    return charts


def series_points(params: HeapsParams) -> list:
    return [tuple(p) for p in params.provenance.get("points", [])]


def project_one(params: HeapsParams, grid, threshold, mode):
    rows = project(params, grid)
    return rows, recommend_size(rows, threshold, mode, params)


def write_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, ensure_ascii=False, indent=2)
        f.write("\n")


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        h.update(f.read())
    return h.hexdigest()


class Stage:
    """Prefix errors raised inside a pipeline stage with the stage name."""

    def __init__(self, name):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if isinstance(exc, HeapsizeError):
            exc.args = (f"stage {self.name}: {exc}",)
        return False


def analyze(config: RunConfig) -> dict:
    os.makedirs(config.out, exist_ok=True)
    written = []

    def out(name):
        written.append(name)
        return os.path.join(config.out, name)

    with Stage("stats"):
        stats = collect_stats(config)
        write_stats_csv(stats, out("stats.csv"))
    with Stage("growth"):
        series = growth_for(config, stats)
        for tag, s in series.items():
            write_growth_csv(s, out(f"growth_{tag}.csv"))
    fits, recs, all_rows = {}, {}, {}
    for tag, s in series.items():
        with Stage(f"fit[{tag}]"):
            fits[tag] = fit_heaps(s)
            write_fit_json(fits[tag], out(f"fit_{tag}.json"))
        with Stage(f"project[{tag}]"):
            rows, rec = project_one(fits[tag], config.grid, config.threshold, config.mode)
            all_rows[tag], recs[tag] = rows, rec
            write_projection_csv(rows, out(f"projection_{tag}.csv"))
            write_recommendation_json(rec, out(f"recommendation_{tag}.json"))
    if config.emit_svg:
        with Stage("report"):
            charts = chart_set({t: [(p.cum_tokens, p.cum_types) for p in s.points] for t, s in series.items()},
                               all_rows)
            for name, text in charts.items():
                svg.write_svg(out(name), text)

    summary = {
        "seed": config.seed,
        "unit": config.unit,
        "target_tokens": config.target_tokens or min(s.raw.token_total for s in stats),
        "tokenizer": config.rules.to_dict(),
        "grid": {"start": config.grid.start, "end": config.grid.end, "step": config.grid.step},
        "domains": [
            {"id": s.id, "sampled_tokens": s.sample.token_total, "sampled_types": s.sample.type_total}
            for s in stats
        ],
        "orderings": {
            tag: {
                "corpus_ids": list(series[tag].corpus_ids),
                "k": fits[tag].k,
                "beta": fits[tag].beta,
                "r_squared": fits[tag].r_squared,
                **{key: val for key, val in recommendation_to_dict(recs[tag]).items() if key not in ("k", "beta")},
            }
            for tag in series
        },
    }
    write_json(summary, out("summary.json"))
    outputs = {name: sha256_file(os.path.join(config.out, name)) for name in written}
    write_json({"outputs": outputs}, os.path.join(config.out, "outputs.json"))
    return summary
