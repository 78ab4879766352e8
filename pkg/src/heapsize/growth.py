"""Cumulative token/type growth over ordered sub-corpora."""
from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import ConfigError, FitError
from .rng import SplitMix64

POLICIES = ("types_desc", "manifest", "pinned_shuffle")


@dataclass(frozen=True)
class Ordering:
    policy: str
    permutation: tuple
    seed: Optional[int] = None
    pins: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.policy not in POLICIES:
            raise ConfigError(f"unknown ordering policy {self.policy!r}")
        if len(set(self.permutation)) != len(self.permutation):
            raise ConfigError("ordering permutation repeats an id")
        for pos, cid in self.pins.items():
            if self.permutation[pos - 1] != cid:
                raise ConfigError(f"pin {pos}={cid} not honoured")


@dataclass(frozen=True)
class GrowthPoint:
    cum_tokens: int
    cum_types: int


@dataclass(frozen=True)
class GrowthSeries:
    ordering: Optional[Ordering]
    points: tuple
    # id added at each step; taken from the ordering when one is given
    corpus_ids: tuple = ()

    def __post_init__(self):
        if not self.corpus_ids and self.ordering is not None:
            object.__setattr__(self, "corpus_ids", tuple(self.ordering.permutation))


def order_by_types_desc(stats: Sequence) -> Ordering:
    if not stats:
        raise ConfigError("cannot order an empty corpus list")
    ranked = sorted(stats, key=lambda s: (-s.type_total, s.id))
    return Ordering("types_desc", tuple(s.id for s in ranked))


def order_manifest(stats: Sequence) -> Ordering:
    if not stats:
        raise ConfigError("cannot order an empty corpus list")
    return Ordering("manifest", tuple(s.id for s in stats))


def order_pinned_shuffle(stats: Sequence, pins: Mapping[int, str], seed: int) -> Ordering:
    """Fix pinned (1-based) positions, shuffle the remaining ids with the seeded RNG."""
    ids = [s.id for s in stats]
    n = len(ids)
    if n == 0:
        raise ConfigError("cannot order an empty corpus list")
    pins = dict(pins)
    for pos, cid in pins.items():
        if not 1 <= pos <= n:
            raise ConfigError(f"pin position {pos} out of range 1..{n}")
        if cid not in ids:
            raise ConfigError(f"pin references unknown corpus id {cid!r}")
    if len(set(pins.values())) != len(pins):
        raise ConfigError("an id is pinned to more than one position")

    rest = [cid for cid in ids if cid not in pins.values()]
    SplitMix64(seed).shuffle(rest)
    it = iter(rest)
    perm = tuple(pins[p] if p in pins else next(it) for p in range(1, n + 1))
    return Ordering("pinned_shuffle", perm, seed, pins)


def cumulative_series(stats: Sequence, ordering: Ordering) -> GrowthSeries:
    by_id = {s.id: s for s in stats}
    if sorted(by_id) != sorted(ordering.permutation):
        raise ConfigError("ordering does not cover exactly the given corpora")
    merged = Counter()
    tokens = 0
    points = []
    for cid in ordering.permutation:
        inv = by_id[cid].inventory
        merged.update(inv.counts)
        tokens += inv.token_total
        points.append(GrowthPoint(tokens, len(merged)))
    return GrowthSeries(ordering, tuple(points))


GROWTH_COLUMNS = ("order_index", "corpus_id", "cum_tokens", "cum_types")


def write_growth_csv(series: GrowthSeries, path) -> None:
    ids = series.corpus_ids or [""] * len(series.points)
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(GROWTH_COLUMNS)
        for i, (cid, p) in enumerate(zip(ids, series.points), start=1):
            w.writerow((i, cid, p.cum_tokens, p.cum_types))


def read_growth_csv(path) -> GrowthSeries:
    """Read a growth CSV; thousands separators in counts are tolerated."""
    try:
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
    except FileNotFoundError:
        raise ConfigError(f"growth CSV not found: {path}") from None
    points, ids = [], []
    for lineno, row in enumerate(rows, start=2):
        try:
            n = int(row["cum_tokens"].replace(",", ""))
            v = int(row["cum_types"].replace(",", ""))
        except (KeyError, AttributeError, ValueError):
            raise FitError(f"{path}: line {lineno}: expected integer cum_tokens and cum_types") from None
        points.append(GrowthPoint(n, v))
        ids.append((row.get("corpus_id") or "").strip())
    return GrowthSeries(None, tuple(points), tuple(ids) if all(ids) else ())
