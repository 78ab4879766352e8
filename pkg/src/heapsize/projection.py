"""Type and TTR projection over a token grid, and the stopping rule."""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional, Sequence

from .errors import ConfigError, NoQualifyingPointError
from .heaps import HeapsParams, eval_heaps

MODES = ("paper_compat", "exact")
DEFAULT_THRESHOLD = 0.0001

_FOUR_PLACES = Decimal("0.0001")


def round_half_up(x: float, places: int = 0) -> Decimal:
    """Half-up rounding of the exact binary value of ``x``."""
    q = Decimal(1) if places == 0 else Decimal(1).scaleb(-places)
    return Decimal(x).quantize(q, rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class ProjectionGrid:
    start: int = 1_000_000
    end: int = 102_000_000
    step: int = 1_000_000

    def __post_init__(self):
        if not (self.start >= self.step >= 1):
            raise ConfigError(f"grid needs start >= step >= 1, got start={self.start} step={self.step}")
        if self.end < self.start:
            raise ConfigError(f"grid end {self.end} is below start {self.start}")
        if (self.end - self.start) % self.step:
            raise ConfigError("grid end - start must be a multiple of step")

    def points(self):
        return range(self.start, self.end + 1, self.step)

    def __len__(self):
        return (self.end - self.start) // self.step + 1


@dataclass(frozen=True)
class ProjectionRow:
    n: int
    v_real: float
    v_rounded: int
    ttr: float
    ttr_display: float
    # magnitude of the TTR drop from the previous grid point; None on the first row
    delta_ttr: Optional[float] = None
    delta_display: Optional[float] = None


@dataclass(frozen=True)
class Recommendation:
    n_recommended: int
    threshold: float
    mode: str
    params_used: HeapsParams


def project(params: HeapsParams, grid: ProjectionGrid = ProjectionGrid()) -> list:
    rows = []
    prev_ttr = None
    for n in grid.points():
        v = eval_heaps(params, n)
        ttr = v / n
        delta = delta_disp = None
        if prev_ttr is not None:
            delta = prev_ttr - ttr
            delta_disp = float(round_half_up(abs(delta), 4))
        rows.append(
            ProjectionRow(
                n, v, int(round_half_up(v)), ttr, float(round_half_up(ttr, 4)), delta, delta_disp
            )
        )
        prev_ttr = ttr
    return rows


def recommend_size(rows: Sequence[ProjectionRow], threshold: float = DEFAULT_THRESHOLD,
                   mode: str = "paper_compat", params: Optional[HeapsParams] = None) -> Recommendation:
    """Return the first grid point whose TTR change meets the threshold.

    ``paper_compat`` compares the 4-decimal half-up rounded change with
    ``<= threshold``; ``exact`` compares the raw change with ``< threshold``.
    """
    if mode not in MODES:
        raise ConfigError(f"unknown mode {mode!r}; expected one of {MODES}")
    if len(rows) < 2:
        raise ConfigError("need at least 2 projection rows")
    for row in rows[1:]:
        if mode == "paper_compat":
            hit = Decimal(repr(row.delta_display)) <= Decimal(repr(threshold))
        else:
            hit = row.delta_ttr < threshold
        if hit:
            return Recommendation(row.n, threshold, mode, params)
    raise NoQualifyingPointError(
        f"no grid point up to {rows[-1].n} has a TTR change meeting {threshold} ({mode}); raise the grid end"
    )


PROJECTION_COLUMNS = ("tokens", "type_estimate", "ttr", "ttr_change", "ttr_display", "ttr_change_display")


def _fmt_decimal(x):
    return "" if x is None else format(round_half_up(x, 4), "f")


def write_projection_csv(rows: Sequence[ProjectionRow], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(PROJECTION_COLUMNS)
        for r in rows:
            w.writerow((
                r.n,
                r.v_rounded,
                repr(r.ttr),
                "" if r.delta_ttr is None else repr(r.delta_ttr),
                _fmt_decimal(r.ttr),
                _fmt_decimal(None if r.delta_ttr is None else abs(r.delta_ttr)),
            ))


def recommendation_to_dict(rec: Recommendation) -> dict:
    out = {"n_recommended": rec.n_recommended, "threshold": rec.threshold, "mode": rec.mode}
    if rec.params_used is not None:
        out["k"] = rec.params_used.k
        out["beta"] = rec.params_used.beta
    return out


def write_recommendation_json(rec: Recommendation, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(recommendation_to_dict(rec), f, indent=2)
        f.write("\n")
