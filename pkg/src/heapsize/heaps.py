"""Heaps' law V = k * N**beta, fitted by least squares on log V against log N."""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import FitError


@dataclass(frozen=True)
class HeapsParams:
    k: float
    beta: float
    r_squared: float = 1.0
    n_points: int = 0
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.k > 0:
            raise FitError(f"Heaps coefficient k must be positive, got {self.k}")


def _points(series):
    pts = getattr(series, "points", series)
    out = []
    for p in pts:
        if hasattr(p, "cum_tokens"):
            out.append((p.cum_tokens, p.cum_types))
        else:
            n, v = p
            out.append((n, v))
    return out


def fit_heaps(series, base: float = math.e) -> HeapsParams:
    """Fit k and beta by unweighted OLS in log space.

    ``series`` is a GrowthSeries or any sequence of (N, V) pairs. ``base``
    only exists to show the result does not depend on it.
    """
    pts = _points(series)
    if any(n <= 0 or v <= 0 for n, v in pts):
        raise FitError("all token and type counts must be positive")
    if len({n for n, _ in pts}) < 2:
        raise FitError(f"need at least 2 points with distinct token counts, got {len(pts)}")

    arr = np.asarray(pts, dtype=float)
    x = np.log(arr[:, 0]) / math.log(base)
    y = np.log(arr[:, 1]) / math.log(base)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    beta = float(dx @ dy) / sxx
    intercept = float(y.mean()) - beta * float(x.mean())
    resid = dy - beta * dx
    syy = float(dy @ dy)
    r2 = 1.0 if syy == 0 else max(0.0, min(1.0, 1.0 - float(resid @ resid) / syy))

    if not 0 < beta < 1:
        warnings.warn(f"Heaps exponent {beta:.5f} outside (0, 1)", RuntimeWarning, stacklevel=2)

    provenance = {}
    ordering = getattr(series, "ordering", None)
    if hasattr(series, "points"):
        provenance = {
            "ordering": ordering.policy if ordering else None,
            "corpus_ids": list(getattr(series, "corpus_ids", ())),
            "points": [[int(n), int(v)] for n, v in pts],
        }
        if ordering is not None and ordering.seed is not None:
            provenance["seed"] = ordering.seed
    return HeapsParams(float(base**intercept), beta, r2, len(pts), provenance)


def eval_heaps(params: HeapsParams, n) -> float:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return params.k * n**params.beta


def params_to_dict(params: HeapsParams) -> dict:
    return {
        "k": params.k,
        "beta": params.beta,
        "r_squared": params.r_squared,
        "n_points": params.n_points,
        "series": params.provenance,
    }


def write_fit_json(params: HeapsParams, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(params_to_dict(params), f, ensure_ascii=False, indent=2)
        f.write("\n")


def read_fit_json(path) -> HeapsParams:
    from .errors import ConfigError

    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ConfigError(f"fit JSON not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: line {e.lineno}: {e.msg}") from None
    try:
        return HeapsParams(
            float(data["k"]),
            float(data["beta"]),
            float(data.get("r_squared", 1.0)),
            int(data.get("n_points", 0)),
            data.get("series") or {},
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"{path}: malformed fit JSON ({e})") from None
