"""Equal-size random down-sampling of sub-corpora."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import ConfigError, InsufficientTokensError
from .rng import SplitMix64
from .tokenizer import TypeInventory, build_inventory


class SampleUnit(str, Enum):
    LINE = "line"
    SENTENCE = "sentence"
    TOKEN = "token"


@dataclass(frozen=True)
class SampleSpec:
    target_tokens: int
    unit: SampleUnit = SampleUnit.SENTENCE
    seed: int = 0

    def __post_init__(self):
        if self.target_tokens < 1:
            raise ConfigError(f"target_tokens must be >= 1, got {self.target_tokens}")
        object.__setattr__(self, "unit", SampleUnit(self.unit))


@dataclass(frozen=True)
class SubCorpus:
    id: str
    inventory: TypeInventory
    # indices of the retained units (or tokens, for unit=token), in draw order
    sampled_units: tuple = field(default=(), repr=False)

    @property
    def token_total(self):
        return self.inventory.token_total

    @property
    def type_total(self):
        return self.inventory.type_total


def downsample(units: Sequence[Sequence[str]], spec: SampleSpec, corpus_id: str = "") -> SubCorpus:
    """Draw units without replacement until the token budget is met.

    Units are visited in the order of a seeded partial Fisher-Yates shuffle and
    accumulated until the running token count first reaches
    ``spec.target_tokens``. For ``unit=token`` the units are flattened to
    single tokens, so the sample hits the target exactly.
    """
    if spec.unit is SampleUnit.TOKEN:
        units = [(tok,) for seq in units for tok in seq]
    available = sum(len(u) for u in units)
    if available < spec.target_tokens:
        raise InsufficientTokensError(available, spec.target_tokens, corpus_id)

    rng = SplitMix64(spec.seed)
    order = list(range(len(units)))
    picked = []
    taken = 0
    n = len(order)
    # partial Fisher-Yates: position i receives a uniform pick from the tail
    for i in range(n):
        j = i + rng.below(n - i)
        order[i], order[j] = order[j], order[i]
        idx = order[i]
        picked.append(idx)
        taken += len(units[idx])
        if taken >= spec.target_tokens:
            break

    tokens = [tok for idx in picked for tok in units[idx]]
    return SubCorpus(corpus_id, build_inventory(tokens), tuple(picked))
