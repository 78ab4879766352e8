"""Word-form (type I) tokenization and type inventories.

A token is a whitespace-delimited run; its type is its surface form. The hot
splitting loop lives in a compiled kernel when available, otherwise in
``_tokenize_py``; set ``HEAPSIZE_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from . import _tokenize_py

if os.environ.get("HEAPSIZE_PURE_PYTHON"):
    _kernel = _tokenize_py
else:
    try:
        from . import _tokenize_cy as _kernel
    except ImportError:  # extension not built
        _kernel = _tokenize_py

KERNEL = "cython" if _kernel is not _tokenize_py else "python"


class DigitPolicy(str, Enum):
    EXCLUDE_PURE_DIGIT_TOKENS = "exclude_pure_digit_tokens"
    KEEP_ALL = "keep_all"


class PunctuationPolicy(str, Enum):
    STRIP = "strip"
    KEEP_ATTACHED = "keep_attached"


@dataclass(frozen=True)
class TokenRules:
    digit_policy: DigitPolicy = DigitPolicy.EXCLUDE_PURE_DIGIT_TOKENS
    punctuation_policy: PunctuationPolicy = PunctuationPolicy.STRIP
    case_fold: bool = False

    def to_dict(self):
        return {
            "digit_policy": self.digit_policy.value,
            "punctuation_policy": self.punctuation_policy.value,
            "case_fold": self.case_fold,
        }


DEFAULT_RULES = TokenRules()


class TokenSequence(tuple):
    """Ordered, immutable run of normalized token strings."""

    __slots__ = ()

    @property
    def tokens(self):
        return tuple(self)


def tokenize(text: str, rules: TokenRules = DEFAULT_RULES, kernel=None) -> TokenSequence:
    """Split text into word forms under ``rules``.

    Case folding, when enabled, is applied before splitting so the strip step
    sees the folded characters.
    """
    if rules.case_fold:
        text = text.casefold()
    k = kernel or _kernel
    return TokenSequence(
        k.split_forms(
            text,
            rules.punctuation_policy is PunctuationPolicy.STRIP,
            rules.digit_policy is DigitPolicy.KEEP_ALL,
        )
    )


@dataclass(frozen=True, eq=False)
class TypeInventory:
    """Frequency map of word forms; ``token_total`` is N and ``type_total`` is V."""

    counts: Mapping[str, int] = field(default_factory=dict)
    token_total: int = field(init=False)
    type_total: int = field(init=False)

    def __post_init__(self):
        if any(c < 1 for c in self.counts.values()):
            raise ValueError("inventory counts must be >= 1")
        object.__setattr__(self, "token_total", sum(self.counts.values()))
        object.__setattr__(self, "type_total", len(self.counts))

    def __eq__(self, other):
        if not isinstance(other, TypeInventory):
            return NotImplemented
        return dict(self.counts) == dict(other.counts)

    __hash__ = None


def build_inventory(seq: Iterable[str]) -> TypeInventory:
    return TypeInventory(dict(Counter(seq)))


def merge_inventories(a: TypeInventory, b: TypeInventory) -> TypeInventory:
    merged = Counter(a.counts)
    merged.update(b.counts)
    return TypeInventory(dict(merged))


def merge_all(inventories: Iterable[TypeInventory]) -> TypeInventory:
    total = Counter()
    for inv in inventories:
        total.update(inv.counts)
    return TypeInventory(dict(total))
