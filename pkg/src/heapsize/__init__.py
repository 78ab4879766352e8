"""Appropriate corpus size from Heaps' law and type-token ratio change."""
from .errors import (
    ConfigError,
    FitError,
    HeapsizeError,
    IngestError,
    InsufficientTokensError,
    NoQualifyingPointError,
)
from .growth import (
    GrowthPoint,
    GrowthSeries,
    Ordering,
    cumulative_series,
    order_by_types_desc,
    order_manifest,
    order_pinned_shuffle,
)
from .heaps import HeapsParams, eval_heaps, fit_heaps
from .ingest import CorpusManifest, DomainSpec, Document, load_manifest, read_documents
from .projection import ProjectionGrid, ProjectionRow, Recommendation, project, recommend_size
from .sampler import SampleSpec, SubCorpus, downsample
from .tokenizer import (
    KERNEL,
    TokenRules,
    TokenSequence,
    TypeInventory,
    build_inventory,
    merge_inventories,
    tokenize,
)

__version__ = "0.1.0"
