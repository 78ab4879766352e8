"""Corpus manifests and document streams.

Manifest format (JSON, UTF-8)::

    {
      "domains": [
        {"id": "C1", "label": "Newspaper-Culture", "register": "written",
         "paths": ["culture/*.txt"], "encoding": "utf-8"},
        ...
      ]
    }

``encoding`` is optional (default ``utf-8``). Relative path patterns are
resolved against the manifest's directory and expanded with recursive
``glob``. Domain order in the file is kept exactly; it is the order used by
the ``manifest`` growth ordering. ``dump_manifest`` writes the same format
back, so load/dump round-trips.
"""
from __future__ import annotations

import glob
import json
import os
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import ConfigError, IngestError

REGISTERS = ("written", "spoken")
UNIT_MODES = ("line", "sentence")

_SENTENCE_BREAK = re.compile(r"(?<=[.?!])\s+")


@dataclass(frozen=True)
class DomainSpec:
    id: str
    label: str
    register: str
    paths: tuple
    encoding: str = "utf-8"

    def __post_init__(self):
        if not self.id:
            raise ConfigError("domain id must be non-empty")
        if self.register not in REGISTERS:
            raise ConfigError(
                f"domain {self.id!r}: register must be one of {REGISTERS}, got {self.register!r}"
            )
        if not self.paths:
            raise ConfigError(f"domain {self.id!r}: at least one path pattern is required")


@dataclass(frozen=True)
class CorpusManifest:
    domains: tuple
    base_dir: str = field(default=".", compare=False)

    def __post_init__(self):
        seen = set()
        for d in self.domains:
            if d.id in seen:
                raise ConfigError(f"duplicate domain id {d.id!r}")
            seen.add(d.id)

    @property
    def ids(self):
        return [d.id for d in self.domains]

    def domain(self, domain_id):
        for d in self.domains:
            if d.id == domain_id:
                return d
        raise IngestError(f"unknown domain id {domain_id!r}")


@dataclass(frozen=True)
class Document:
    domain_id: str
    source: str
    units: tuple


def _parse_domain(i, entry):
    where = f"domains[{i}]"
    if not isinstance(entry, dict):
        raise ConfigError(f"{where}: expected an object")
    for key in ("id", "label", "register", "paths"):
        if key not in entry:
            raise ConfigError(f"{where}: missing field {key!r}")
    unknown = set(entry) - {"id", "label", "register", "paths", "encoding"}
    if unknown:
        raise ConfigError(f"{where}: unknown field(s) {sorted(unknown)}")
    if not isinstance(entry["id"], str):
        raise ConfigError(f"{where}.id: expected a string")
    paths = entry["paths"]
    if isinstance(paths, str) or not isinstance(paths, list) or not all(isinstance(p, str) for p in paths):
        raise ConfigError(f"{where}.paths: expected a list of strings")
    encoding = entry.get("encoding", "utf-8")
    try:
        "".encode(encoding)
    except LookupError:
        raise ConfigError(f"{where}.encoding: unknown encoding {encoding!r}") from None
    try:
        return DomainSpec(entry["id"], str(entry["label"]), entry["register"], tuple(paths), encoding)
    except ConfigError as e:
        raise ConfigError(f"{where}: {e}") from None


def parse_manifest(text: str, base_dir: str = ".") -> CorpusManifest:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"manifest: line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict) or not isinstance(data.get("domains"), list):
        raise ConfigError("manifest: top level must be an object with a 'domains' list")
    domains = tuple(_parse_domain(i, d) for i, d in enumerate(data["domains"]))
    if not domains:
        raise ConfigError("manifest: 'domains' is empty")
    return CorpusManifest(domains, base_dir)


def load_manifest(path) -> CorpusManifest:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except FileNotFoundError:
        raise ConfigError(f"manifest not found: {path}") from None
    try:
        return parse_manifest(text, os.path.dirname(os.path.abspath(path)))
    except ConfigError as e:
        raise ConfigError(f"{path}: {e}") from None


def manifest_to_dict(manifest: CorpusManifest) -> dict:
    out = []
    for d in manifest.domains:
        entry = {"id": d.id, "label": d.label, "register": d.register, "paths": list(d.paths)}
        if d.encoding != "utf-8":
            entry["encoding"] = d.encoding
        out.append(entry)
    return {"domains": out}


def dump_manifest(manifest: CorpusManifest, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(manifest_to_dict(manifest), f, ensure_ascii=False, indent=2)
        f.write("\n")


def split_units(text: str, unit: str) -> list:
    """Segment text into trimmed, non-empty sampling units.

    ``line`` splits on newlines. ``sentence`` splits after ``.``, ``?`` or
    ``!`` when followed by whitespace; the terminator stays with its sentence.
    """
    if unit == "line":
        parts = text.splitlines()
    elif unit == "sentence":
        parts = _SENTENCE_BREAK.split(text)
    else:
        raise ConfigError(f"unknown unit mode {unit!r}; expected one of {UNIT_MODES}")
    return [p.strip() for p in parts if p.strip()]


def domain_files(manifest: CorpusManifest, domain_id: str) -> list:
    spec = manifest.domain(domain_id)
    files = set()
    for pattern in spec.paths:
        full = pattern if os.path.isabs(pattern) else os.path.join(manifest.base_dir, pattern)
        files.update(p for p in glob.glob(full, recursive=True) if os.path.isfile(p))
    if not files:
        raise IngestError(f"domain {domain_id!r}: no files matched {list(spec.paths)}")
    return sorted(files)


def read_documents(manifest: CorpusManifest, domain_id: str, unit: str = "sentence") -> Iterator[Document]:
    """Yield one Document per matched file, in sorted path order."""
    if unit not in UNIT_MODES:
        raise ConfigError(f"unknown unit mode {unit!r}; expected one of {UNIT_MODES}")
    spec = manifest.domain(domain_id)
    for path in domain_files(manifest, domain_id):
        with open(path, "rb") as f:
            raw = f.read()
        try:
            text = raw.decode(spec.encoding)
        except UnicodeDecodeError as e:
            raise IngestError(
                f"domain {domain_id!r}: {path}: cannot decode as {spec.encoding} at byte offset {e.start}"
            ) from None
        source = os.path.relpath(path, manifest.base_dir)
        yield Document(domain_id, source, tuple(split_units(text, unit)))
