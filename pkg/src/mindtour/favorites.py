"""Favorite-value lexicon: per-term like/dislike degrees in [-1, 1].

Two layers: a default layer holding the agent's common preferences for
frequently used words, and per-persona layers that override it.  Lookups never
fail; a term absent from every layer resolves to 0.0 with ``UNKNOWN``
provenance so the dialogue can keep flowing while callers may still warn.

Storage is a line-oriented text file (diffable, hand-editable)::

    default <TAB> term <TAB> value
    <persona-id> <TAB> term <TAB> value
"""

from __future__ import annotations

import os
import tempfile
import threading
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

FV_MIN = -1.0
FV_MAX = 1.0

#: Reserved layer name for the shared lexicon; persona ids must differ from it.
DEFAULT_LAYER = "default"


class FavoriteRangeError(ValueError):
    """A favorite value falls outside [-1, 1]."""


class LexiconFormatError(ValueError):
    """A lexicon file line cannot be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class Provenance(str, Enum):
    PERSONAL = "personal"
    DEFAULT = "default"
    UNKNOWN = "unknown"


def _check_range(value: float) -> float:
    if not (FV_MIN <= value <= FV_MAX):
        raise FavoriteRangeError(f"favorite value {value!r} outside [{FV_MIN}, {FV_MAX}]")
    return float(value)


@dataclass
class FvDatabase:
    """In-memory favorite-value database with default and personal layers."""

    default_layer: dict[str, float] = field(default_factory=dict)
    personal_layers: dict[str, dict[str, float]] = field(default_factory=dict)

    def lookup(self, term: str, persona: str | None = None) -> tuple[float, Provenance]:
        """Resolve a term: personal layer first (if a persona is given), then
        default, then the neutral 0.0 fallback."""
        if not term:
            raise ValueError("term must be non-empty")
        if persona is not None:
            layer = self.personal_layers.get(persona)
            if layer is not None and term in layer:
                return layer[term], Provenance.PERSONAL
        if term in self.default_layer:
            return self.default_layer[term], Provenance.DEFAULT
        return 0.0, Provenance.UNKNOWN

    def upsert(self, term: str, value: float, layer: str = DEFAULT_LAYER) -> None:
        """Insert or replace one entry; ``layer`` is ``default`` or a persona id."""
        if not term:
            raise ValueError("term must be non-empty")
        value = _check_range(value)
        if layer == DEFAULT_LAYER:
            self.default_layer[term] = value
        else:
            self.personal_layers.setdefault(layer, {})[term] = value

    def remove(self, term: str, layer: str = DEFAULT_LAYER) -> bool:
        target = (
            self.default_layer
            if layer == DEFAULT_LAYER
            else self.personal_layers.get(layer, {})
        )
        return target.pop(term, None) is not None

    def records(self) -> list[tuple[str, str, float]]:
        """All entries as (layer, term, value), default layer first, sorted."""
        out = [(DEFAULT_LAYER, term, value) for term, value in sorted(self.default_layer.items())]
        for persona in sorted(self.personal_layers):
            for term, value in sorted(self.personal_layers[persona].items()):
                out.append((persona, term, value))
        return out

    def __len__(self) -> int:
        return len(self.default_layer) + sum(len(v) for v in self.personal_layers.values())


def load_fv_file(path: str | Path) -> FvDatabase:
    """Load a lexicon file.  Blank lines and ``#`` comments are skipped;
    duplicate (layer, term) pairs are rejected."""
    db = FvDatabase()
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconFormatError(
                    f"expected 3 tab-separated fields, got {len(parts)}", line_number
                )
            layer, term, value_text = (part.strip() for part in parts)
            if not layer or not term:
                raise LexiconFormatError("empty layer or term", line_number)
            try:
                value = float(value_text)
            except ValueError:
                raise LexiconFormatError(f"bad value {value_text!r}", line_number) from None
            if not (FV_MIN <= value <= FV_MAX):
                raise LexiconFormatError(
                    f"value {value} outside [{FV_MIN}, {FV_MAX}]", line_number
                )
            if (layer, term) in seen:
                raise LexiconFormatError(f"duplicate term {term!r} in layer {layer!r}", line_number)
            seen.add((layer, term))
            db.upsert(term, value, layer)
    return db


def save_fv_file(db: FvDatabase, path: str | Path) -> None:
    """Write the lexicon atomically (temp file + rename)."""
    path = Path(path)
    lines = [f"{layer}\t{term}\t{value}" for layer, term, value in db.records()]
    payload = "\n".join(lines) + ("\n" if lines else "")
    fd, tmp_name = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


class FvStore:
    """Persistent wrapper: serialized writes, atomic file replacement.

    Reads go straight to the in-memory database; every successful write is
    flushed to disk before it is acknowledged.
    """

    def __init__(self, path: str | Path, create: bool = True) -> None:
        self.path = Path(path)
        self._lock = threading.Lock()
        if self.path.exists():
            self.db = load_fv_file(self.path)
        elif create:
            self.db = FvDatabase()
        else:
            raise FileNotFoundError(self.path)

    def lookup(self, term: str, persona: str | None = None) -> tuple[float, Provenance]:
        return self.db.lookup(term, persona)

    def upsert(self, term: str, value: float, layer: str = DEFAULT_LAYER) -> None:
        with self._lock:
            self.db.upsert(term, value, layer)
            save_fv_file(self.db, self.path)

    def remove(self, term: str, layer: str = DEFAULT_LAYER) -> bool:
        with self._lock:
            removed = self.db.remove(term, layer)
            if removed:
                save_fv_file(self.db, self.path)
            return removed

    def merge(self, other: FvDatabase) -> int:
        """Upsert every record of ``other``; one atomic write at the end."""
        with self._lock:
            for layer, term, value in other.records():
                self.db.upsert(term, value, layer)
            save_fv_file(self.db, self.path)
            return len(other)
