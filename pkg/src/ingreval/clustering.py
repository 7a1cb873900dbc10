"""Spatial isolation of the ingredient block on a packaging photo.

Four interchangeable strategies over one word-level document:

  raw            every word of >= 2 code points, no spatial reasoning
  line_based     words grouped into text lines by centroid y only
  dbscan_flat    density clustering on centroids, largest cluster wins
  dbscan_voting  density clustering, clusters scored by vocabulary hits

Density clustering uses eps = eps_multiplier x median word height, so
the scale adapts to each photo's text size. Both DBSCAN strategies fall
back to all words when every point is noise: sparse layouts where no
three words sit within eps of each other still deserve extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from statistics import median
from typing import Iterable, Sequence

from . import kernels
from .errors import ConfigError, ValidationError
from .ingest import iter_lexicon_lines
from .kernels import NOISE
from .model import CanonicalName, OcrDocument, WordBox, canonicalize, centroid


@dataclass(frozen=True)
class ClusterConfig:
    """Knobs for spatial grouping; defaults are the validated settings."""

    eps_multiplier: float = 1.5
    min_samples: int = 3
    line_y_tolerance_multiplier: float = 0.5

    def __post_init__(self):
        if self.eps_multiplier <= 0:
            raise ValidationError(
                f"eps_multiplier must be positive, got {self.eps_multiplier}")
        if self.min_samples < 1:
            raise ValidationError(
                f"min_samples must be >= 1, got {self.min_samples}")
        if self.line_y_tolerance_multiplier <= 0:
            raise ValidationError(
                f"line_y_tolerance_multiplier must be positive, got "
                f"{self.line_y_tolerance_multiplier}")


@dataclass(frozen=True)
class Cluster:
    """One group of point indices; label >= 0, or NOISE for the noise set."""

    label: int
    member_indices: frozenset[int]


def median_height(doc: OcrDocument) -> float:
    """Median word-box height. Errors on documents with no words."""
    if not doc.words:
        raise ValidationError(
            f"document {doc.image_id!r} has no words; median height "
            f"is undefined")
    return float(median(w.bbox.height for w in doc.words))


def dbscan(points: Sequence[tuple[float, float]], eps: float,
           min_samples: int) -> list[Cluster]:
    """Cluster 2-D points; returns clusters in label order, then one
    group labeled NOISE holding unassigned points, when any exist.

    Deterministic: see kernels.dbscan_labels for the visit-order rules.
    """
    labels = kernels.dbscan_labels([p[0] for p in points],
                                   [p[1] for p in points],
                                   eps, min_samples)
    groups: dict[int, set[int]] = {}
    for idx, label in enumerate(labels):
        groups.setdefault(label, set()).add(idx)
    out = [Cluster(label, frozenset(groups[label]))
           for label in sorted(groups) if label != NOISE]
    if NOISE in groups:
        out.append(Cluster(NOISE, frozenset(groups[NOISE])))
    return out


def group_rows(words: Sequence[WordBox], tolerance: float) -> list[list[int]]:
    """Single-linkage grouping of word indices by centroid y.

    Words sorted by (centroid y, index); a new row starts when the gap
    to the previous centroid exceeds the tolerance. Rows come out in
    ascending y order.
    """
    if tolerance <= 0:
        raise ValidationError(f"tolerance must be positive, got {tolerance}")
    order = sorted(range(len(words)),
                   key=lambda i: (centroid(words[i].bbox)[1], i))
    rows: list[list[int]] = []
    prev_y = None
    for i in order:
        cy = centroid(words[i].bbox)[1]
        if prev_y is None or cy - prev_y > tolerance:
            rows.append([])
        rows[-1].append(i)
        prev_y = cy
    return rows


def strategy_raw(doc: OcrDocument) -> list[WordBox]:
    """Forward every word of at least two code points, in input order."""
    return [w for w in doc.words if len(w.text) >= 2]


def strategy_line_based(doc: OcrDocument,
                        config: ClusterConfig = ClusterConfig()
                        ) -> list[list[WordBox]]:
    """Group words into text lines by centroid y alone and forward all
    lines. Ignores horizontal structure entirely, so side-by-side
    panels sharing a baseline merge into one line.
    """
    if not doc.words:
        return []
    tolerance = config.line_y_tolerance_multiplier * median_height(doc)
    rows = group_rows(doc.words, tolerance)
    return [[doc.words[i] for i in row] for row in rows]


def _word_points(doc: OcrDocument) -> list[tuple[float, float]]:
    return [centroid(w.bbox) for w in doc.words]


def _position_key(doc: OcrDocument, cluster: Cluster) -> tuple[float, float]:
    # topmost-then-leftmost member centroid, for deterministic tie-breaks
    return min((centroid(doc.words[i].bbox)[1],
                centroid(doc.words[i].bbox)[0])
               for i in cluster.member_indices)


def _members_in_order(doc: OcrDocument, cluster: Cluster) -> list[WordBox]:
    return [doc.words[i] for i in sorted(cluster.member_indices)]


def strategy_dbscan_flat(doc: OcrDocument,
                         config: ClusterConfig = ClusterConfig()
                         ) -> list[WordBox]:
    """Largest density cluster of word centroids.

    Ties go to the cluster whose topmost-leftmost member comes first.
    When every word is noise the whole document is forwarded.
    """
    if not doc.words:
        return []
    eps = config.eps_multiplier * median_height(doc)
    clusters = [c for c in dbscan(_word_points(doc), eps, config.min_samples)
                if c.label != NOISE]
    if not clusters:
        return list(doc.words)
    best = min(clusters, key=lambda c: (-len(c.member_indices),
                                        _position_key(doc, c)))
    return _members_in_order(doc, best)


@dataclass(frozen=True)
class VocabularySet:
    """Canonical ingredient names for one language."""

    language: str
    entries: frozenset[str]

    def __post_init__(self):
        if not self.entries:
            raise ValidationError(
                f"vocabulary {self.language!r} has no entries")

    @staticmethod
    def from_names(language: str, names: Iterable[str]) -> VocabularySet:
        return VocabularySet(language,
                             frozenset(canonicalize(n).value for n in names))


def load_vocabulary(path: str | Path) -> VocabularySet:
    """Read a vocabulary file (one entry per line, # comments). The
    language is the file name stem.
    """
    return VocabularySet.from_names(Path(path).stem,
                                    iter_lexicon_lines(path))


def packaged_languages() -> list[str]:
    """Languages with a vocabulary shipped inside the package."""
    root = resources.files("ingreval").joinpath("data/vocab")
    return sorted(entry.name[:-4] for entry in root.iterdir()
                  if entry.name.endswith(".txt"))


@lru_cache(maxsize=32)
def packaged_vocabulary(language: str) -> VocabularySet:
    """Load one of the vocabularies shipped inside the package."""
    ref = resources.files("ingreval").joinpath(f"data/vocab/{language}.txt")
    if not ref.is_file():
        raise ValidationError(
            f"no packaged vocabulary for language {language!r}; "
            f"available: {', '.join(packaged_languages())}")
    with resources.as_file(ref) as path:
        return load_vocabulary(path)


@lru_cache(maxsize=128)
def _length_buckets(vocab: VocabularySet) -> dict[int, tuple[str, ...]]:
    buckets: dict[int, list[str]] = {}
    for entry in sorted(vocab.entries):
        buckets.setdefault(len(entry), []).append(entry)
    return {k: tuple(v) for k, v in buckets.items()}


def fuzzy_vocab_hit(token: CanonicalName, vocab: VocabularySet,
                    max_distance: int = 2) -> bool:
    """True when the token is within the edit-distance bound of any
    vocabulary entry. Exact membership short-circuits; fuzzy search
    only scans entries whose length can possibly be within the bound.
    """
    value = token.value
    if value in vocab.entries:
        return True
    buckets = _length_buckets(vocab)
    for length in range(len(value) - max_distance,
                        len(value) + max_distance + 1):
        for entry in buckets.get(length, ()):
            if kernels.levenshtein_within(value, entry,
                                          max_distance) <= max_distance:
                return True
    return False


def strategy_dbscan_voting(doc: OcrDocument, config: ClusterConfig,
                           vocabs: Sequence[VocabularySet],
                           max_distance: int = 2) -> list[WordBox]:
    """Density cluster whose members best match an ingredient
    vocabulary.

    Each cluster scores max over vocabularies of (members within edit
    distance max_distance of some entry) / cluster size. Ties go to the
    larger cluster, then to the topmost-leftmost one. All-noise
    documents are forwarded whole, as in strategy_dbscan_flat.
    """
    if not vocabs:
        raise ConfigError("dbscan_voting needs at least one vocabulary")
    if not doc.words:
        return []
    eps = config.eps_multiplier * median_height(doc)
    clusters = [c for c in dbscan(_word_points(doc), eps, config.min_samples)
                if c.label != NOISE]
    if not clusters:
        return list(doc.words)

    def score(cluster: Cluster) -> float:
        tokens = [canonicalize(doc.words[i].text)
                  for i in sorted(cluster.member_indices)]
        best = 0
        for vocab in vocabs:
            hits = sum(1 for t in tokens
                       if fuzzy_vocab_hit(t, vocab, max_distance))
            best = max(best, hits)
        return best / len(cluster.member_indices)

    best = min(clusters, key=lambda c: (-score(c), -len(c.member_indices),
                                        _position_key(doc, c)))
    return _members_in_order(doc, best)
