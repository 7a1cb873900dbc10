"""One-call evaluation: strategy dispatch, extraction, scoring.

A strategy name selects how a document's words are whittled down
before extraction:

  raw          every word of two or more code points
  line         words grouped into text lines by centroid y; each
               line is extracted independently
  dbscan_flat  the largest spatial cluster (all words when everything
               is noise)
  dbscan_vote  the cluster whose words best match an ingredient
               vocabulary (all words when everything is noise)

The first three need no language resources; voting defaults to the
packaged vocabularies of all supported languages.
"""

from __future__ import annotations

from typing import Sequence

from .clustering import (
    ClusterConfig,
    VocabularySet,
    packaged_languages,
    packaged_vocabulary,
    strategy_dbscan_flat,
    strategy_dbscan_voting,
    strategy_line_based,
    strategy_raw,
)
from .errors import ConfigError, ValidationError
from .extraction import (
    CandidateIngredient,
    DelimiterSet,
    extract_from_lines,
    extract_ingredients,
)
from .metrics import FUZZY_MAX_DISTANCE, SampleMetrics, compute_sample_metrics
from .model import CanonicalName, GroundTruthLabel, OcrDocument, canonicalize

STRATEGY_NAMES = ("raw", "line", "dbscan_flat", "dbscan_vote")


def default_vocabularies() -> list[VocabularySet]:
    """Packaged ingredient vocabularies for every supported language."""
    return [packaged_vocabulary(lang) for lang in packaged_languages()]


def run_strategy(doc: OcrDocument, strategy: str, *,
                 config: ClusterConfig | None = None,
                 vocabs: Sequence[VocabularySet] | None = None,
                 delimiters: DelimiterSet | None = None,
                 stop_tokens: frozenset[str] | None = None,
                 ) -> list[CandidateIngredient]:
    """Run one strategy over a document and extract candidates.

    A document with no words yields no candidates. `vocabs` only
    matters for dbscan_vote.
    """
    if strategy not in STRATEGY_NAMES:
        raise ConfigError(
            f"unknown strategy {strategy!r}; expected one of "
            f"{STRATEGY_NAMES}")
    if config is None:
        config = ClusterConfig()
    if not doc.words:
        return []
    if strategy == "raw":
        kept = strategy_raw(doc)
    elif strategy == "line":
        lines = strategy_line_based(doc, config)
        return extract_from_lines(lines, delimiters, stop_tokens)
    elif strategy == "dbscan_flat":
        kept = strategy_dbscan_flat(doc, config)
    else:
        if vocabs is None:
            vocabs = default_vocabularies()
        kept = strategy_dbscan_voting(doc, config, vocabs)
    return extract_ingredients(kept, delimiters, stop_tokens)


def truth_names(truth: GroundTruthLabel) -> list[CanonicalName]:
    """Canonical forms of a label's annotated ingredient names."""
    return [canonicalize(ing.name) for ing in truth.ingredients]


def evaluate_document(doc: OcrDocument, truth: GroundTruthLabel,
                      strategy: str, *,
                      config: ClusterConfig | None = None,
                      vocabs: Sequence[VocabularySet] | None = None,
                      delimiters: DelimiterSet | None = None,
                      stop_tokens: frozenset[str] | None = None,
                      fuzzy_max_distance: int = FUZZY_MAX_DISTANCE,
                      ) -> SampleMetrics:
    """Score one document against its ground truth under one strategy."""
    if doc.image_id != truth.image_id:
        raise ValidationError(
            f"document {doc.image_id!r} paired with ground truth "
            f"{truth.image_id!r}")
    candidates = run_strategy(doc, strategy, config=config, vocabs=vocabs,
                              delimiters=delimiters, stop_tokens=stop_tokens)
    return compute_sample_metrics(
        [c.name for c in candidates], truth_names(truth),
        image_id=doc.image_id, language=truth.language,
        fuzzy_max_distance=fuzzy_max_distance)


def evaluate_corpus(pairs: Sequence[tuple[OcrDocument, GroundTruthLabel]],
                    strategies: Sequence[str] = STRATEGY_NAMES, *,
                    config: ClusterConfig | None = None,
                    vocabs: Sequence[VocabularySet] | None = None,
                    delimiters: DelimiterSet | None = None,
                    stop_tokens: frozenset[str] | None = None,
                    fuzzy_max_distance: int = FUZZY_MAX_DISTANCE,
                    ) -> dict[str, list[SampleMetrics]]:
    """Score every (document, truth) pair under every strategy.

    Results keep the input pair order within each strategy, so two
    strategy lists line up sample-for-sample (as paired significance
    tests require).
    """
    if vocabs is None and "dbscan_vote" in strategies:
        vocabs = default_vocabularies()
    out: dict[str, list[SampleMetrics]] = {}
    for strategy in strategies:
        out[strategy] = [
            evaluate_document(doc, truth, strategy, config=config,
                              vocabs=vocabs, delimiters=delimiters,
                              stop_tokens=stop_tokens,
                              fuzzy_max_distance=fuzzy_max_distance)
            for doc, truth in pairs
        ]
    return out
