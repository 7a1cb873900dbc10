"""Turning a spatially isolated word set into candidate ingredients.

Words are arranged into reading order, section-header words (e.g. the
local-language "ingredients" token) are dropped, the rest are joined
with single spaces, and the joined text is split on delimiter code
points. Every fragment that survives canonicalization becomes one
candidate that remembers which words contributed to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from statistics import median
from typing import Sequence

from .clustering import group_rows
from .errors import EmptyNameError, ValidationError
from .ingest import iter_lexicon_lines
from .model import CanonicalName, Rect, WordBox, canonicalize, centroid, union_rect

# Delimiters a list can use between entries. The comma is universal;
# U+3001 and U+060C are its ideographic and Arabic counterparts. The
# full stop is a delimiter by default because many labels end entries
# with periods, at the cost of splitting abbreviations; disable it via
# DelimiterSet(include_full_stop=False).
_BASE_DELIMITERS = frozenset({",", ";", "、", "،",
                              "·"})
_FULL_STOP = "."

# One trailing colon is tolerated when matching header words.
_COLONS = (":", "：")


@dataclass(frozen=True)
class DelimiterSet:
    """Code points that terminate one ingredient entry."""

    include_full_stop: bool = True
    chars: frozenset[str] = field(init=False)

    def __post_init__(self):
        chars = set(_BASE_DELIMITERS)
        if self.include_full_stop:
            chars.add(_FULL_STOP)
        object.__setattr__(self, "chars", frozenset(chars))

    def __contains__(self, ch: str) -> bool:
        return ch in self.chars


@lru_cache(maxsize=1)
def default_header_stopwords() -> frozenset[str]:
    """Canonical header tokens shipped with the package."""
    ref = resources.files("ingreval").joinpath("data/header_stopwords.txt")
    with resources.as_file(ref) as path:
        return frozenset(canonicalize(line).value
                         for line in iter_lexicon_lines(path))


@dataclass(frozen=True)
class CandidateIngredient:
    """One extracted name plus its provenance.

    source_word_indices index into reading_order(words) for the word
    set the candidate was extracted from; bbox is the union of those
    words' boxes.
    """

    name: CanonicalName
    source_word_indices: tuple[int, ...]
    bbox: Rect


def reading_order(words: Sequence[WordBox]) -> list[WordBox]:
    """Natural reading sequence: rows by centroid y (single linkage,
    tolerance 0.5 x median height of the given words), rows top to
    bottom, words within a row left to right; exact centroid ties keep
    input order.
    """
    if not words:
        return []
    tolerance = 0.5 * float(median(w.bbox.height for w in words))
    rows = group_rows(words, tolerance)
    ordered = []
    for row in rows:
        ordered.extend(sorted(row,
                              key=lambda i: (centroid(words[i].bbox)[0], i)))
    return [words[i] for i in ordered]


def _is_header(text: str, stop_tokens: frozenset[str]) -> bool:
    canon = canonicalize(text).value
    if canon in stop_tokens:
        return True
    if canon.endswith(_COLONS):
        return canon[:-1] in stop_tokens
    return False


def extract_ingredients(words: Sequence[WordBox],
                        delimiters: DelimiterSet | None = None,
                        stop_tokens: frozenset[str] | None = None
                        ) -> list[CandidateIngredient]:
    """Extract candidate ingredients from one word set.

    Header words are dropped before joining, so a stop token never
    glues onto the first entry. Fragments that canonicalize to nothing
    (pure punctuation or whitespace) are discarded. Candidates never
    contain delimiter code points.
    """
    if delimiters is None:
        delimiters = DelimiterSet()
    if stop_tokens is None:
        stop_tokens = default_header_stopwords()

    ordered = reading_order(words)
    # (code point, source position) stream; None marks joining spaces
    stream: list[tuple[str, int | None]] = []
    for pos, word in enumerate(ordered):
        if _is_header(word.text, stop_tokens):
            continue
        if stream:
            stream.append((" ", None))
        stream.extend((ch, pos) for ch in word.text)

    candidates: list[CandidateIngredient] = []
    frag_chars: list[str] = []
    frag_sources: set[int] = set()

    def flush():
        if not frag_chars:
            return
        raw = "".join(frag_chars)
        frag_chars.clear()
        sources = tuple(sorted(frag_sources))
        frag_sources.clear()
        try:
            name = canonicalize(raw)
        except EmptyNameError:
            return
        candidates.append(CandidateIngredient(
            name=name,
            source_word_indices=sources,
            bbox=union_rect(ordered[p].bbox for p in sources)))

    for ch, src in stream:
        if ch in delimiters:
            flush()
            continue
        frag_chars.append(ch)
        if src is not None:
            frag_sources.add(src)
    flush()
    return candidates


def extract_from_lines(lines: Sequence[Sequence[WordBox]],
                       delimiters: DelimiterSet | None = None,
                       stop_tokens: frozenset[str] | None = None
                       ) -> list[CandidateIngredient]:
    """Extract candidates from each line independently and concatenate.

    Entries spanning a line break come out fractured; that is the
    point of evaluating line-based grouping. Source indices are local
    to each line's reading order.
    """
    out: list[CandidateIngredient] = []
    for line in lines:
        out.extend(extract_ingredients(line, delimiters, stop_tokens))
    return out
