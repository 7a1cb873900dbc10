"""Synthetic ingredient-label generator and OCR-noise simulator.

Layouts come in four families that stress the clustering stage
differently:

  A  one entry per row, generous leading: rows sit farther apart than
     the default clustering radius, so every word is spatial noise
  B  flowing comma-joined paragraph with the same generous leading
  C  multi-column block: each column is a center-aligned vertical
     strand of single tokens packed tighter than the clustering radius,
     so every column forms exactly one cluster; some templates add a
     numbers-only nutrition strand that is longer than any ingredient
     column
  D  dense small-print block (font height <= 8 px)

Families A and B carry a guarantee the evaluation leans on: with the
default ClusterConfig, no word has a neighbor within eps, so DBSCAN
returns all-noise, the fallback forwards every word, and extraction on
uncorrupted text reproduces the ground truth exactly.

The noise simulator applies, in order: cross-column box merging, word
drops, visual character substitutions, delimiter corruption (to a full
stop or deletion, equal odds), and a sinusoidal curvature displacement.
All randomness is drawn from splitmix64 substreams, so corpora are
byte-identical across runs and platforms for a given seed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from statistics import median
from typing import Any, Mapping, Sequence

from .clustering import VocabularySet, _length_buckets, group_rows
from .errors import ValidationError
from .ingest import _load_json
from .kernels import levenshtein_within
from .model import (
    GroundTruthLabel,
    IngredientBox,
    OcrDocument,
    Rect,
    WordBox,
    canonicalize,
)
from .prng import SplitMix64, derive_seed

_FAMILIES = ("A", "B", "C", "D")

# Entry delimiter printed after each ingredient, by language.
_DELIM_BY_LANG = {"ja": "、", "ar": "،"}
_DEFAULT_DELIM = ","

# Header token printed above families A, B and D, by language.
_HEADERS = {
    "en": "ingredients", "no": "ingredienser", "sv": "ingredienser",
    "da": "ingredienser", "de": "zutaten", "fr": "ingrédients",
    "it": "ingredienti", "nl": "ingrediënten", "fi": "ainesosat",
    "pt": "ingredientes", "tr": "içindekiler", "ja": "原材料名",
    "ar": "المكونات", "th": "ส่วนประกอบ",
}
_FALLBACK_HEADER = "ingredients"

_DISTRACTOR_UNITS = ("kj", "kcal", "mg", "ml")
_TITLE_SYLLABLES = ("va", "lo", "ne", "ri", "ta", "mi", "ko", "su",
                    "pe", "da", "zu", "fa")

# Superset of delimiter code points the noise simulator leaves alone
# during character substitution and targets during delimiter
# corruption.
_DELIMITER_SUPERSET = frozenset({",", ";", "、", "،",
                                 "·", "."})


@dataclass(frozen=True)
class LayoutTemplate:
    """One label layout recipe. Ranges are inclusive.

    Family contracts enforced here: A/B keep rows and words farther
    apart than 1.5x the font height (row_gap_factor >= 0.55,
    word_gap_factor >= 0.5); C packs rows tighter than that
    (row_gap_factor <= 0.45), uses >= 2 columns separated by at least
    twice the largest font, and only C may carry a distractor strand;
    D fonts never exceed 8 px.
    """

    id: str
    family: str
    page_size: tuple[int, int]
    ingredient_count: tuple[int, int]
    font_height: tuple[float, float]
    margin: float
    row_gap_factor: float
    word_gap_factor: float
    columns: int = 1
    column_gap: float = 0.0
    distractor_factor: float = 0.0
    header: bool = True
    title: bool = False

    def __post_init__(self):
        if not self.id:
            raise ValidationError("template id must be non-empty")
        if self.family not in _FAMILIES:
            raise ValidationError(
                f"template {self.id}: family must be one of {_FAMILIES}, "
                f"got {self.family!r}")
        lo, hi = self.ingredient_count
        if not (1 <= lo <= hi):
            raise ValidationError(
                f"template {self.id}: bad ingredient_count range "
                f"{self.ingredient_count}")
        flo, fhi = self.font_height
        if not (0 < flo <= fhi):
            raise ValidationError(
                f"template {self.id}: bad font_height range "
                f"{self.font_height}")
        w, h = self.page_size
        if w <= 0 or h <= 0:
            raise ValidationError(
                f"template {self.id}: bad page_size {self.page_size}")
        if self.family in ("A", "B"):
            if self.row_gap_factor < 0.55:
                raise ValidationError(
                    f"template {self.id}: family {self.family} requires "
                    f"row_gap_factor >= 0.55 (sparse-leading contract), "
                    f"got {self.row_gap_factor}")
            if self.word_gap_factor < 0.5:
                raise ValidationError(
                    f"template {self.id}: family {self.family} requires "
                    f"word_gap_factor >= 0.5, got {self.word_gap_factor}")
        if self.family == "C":
            if self.columns < 2:
                raise ValidationError(
                    f"template {self.id}: family C requires >= 2 columns")
            if self.row_gap_factor > 0.45:
                raise ValidationError(
                    f"template {self.id}: family C requires "
                    f"row_gap_factor <= 0.45 (dense-strand contract), "
                    f"got {self.row_gap_factor}")
            if self.column_gap < 2 * fhi:
                raise ValidationError(
                    f"template {self.id}: family C requires column_gap >= "
                    f"2x the largest font ({2 * fhi}), got {self.column_gap}")
        elif self.columns != 1:
            raise ValidationError(
                f"template {self.id}: only family C is multi-column")
        if self.distractor_factor and self.family != "C":
            raise ValidationError(
                f"template {self.id}: only family C may carry a "
                f"distractor strand")
        if self.family == "D" and fhi > 8.0:
            raise ValidationError(
                f"template {self.id}: family D is small print; font must "
                f"stay <= 8 px, got {fhi}")

    @property
    def row_pitch_factor(self) -> float:
        return 1.0 + self.row_gap_factor


def _template_from_dict(raw: Mapping[str, Any]) -> LayoutTemplate:
    try:
        return LayoutTemplate(
            id=str(raw["id"]),
            family=str(raw["family"]),
            page_size=(int(raw["page_size"][0]), int(raw["page_size"][1])),
            ingredient_count=(int(raw["ingredient_count"][0]),
                              int(raw["ingredient_count"][1])),
            font_height=(float(raw["font_height"][0]),
                         float(raw["font_height"][1])),
            margin=float(raw["margin"]),
            row_gap_factor=float(raw["row_gap_factor"]),
            word_gap_factor=float(raw["word_gap_factor"]),
            columns=int(raw.get("columns", 1)),
            column_gap=float(raw.get("column_gap", 0.0)),
            distractor_factor=float(raw.get("distractor_factor", 0.0)),
            header=bool(raw.get("header", True)),
            title=bool(raw.get("title", False)),
        )
    except (KeyError, IndexError, TypeError) as exc:
        raise ValidationError(f"malformed template object: {exc!r}") from exc


def load_templates(source: str | Path | None = None) -> list[LayoutTemplate]:
    """Load layout templates from a JSON file, or the shipped set."""
    if source is None:
        ref = resources.files("ingreval").joinpath("data/templates.json")
        with resources.as_file(ref) as path:
            doc = _load_json(path)
    else:
        doc = _load_json(source)
    raw_templates = doc.get("templates") if isinstance(doc, dict) else None
    if not isinstance(raw_templates, list) or not raw_templates:
        raise ValidationError(
            f"{source or 'packaged templates'}: expected a non-empty "
            f"\"templates\" array")
    templates = [_template_from_dict(raw) for raw in raw_templates]
    ids = [t.id for t in templates]
    if len(set(ids)) != len(ids):
        raise ValidationError("duplicate template ids")
    return templates


@dataclass(frozen=True)
class NoiseConfig:
    """OCR-noise simulator settings; all rates are per-opportunity
    probabilities in [0, 1]. curvature_amplitude is in pixels.
    """

    char_substitution_rate: float = 0.0
    word_drop_rate: float = 0.0
    delimiter_corruption_rate: float = 0.0
    panel_merge_rate: float = 0.0
    curvature_amplitude: float = 0.0
    seed: int = 0

    def __post_init__(self):
        for name in ("char_substitution_rate", "word_drop_rate",
                     "delimiter_corruption_rate", "panel_merge_rate"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValidationError(
                    f"{name} must be in [0, 1], got {value}")
        if self.curvature_amplitude < 0:
            raise ValidationError(
                f"curvature_amplitude must be >= 0, got "
                f"{self.curvature_amplitude}")

    @staticmethod
    def from_dict(raw: Mapping[str, Any]) -> NoiseConfig:
        known = {"char_substitution_rate", "word_drop_rate",
                 "delimiter_corruption_rate", "panel_merge_rate",
                 "curvature_amplitude", "seed"}
        unknown = set(raw) - known
        if unknown:
            raise ValidationError(
                f"unknown noise settings: {sorted(unknown)}")
        return NoiseConfig(**{k: raw[k] for k in raw})


@dataclass(frozen=True)
class SyntheticLabel:
    """A generated label: ground truth plus ideal word boxes."""

    truth: GroundTruthLabel
    document: OcrDocument
    template_id: str
    seed: int
    page_size: tuple[int, int]

    @property
    def image_id(self) -> str:
        return self.truth.image_id

    @property
    def language(self) -> str:
        return self.truth.language


@dataclass(frozen=True)
class CorpusItem:
    """One corpus sample: the synthetic label and the document the
    evaluation sees (ideal words, or corrupted ones when noise is on).
    """

    label: SyntheticLabel
    observed: OcrDocument


def _is_wide(ch: str) -> bool:
    code = ord(ch)
    return (0x2E80 <= code <= 0x9FFF or 0xF900 <= code <= 0xFAFF
            or 0xFF00 <= code <= 0xFF60)


def _char_width(ch: str, font: float) -> float:
    return font if _is_wide(ch) else 0.55 * font


def _text_width(text: str, font: float) -> float:
    return sum(_char_width(ch, font) for ch in text)


def _display_name(entry: str) -> str:
    """Print form of a vocabulary entry: leading capital when that
    round-trips through canonicalization (it does not for e.g. Turkish
    dotless i), else the entry as-is.
    """
    display = entry[0].upper() + entry[1:]
    if canonicalize(display).value == entry:
        return display
    return entry


def _entry_tokens(entry: str, delimiter: str) -> list[str]:
    """Display tokens for one entry, delimiter glued to the last one."""
    tokens = _display_name(entry).split()
    tokens[-1] += delimiter
    return tokens


class _Page:
    """Mutable word sheet used while laying out one label."""

    def __init__(self, template: LayoutTemplate):
        self.template = template
        self.words: list[WordBox] = []
        self.entry_boxes: dict[int, Rect] = {}

    def place(self, text: str, x: float, y: float, font: float,
              entry_index: int | None = None) -> WordBox:
        box = Rect(x, y, _text_width(text, font), font)
        word = WordBox(text, box)
        self.words.append(word)
        if entry_index is not None:
            prev = self.entry_boxes.get(entry_index)
            self.entry_boxes[entry_index] = (box if prev is None
                                             else prev.union(box))
        return word

    def check_fits(self) -> None:
        w, h = self.template.page_size
        margin = self.template.margin
        for word in self.words:
            box = word.bbox
            if (box.x < margin - 1e-6 or box.y < margin - 1e-6
                    or box.right > w - margin + 1e-6
                    or box.bottom > h - margin + 1e-6):
                raise ValidationError(
                    f"template {self.template.id}: word {word.text!r} at "
                    f"{box} overflows the {w}x{h} page (margin {margin}); "
                    f"the template geometry cannot hold its content")


def _layout_rows(page: _Page, entries: list[str], delimiter: str,
                 header: str | None, font: float) -> None:
    """Family A: header row, then one entry per row."""
    t = page.template
    pitch = t.row_pitch_factor * font
    gap = t.word_gap_factor * font
    y = t.margin
    if header is not None:
        page.place(header, t.margin, y, font)
        y += 1.5 * pitch
    for idx, entry in enumerate(entries):
        x = t.margin
        for token in _entry_tokens(entry, delimiter):
            word = page.place(token, x, y, font, entry_index=idx)
            x = word.bbox.right + gap
        y += pitch


def _layout_paragraph(page: _Page, entries: list[str], delimiter: str,
                      header: str | None, font: float) -> None:
    """Families B and D: tokens flow left to right, wrapping at the
    margin."""
    t = page.template
    pitch = t.row_pitch_factor * font
    gap = t.word_gap_factor * font
    limit = t.page_size[0] - t.margin
    x = t.margin
    y = t.margin
    stream: list[tuple[str, int | None]] = []
    if header is not None:
        stream.append((header, None))
    for idx, entry in enumerate(entries):
        stream.extend((token, idx) for token in
                      _entry_tokens(entry, delimiter))
    for token, idx in stream:
        width = _text_width(token, font)
        if x > t.margin and x + width > limit:
            x = t.margin
            y += pitch
        word = page.place(token, x, y, font, entry_index=idx)
        x = word.bbox.right + gap


def _distractor_tokens(rng: SplitMix64, count: int,
                       vocab: VocabularySet) -> list[str]:
    """Nutrition-style numeric tokens for the C-family side strand.

    Always >= 3 digits plus a 2+ letter unit, so no token can come
    within edit distance 2 of a vocabulary entry (digits appear in
    vocabularies only inside additive codes like e330, and any edit
    script must still touch every digit). Verified against the given
    vocabulary as a guard for custom vocabulary files.
    """
    tokens = []
    for _ in range(count):
        value = rng.randint_range(100, 9999)
        unit = _DISTRACTOR_UNITS[rng.randint(len(_DISTRACTOR_UNITS))]
        tokens.append(f"{value}{unit}")
    buckets = _length_buckets(vocab)
    for token in tokens:
        canon = canonicalize(token).value
        for length in range(len(canon) - 2, len(canon) + 3):
            for entry in buckets.get(length, ()):
                if levenshtein_within(canon, entry, 2) <= 2:
                    raise ValidationError(
                        f"distractor token {token!r} collides with "
                        f"vocabulary entry {entry!r}; vocabulary is not "
                        f"safe for distractor strands")
    return tokens


def _layout_columns(page: _Page, entries: list[str], delimiter: str,
                    font: float, rng: SplitMix64,
                    vocab: VocabularySet) -> None:
    """Family C: center-aligned vertical strands, one token per row."""
    t = page.template
    pitch = t.row_pitch_factor * font
    y0 = t.margin
    if t.title:
        title_font = 1.6 * font
        title = "".join(_TITLE_SYLLABLES[rng.randint(len(_TITLE_SYLLABLES))]
                        for _ in range(3))
        brand = "".join(_TITLE_SYLLABLES[rng.randint(len(_TITLE_SYLLABLES))]
                        for _ in range(2))
        x = t.margin
        for token in (title.capitalize(), brand.capitalize()):
            word = page.place(token, x, y0, title_font)
            x = word.bbox.right + t.word_gap_factor * title_font
        y0 += title_font + 4.0 * font

    base, extra = divmod(len(entries), t.columns)
    strands: list[list[tuple[str, int | None]]] = []
    cursor = 0
    for k in range(t.columns):
        take = base + (1 if k < extra else 0)
        strand: list[tuple[str, int | None]] = []
        for idx in range(cursor, cursor + take):
            strand.extend((token, idx) for token in
                          _entry_tokens(entries[idx], delimiter))
        strands.append(strand)
        cursor += take
    if t.distractor_factor > 0:
        longest = max(len(s) for s in strands)
        count = max(4, round(t.distractor_factor * longest))
        strand = [(token, None)
                  for token in _distractor_tokens(rng, count, vocab)]
        strands.append(strand)

    x_left = t.margin
    for strand in strands:
        if not strand:
            raise ValidationError(
                f"template {t.id}: a column received no tokens; "
                f"ingredient_count too small for {t.columns} columns")
        col_w = max(_text_width(token, font) for token, _ in strand)
        center = x_left + col_w / 2.0
        for row, (token, idx) in enumerate(strand):
            width = _text_width(token, font)
            page.place(token, center - width / 2.0, y0 + row * pitch,
                       font, entry_index=idx)
        x_left += col_w + t.column_gap


def instantiate(template: LayoutTemplate, vocab: VocabularySet,
                seed: int) -> SyntheticLabel:
    """Generate one label from a template and a vocabulary.

    Deterministic in (template, vocabulary, seed). The vocabulary must
    hold at least as many entries as the top of the template's
    ingredient-count range.
    """
    hi = template.ingredient_count[1]
    if len(vocab.entries) < hi:
        raise ValidationError(
            f"vocabulary {vocab.language!r} has {len(vocab.entries)} "
            f"entries but template {template.id} needs up to {hi}")
    rng = SplitMix64(derive_seed(seed, "layout", template.id,
                                 vocab.language))
    count = rng.randint_range(*template.ingredient_count)
    pool = sorted(vocab.entries)
    if template.family == "C":
        # Narrow strands print one word per row, so compound names
        # wrap across rows there; prefer them, topping up with
        # single-word names only when the vocabulary runs short
        # (scripts without spaces have none).
        multi = [e for e in pool if " " in e]
        if len(multi) >= count:
            entries = rng.sample(multi, count)
        else:
            single = [e for e in pool if " " not in e]
            entries = (rng.sample(multi, len(multi))
                       + rng.sample(single, count - len(multi)))
    else:
        entries = rng.sample(pool, count)
    font = rng.uniform_range(*template.font_height)
    delimiter = _DELIM_BY_LANG.get(vocab.language, _DEFAULT_DELIM)
    header = None
    if template.header:
        token = _HEADERS.get(vocab.language, _FALLBACK_HEADER)
        colon = "：" if vocab.language == "ja" else ":"
        header = _display_name(token) + colon

    page = _Page(template)
    if template.family == "A":
        _layout_rows(page, entries, delimiter, header, font)
    elif template.family in ("B", "D"):
        _layout_paragraph(page, entries, delimiter, header, font)
    else:
        _layout_columns(page, entries, delimiter, font, rng, vocab)
    page.check_fits()

    image_id = f"syn-{template.id}-{vocab.language}-{seed & (2**64 - 1):016x}"
    ingredients = tuple(
        IngredientBox(_display_name(entries[idx]), page.entry_boxes[idx])
        for idx in range(len(entries)))
    truth = GroundTruthLabel(image_id=image_id, language=vocab.language,
                             ingredients=ingredients, source="synthetic")
    document = OcrDocument(image_id=image_id, engine_id="synth-ideal",
                           words=tuple(page.words),
                           image_size=template.page_size)
    return SyntheticLabel(truth=truth, document=document,
                          template_id=template.id, seed=seed,
                          page_size=template.page_size)


@lru_cache(maxsize=1)
def _confusion_table() -> dict[str, tuple[str, ...]]:
    ref = resources.files("ingreval").joinpath("data/confusions.json")
    with resources.as_file(ref) as path:
        raw = json.loads(Path(path).read_text("utf-8"))
    return {key: tuple(values) for key, values in raw.items()
            if not key.startswith("_")}


def _substitute_chars(text: str, rate: float, rng: SplitMix64) -> str:
    """Visual character confusion; delimiter code points are immune."""
    table = _confusion_table()
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _DELIMITER_SUPERSET or rng.uniform() >= rate:
            out.append(ch)
            i += 1
            continue
        pair = text[i:i + 2]
        if len(pair) == 2 and pair in table:
            key = pair
        elif ch in table:
            key = ch
        else:
            out.append(ch)
            i += 1
            continue
        options = table[key]
        out.append(options[rng.randint(len(options))])
        i += len(key)
    return "".join(out)


def _corrupt_delimiters(text: str, rate: float, rng: SplitMix64) -> str:
    """Each delimiter code point turns into a full stop or vanishes,
    with equal odds, at the given rate."""
    out = []
    for ch in text:
        if ch in _DELIMITER_SUPERSET and rng.uniform() < rate:
            if rng.uniform() < 0.5:
                out.append(".")
            # else: deleted
            continue
        out.append(ch)
    return "".join(out)


def _merge_panels(words: list[WordBox], rate: float,
                  rng: SplitMix64) -> list[WordBox]:
    """Chimeric box merging across column gulfs.

    Candidates are row-adjacent pairs separated horizontally by more
    than 1.5x the median height - a gulf no normal inter-word space
    reaches, so single-column layouts are unaffected. A merged pair
    becomes one box spanning the gap with the concatenated text.
    """
    if not words:
        return words
    med = float(median(w.bbox.height for w in words))
    rows = group_rows(words, 0.5 * med)
    merged: dict[int, tuple[str, Rect]] = {}
    dropped: set[int] = set()
    for row in rows:
        by_x = sorted(row, key=lambda i: words[i].bbox.x)
        for a, b in zip(by_x, by_x[1:]):
            gulf = words[b].bbox.x - words[a].bbox.right
            if gulf <= 1.5 * med:
                continue
            if a in dropped or a in merged or b in merged:
                continue
            if rng.uniform() < rate:
                merged[a] = (words[a].text + words[b].text,
                             words[a].bbox.union(words[b].bbox))
                dropped.add(b)
    out = []
    for i, word in enumerate(words):
        if i in dropped:
            continue
        if i in merged:
            text, box = merged[i]
            out.append(WordBox(text, box))
        else:
            out.append(word)
    return out


def corrupt(label: SyntheticLabel, config: NoiseConfig) -> OcrDocument:
    """Simulate OCR noise over a synthetic label's ideal words.

    Modes run in a fixed order: panel merge, word drop, character
    substitution, delimiter corruption, curvature. Deterministic in
    (label, config): the stream is derived from (config.seed,
    image_id). Words whose text vanishes are dropped. When curvature
    is on, the reported image height grows by the amplitude, since
    boxes are pushed downward by up to that much.
    """
    rng = SplitMix64(derive_seed(config.seed, "noise", label.image_id))
    words = list(label.document.words)
    if config.panel_merge_rate > 0:
        words = _merge_panels(words, config.panel_merge_rate, rng)
    if config.word_drop_rate > 0:
        words = [w for w in words
                 if rng.uniform() >= config.word_drop_rate]

    def rewrite(transform, rate):
        kept = []
        for w in words:
            new_text = transform(w.text, rate, rng)
            if new_text.strip():
                kept.append(WordBox(new_text, w.bbox, w.confidence,
                                    w.line_id))
        return kept

    if config.char_substitution_rate > 0:
        words = rewrite(_substitute_chars, config.char_substitution_rate)
    if config.delimiter_corruption_rate > 0:
        words = rewrite(_corrupt_delimiters,
                        config.delimiter_corruption_rate)
    page_w, page_h = label.page_size
    image_size = (page_w, page_h)
    if config.curvature_amplitude > 0:
        amp = config.curvature_amplitude
        words = [
            WordBox(w.text,
                    Rect(w.bbox.x,
                         w.bbox.y + amp * math.sin(math.pi * w.bbox.x
                                                   / page_w),
                         w.bbox.width, w.bbox.height),
                    w.confidence, w.line_id)
            for w in words
        ]
        image_size = (page_w, page_h + math.ceil(amp))
    return OcrDocument(image_id=label.image_id, engine_id="synth-noise",
                       words=tuple(words), image_size=image_size)


@dataclass(frozen=True)
class CorpusRecipe:
    """Declarative description of a reproducible corpus: which
    templates and languages, how many labels, which seeds, what noise.
    None for templates/languages means the full packaged set.
    """

    count: int
    seed: int
    template_ids: tuple[str, ...] | None = None
    languages: tuple[str, ...] | None = None
    noise: NoiseConfig | None = None

    def __post_init__(self):
        if self.count < 1:
            raise ValidationError(f"count must be >= 1, got {self.count}")


def load_recipe(source: str | Path) -> CorpusRecipe:
    """Load a corpus recipe from JSON.

    Keys: count, seed (required); templates, languages (arrays,
    optional); noise (object of NoiseConfig settings, optional).
    """
    doc = _load_json(source)
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}: recipe must be a JSON object")
    known = {"count", "seed", "templates", "languages", "noise"}
    unknown = {k for k in doc if k not in known and not k.startswith("_")}
    if unknown:
        raise ValidationError(
            f"{source}: unknown recipe keys {sorted(unknown)}")
    missing = {"count", "seed"} - set(doc)
    if missing:
        raise ValidationError(f"{source}: missing keys {sorted(missing)}")
    noise = (NoiseConfig.from_dict(doc["noise"])
             if doc.get("noise") is not None else None)
    to_tuple = lambda v: tuple(str(x) for x in v) if v is not None else None
    return CorpusRecipe(count=int(doc["count"]), seed=int(doc["seed"]),
                        template_ids=to_tuple(doc.get("templates")),
                        languages=to_tuple(doc.get("languages")),
                        noise=noise)


def packaged_recipe(name: str) -> CorpusRecipe:
    """Load a corpus recipe shipped with the package, e.g. the noisy
    multi-column ablation fixture "ablation_c"."""
    ref = resources.files("ingreval").joinpath(f"data/fixtures/{name}.json")
    with resources.as_file(ref) as path:
        if not Path(path).is_file():
            raise ValidationError(f"no packaged recipe named {name!r}")
        return load_recipe(path)


def build_corpus(recipe: CorpusRecipe, *,
                 templates: Sequence[LayoutTemplate] | None = None,
                 vocabs: Sequence[VocabularySet] | None = None,
                 ) -> list[CorpusItem]:
    """Materialize a recipe into corpus items.

    `templates` and `vocabs` default to the packaged sets; the
    recipe's template_ids/languages then select from whatever set is
    in effect. Unknown ids raise.
    """
    from .clustering import packaged_languages, packaged_vocabulary

    if templates is None:
        templates = load_templates()
    if vocabs is None:
        langs = (recipe.languages if recipe.languages is not None
                 else packaged_languages())
        vocabs = [packaged_vocabulary(lang) for lang in langs]
    elif recipe.languages is not None:
        by_lang = {v.language: v for v in vocabs}
        missing = [l for l in recipe.languages if l not in by_lang]
        if missing:
            raise ValidationError(
                f"recipe needs vocabularies for {missing}")
        vocabs = [by_lang[l] for l in recipe.languages]
    if recipe.template_ids is not None:
        by_id = {t.id: t for t in templates}
        missing = [i for i in recipe.template_ids if i not in by_id]
        if missing:
            raise ValidationError(f"recipe names unknown templates {missing}")
        templates = [by_id[i] for i in recipe.template_ids]
    return generate_corpus(templates, vocabs, recipe.count, recipe.seed,
                           noise=recipe.noise)


def generate_corpus(templates: Sequence[LayoutTemplate],
                    vocabs: Sequence[VocabularySet], count: int,
                    seed: int,
                    noise: NoiseConfig | None = None) -> list[CorpusItem]:
    """Generate a corpus of `count` labels.

    Items round-robin over (vocabulary, template) pairs so families and
    languages stay balanced at any corpus size. Each item derives its
    own seed from (seed, item index); reruns with equal arguments
    produce byte-identical output.
    """
    if count < 1:
        raise ValidationError(f"count must be >= 1, got {count}")
    if not templates:
        raise ValidationError("no templates given")
    if not vocabs:
        raise ValidationError("no vocabularies given")
    pairs = [(t, v) for v in vocabs for t in templates]
    items = []
    for i in range(count):
        template, vocab = pairs[i % len(pairs)]
        label = instantiate(template, vocab, derive_seed(seed, "item", i))
        observed = (label.document if noise is None
                    else corrupt(label, noise))
        items.append(CorpusItem(label=label, observed=observed))
    return items
