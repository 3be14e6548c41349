"""Scoring the detector against gold-labelled words."""

from __future__ import annotations

import random
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable, NamedTuple

from .detector import DegenerateInputError, Detector
from .lexicon import Source, iter_lines
from .textnorm import normalize


class GoldFormatError(ValueError):
    pass


class GoldItem(NamedTuple):
    word: str
    is_negative: bool


@dataclass(frozen=True)
class GoldSample:
    items: tuple[GoldItem, ...]

    def __post_init__(self):
        if not self.items:
            raise GoldFormatError("gold sample is empty")
        seen = set()
        for item in self.items:
            if item.word in seen:
                raise GoldFormatError(f"duplicate gold word {item.word!r}")
            seen.add(item.word)

    def __len__(self) -> int:
        return len(self.items)


def parse_gold(lines: Source, name: str = "<gold>") -> GoldSample:
    """Parse ``word<TAB>label`` rows, label 0 or 1.

    Words are normalized; a word that normalizes to nothing is kept as-is
    and will be counted as skipped by :func:`evaluate`.
    """
    items = []
    for lineno, text in iter_lines(lines, name):
        if not text.strip() or text.lstrip().startswith("#"):
            continue
        fields = text.split("\t")
        if len(fields) != 2 or fields[1].strip() not in ("0", "1"):
            raise GoldFormatError(f"{name}: row {lineno}: expected 'word<TAB>0|1', got {text!r}")
        word = normalize(fields[0]) or fields[0]
        items.append(GoldItem(word, fields[1].strip() == "1"))
    return GoldSample(tuple(items))


def read_gold(path: str | Path) -> GoldSample:
    path = Path(path)
    with path.open("rb") as fh:
        return parse_gold(fh, str(path))


@dataclass(frozen=True)
class EvaluationReport:
    tp: int
    fp: int
    tn: int
    fn: int
    skipped: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    # None marks an undefined ratio (zero denominator)
    @property
    def precision(self) -> Fraction | None:
        denom = self.tp + self.fp
        return Fraction(self.tp, denom) if denom else None

    @property
    def recall(self) -> Fraction | None:
        denom = self.tp + self.fn
        return Fraction(self.tp, denom) if denom else None

    @property
    def f1(self) -> Fraction | None:
        if self.precision is None or self.recall is None:
            return None
        return Fraction(2 * self.tp, 2 * self.tp + self.fp + self.fn)

    def as_dict(self) -> dict[str, str]:
        return {
            "tp": str(self.tp),
            "fp": str(self.fp),
            "fn": str(self.fn),
            "tn": str(self.tn),
            "precision": format_metric(self.precision),
            "recall": format_metric(self.recall),
            "f1": format_metric(self.f1),
            "skipped": str(self.skipped),
        }

    def format_keyvalue(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.as_dict().items())

    def format_text(self) -> str:
        d = self.as_dict()
        return (
            f"Evaluated {self.total} words ({self.skipped} skipped)\n"
            f"                  gold negative  gold other\n"
            f"  predicted neg   {self.tp:>13}  {self.fp:>10}\n"
            f"  predicted other {self.fn:>13}  {self.tn:>10}\n"
            f"Precision: {d['precision']}\n"
            f"Recall:    {d['recall']}\n"
            f"F1:        {d['f1']}\n"
        )


def format_metric(value: Fraction | None) -> str:
    """Exact decimal when the fraction terminates, else six places."""
    if value is None:
        return "undefined"
    d = value.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d == 1:
        s = format(Decimal(value.numerator) / Decimal(value.denominator), "f")
    else:
        s = f"{float(value):.6f}"
    whole, _, frac = s.partition(".")
    return f"{whole}.{frac.ljust(2, '0')}"


def evaluate(sample: GoldSample, detector: Detector) -> EvaluationReport:
    tp = fp = tn = fn = skipped = 0
    for word, gold in sample.items:
        try:
            predicted = detector.detect(word).negative
        except DegenerateInputError:
            skipped += 1
            continue
        if predicted and gold:
            tp += 1
        elif predicted:
            fp += 1
        elif gold:
            fn += 1
        else:
            tn += 1
    return EvaluationReport(tp, fp, tn, fn, skipped)


def sample_words(pool: Iterable[str], k: int, seed: int) -> list[str]:
    """Deterministic ``k``-subset of ``pool`` for manual labelling."""
    ordered = sorted(set(pool))
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > len(ordered):
        raise ValueError(f"cannot sample {k} words from a pool of {len(ordered)}")
    return random.Random(seed).sample(ordered, k)


def format_skeleton(words: Iterable[str]) -> str:
    """Gold file rows with the label column left blank."""
    return "".join(f"{w}\t\n" for w in words)
