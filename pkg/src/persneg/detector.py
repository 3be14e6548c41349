"""Negative-word decision procedure.

A token is preprocessed (normalized, then stemmed) and run through four
stages, first hit wins:

1. a polarity-lexicon entry leads the token -> negative
2. the token is in the exceptions list      -> not negative
3. a negative prefix leads the token        -> negative
4. otherwise                                -> not negative

Stage 1 outranks stage 2, so an exceptions entry does not protect a word
that starts with a lexicon entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .lexicon import (
    ExceptionList,
    PolarityLexicon,
    PrefixTable,
    Source,
    iter_lines,
    leading_prefix_match,
)
from .textnorm import SuffixRule, normalize, stem


class DegenerateInputError(ValueError):
    """Input that is empty after preprocessing."""


class Rationale(str, Enum):
    POLARITY_MATCH = "PolarityMatch"
    EXCEPTION_HIT = "ExceptionHit"
    PREFIX_HIT = "PrefixHit"
    NO_MATCH = "NoMatch"


@dataclass(frozen=True)
class DetectionVerdict:
    negative: bool
    rationale: Rationale
    # matched length for POLARITY_MATCH, prefix for PREFIX_HIT
    detail: int | str | None
    input_surface: str
    input_canonical: str

    def to_tsv(self) -> str:
        detail = "" if self.detail is None else str(self.detail)
        surface = " ".join(self.input_surface.split("\t"))
        return f"{surface}\t{self.input_canonical}\t{int(self.negative)}\t{self.rationale.value}\t{detail}"


@dataclass(frozen=True)
class SkippedLine:
    lineno: int
    surface: str
    reason: str = "empty after preprocessing"


def preprocess(raw: str, rules: Sequence[SuffixRule]) -> str:
    token = stem(normalize(raw), rules)
    if not token:
        raise DegenerateInputError(f"{raw!r} is empty after preprocessing")
    return token


class Detector:
    """Immutable bundle of stores; safe to share between threads.

    Exceptions are compared in preprocessed form: each entry is stemmed
    with the same rules as the input, so an entry like لارستان still
    matches after the input loses its ``ان``.
    """

    def __init__(
        self,
        lexicon: PolarityLexicon,
        exceptions: ExceptionList,
        prefixes: PrefixTable,
        rules: Sequence[SuffixRule],
    ):
        self.lexicon = lexicon
        self.exceptions = exceptions
        self.prefixes = prefixes
        self.rules = tuple(rules)
        self._exception_keys = frozenset(stem(w, self.rules) for w in exceptions.entries)

    def preprocess(self, raw: str) -> str:
        return preprocess(raw, self.rules)

    def detect(self, raw: str) -> DetectionVerdict:
        token = self.preprocess(raw)

        n = self.lexicon.longest_leading_match(token)
        if n is not None:
            return DetectionVerdict(True, Rationale.POLARITY_MATCH, n, raw, token)
        if token in self._exception_keys:
            return DetectionVerdict(False, Rationale.EXCEPTION_HIT, None, raw, token)
        match = leading_prefix_match(token, self.prefixes)
        if match is not None:
            return DetectionVerdict(True, Rationale.PREFIX_HIT, match.prefix, raw, token)
        return DetectionVerdict(False, Rationale.NO_MATCH, None, raw, token)

    def detect_batch(
        self, lines: Source, name: str = "<input>"
    ) -> Iterator[DetectionVerdict | SkippedLine]:
        """One result per non-empty line, in input order.

        Lines that preprocess to nothing give a :class:`SkippedLine` in
        their position instead of stopping the stream.
        """
        for lineno, text in iter_lines(lines, name):
            if not text:
                continue
            try:
                yield self.detect(text)
            except DegenerateInputError:
                yield SkippedLine(lineno, text)


def detect(
    raw: str,
    lex: PolarityLexicon,
    exc: ExceptionList,
    table: PrefixTable,
    rules: Sequence[SuffixRule],
) -> DetectionVerdict:
    """One-off detection; build a :class:`Detector` for repeated calls."""
    return Detector(lex, exc, table, rules).detect(raw)


def detect_batch(
    lines: Source,
    lex: PolarityLexicon,
    exc: ExceptionList,
    table: PrefixTable,
    rules: Sequence[SuffixRule],
) -> Iterator[DetectionVerdict | SkippedLine]:
    return Detector(lex, exc, table, rules).detect_batch(lines)
