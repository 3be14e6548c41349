"""Exceptions-list extraction from a word inventory and a corpus.

Every prefix-led word is split into prefix and base, and the base is looked
up in a unigram model of the corpus.  Bases seen more than ``threshold``
times mark the word as validly affixed; everything else goes to the
exceptions file for a human to review.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple

from .lexicon import PrefixTable, Source, format_wordlist, iter_lines, leading_prefix_match
from .textnorm import normalize

DEFAULT_THRESHOLD = 5


@dataclass
class UnigramModel:
    counts: Counter = field(default_factory=Counter)
    total_tokens: int = 0

    def count(self, token: str) -> int:
        return self.counts.get(token, 0)

    def vocabulary(self) -> set[str]:
        return set(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


def build_unigram_model(corpus: Source, name: str = "<corpus>") -> UnigramModel:
    """Count whitespace-delimited tokens after normalization.

    Tokens that normalize to nothing (stray diacritics, tatweel) are not
    counted at all, so ``sum(counts) == total_tokens`` always holds.
    """
    counts: Counter = Counter()
    for _, line in iter_lines(corpus, name):
        for raw in line.split():
            token = normalize(raw)
            if token:
                counts[token] += 1
    return UnigramModel(counts, sum(counts.values()))


def read_unigram_model(path: str | Path) -> UnigramModel:
    path = Path(path)
    with path.open("rb") as fh:
        return build_unigram_model(fh, str(path))


def harvest_candidates(words: Iterable[str], table: PrefixTable) -> set[str]:
    return {w for w in words if leading_prefix_match(w, table) is not None}


class Evidence(NamedTuple):
    word: str
    prefix: str
    base: str
    base_count: int


@dataclass
class PartitionReport:
    valid_affixed: set[str] = field(default_factory=set)
    exceptions: set[str] = field(default_factory=set)
    evidence: list[Evidence] = field(default_factory=list)

    @property
    def candidates(self) -> set[str]:
        return self.valid_affixed | self.exceptions


class ExtractionError(ValueError):
    pass


def partition_candidates(
    candidates: Iterable[str],
    model: UnigramModel,
    table: PrefixTable,
    threshold: int = DEFAULT_THRESHOLD,
) -> PartitionReport:
    """Split candidates on the corpus frequency of their base.

    A base count equal to ``threshold`` counts as rare: the word lands in
    exceptions and is left to manual review.
    """
    if threshold < 1:
        raise ValueError("threshold must be a positive integer")
    report = PartitionReport()
    for word in sorted(set(candidates)):
        match = leading_prefix_match(word, table)
        if match is None:
            raise ExtractionError(f"candidate {word!r} is not led by any prefix")
        n = model.count(match.base)
        report.evidence.append(Evidence(word, match.prefix, match.base, n))
        if n > threshold:
            report.valid_affixed.add(word)
        else:
            report.exceptions.add(word)
    return report


def format_evidence(rows: Iterable[Evidence]) -> str:
    return "".join(f"{r.word}\t{r.prefix}\t{r.base}\t{r.base_count}\n" for r in sorted(rows))


def emit_partition(
    report: PartitionReport,
    out_valid: str | Path,
    out_exceptions: str | Path,
    out_evidence: str | Path,
) -> None:
    payloads = [
        (Path(out_valid), format_wordlist(report.valid_affixed)),
        (Path(out_exceptions), format_wordlist(report.exceptions)),
        (Path(out_evidence), format_evidence(report.evidence)),
    ]
    for path, text in payloads:
        try:
            path.write_text(text, encoding="utf-8", newline="\n")
        except OSError as exc:
            raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}", str(path)) from exc


class WordlistDiff(NamedTuple):
    added: list[str]
    removed: list[str]


def diff_wordlists(generated: Iterable[str], edited: Iterable[str]) -> WordlistDiff:
    """What a reviewer added to and removed from a generated list."""
    gen, ed = set(generated), set(edited)
    return WordlistDiff(sorted(ed - gen), sorted(gen - ed))
