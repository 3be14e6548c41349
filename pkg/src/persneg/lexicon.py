"""Word-list resources: polarity lexicon, exceptions list and prefix table.

All three are plain UTF-8 text files with one entry per line so they can be
corrected by hand.  Entries are normalized on load but never stemmed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import IO, Iterable, Iterator, NamedTuple, Union

from .textnorm import ZWNJ, normalize

log = logging.getLogger(__name__)

Source = Union[IO[bytes], IO[str], Iterable[bytes], Iterable[str]]


class LoadError(ValueError):
    pass


def iter_lines(source: Source, name: str = "<stream>") -> Iterator[tuple[int, str]]:
    """Yield ``(lineno, text)`` with line endings and a leading BOM removed.

    Byte lines are decoded strictly; a decoding failure raises
    :class:`LoadError` carrying the absolute byte offset of the bad byte.
    """
    offset = 0
    for lineno, line in enumerate(source, 1):
        if isinstance(line, bytes):
            try:
                text = line.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise LoadError(
                    f"{name}: malformed UTF-8 at byte offset {offset + exc.start} (line {lineno})"
                ) from None
            offset += len(line)
        else:
            text = line
        if lineno == 1:
            text = text.removeprefix("\ufeff")
        yield lineno, text.rstrip("\r\n")


class WordlistLoad(NamedTuple):
    entries: frozenset[str]
    lines_read: int
    kept: int


def load_wordlist(source: Source, name: str = "<stream>") -> WordlistLoad:
    words: set[str] = set()
    lines_read = 0
    for lines_read, text in iter_lines(source, name):
        if text.lstrip().startswith("#"):
            continue
        word = normalize(text)
        if word:
            words.add(word)
    return WordlistLoad(frozenset(words), lines_read, len(words))


def read_wordlist(path: str | Path) -> WordlistLoad:
    path = Path(path)
    with path.open("rb") as fh:
        return load_wordlist(fh, str(path))


def format_wordlist(words: Iterable[str]) -> str:
    return "".join(f"{w}\n" for w in sorted(words))


def save_wordlist(words: Iterable[str], path: str | Path) -> None:
    Path(path).write_text(format_wordlist(words), encoding="utf-8", newline="\n")


def data_path(name: str) -> Path:
    """Path of a file shipped in the package's ``data`` directory."""
    return Path(str(resources.files("persneg") / "data" / name))


_END = ""  # terminal marker; never a real character key


class PolarityLexicon:
    """Set of known-negative words with longest leading-substring lookup."""

    def __init__(self, words: Iterable[str] = ()):
        entries = set()
        for w in words:
            w = normalize(w)
            if w:
                entries.add(w)
        self.entries = frozenset(entries)
        self._trie: dict = {}
        for word in self.entries:
            node = self._trie
            for ch in word:
                node = node.setdefault(ch, {})
            node[_END] = True

    @classmethod
    def from_path(cls, path: str | Path) -> PolarityLexicon:
        return cls(read_wordlist(path).entries)

    @property
    def count(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def longest_leading_match(self, word: str) -> int | None:
        # one walk down the trie gives the same answer as trying every
        # leading substring from longest to shortest
        best = None
        node = self._trie
        for i, ch in enumerate(word, 1):
            node = node.get(ch)
            if node is None:
                break
            if _END in node:
                best = i
        return best


def longest_negative_leading_match(word: str, lex: PolarityLexicon) -> int | None:
    """Largest ``n`` such that ``word[:n]`` is in ``lex``, or None."""
    return lex.longest_leading_match(word)


class PrefixTable:
    """Negative prefixes, kept longest first and then in code point order."""

    def __init__(self, prefixes: Iterable[str]):
        cleaned = set()
        for p in prefixes:
            p = normalize(p)
            if not p or ZWNJ in p:
                raise ValueError(f"invalid prefix {p!r}")
            cleaned.add(p)
        if not cleaned:
            raise ValueError("prefix table is empty")
        self.prefixes: tuple[str, ...] = tuple(sorted(cleaned, key=lambda p: (-len(p), p)))

    @classmethod
    def from_path(cls, path: str | Path) -> PrefixTable:
        return cls(read_wordlist(path).entries)

    @classmethod
    def default(cls) -> PrefixTable:
        return cls.from_path(data_path("prefixes.txt"))

    def without(self, excluded: Iterable[str]) -> PrefixTable:
        drop = {normalize(p) for p in excluded}
        return PrefixTable(p for p in self.prefixes if p not in drop)

    def __iter__(self):
        return iter(self.prefixes)

    def __len__(self) -> int:
        return len(self.prefixes)

    def __contains__(self, prefix: str) -> bool:
        return prefix in self.prefixes

    def __eq__(self, other) -> bool:
        return isinstance(other, PrefixTable) and self.prefixes == other.prefixes

    def __repr__(self) -> str:
        return f"PrefixTable({list(self.prefixes)!r})"


class PrefixMatch(NamedTuple):
    prefix: str
    base: str


def leading_prefix_match(word: str, table: PrefixTable) -> PrefixMatch | None:
    """Longest table prefix leading ``word``, with the remaining base.

    One ZWNJ right after the prefix is dropped from the base.  If the
    longest matching prefix leaves no base, there is no match; shorter
    prefixes are not tried.
    """
    for prefix in table.prefixes:
        if word.startswith(prefix):
            base = word[len(prefix):]
            if base.startswith(ZWNJ):
                base = base[1:]
            return PrefixMatch(prefix, base) if base else None
    return None


@dataclass(frozen=True)
class ExceptionList:
    """Words exempt from the prefix rule."""

    entries: frozenset[str] = frozenset()

    @classmethod
    def from_words(cls, words: Iterable[str]) -> ExceptionList:
        return cls(frozenset(w for w in map(normalize, words) if w))

    @classmethod
    def from_paths(cls, *paths: str | Path) -> ExceptionList:
        """Union of several exception files."""
        entries: set[str] = set()
        for path in paths:
            entries |= read_wordlist(path).entries
        return cls(frozenset(entries))

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def irregular_entries(self, table: PrefixTable) -> list[str]:
        """Entries not led by any prefix in ``table``; each is logged as a warning."""
        odd = sorted(w for w in self.entries if not any(w.startswith(p) for p in table))
        for word in odd:
            log.warning("exception entry %r does not begin with a negative prefix", word)
        return odd
