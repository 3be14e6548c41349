"""Canonical token form and noun-postfix stripping for Persian input.

A canonical token has unified codepoints (Persian yeh/keheh instead of
the Arabic letters), no diacritics or tatweel, Persian digits, and uses
ZWNJ (U+200C) wherever the raw input had whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

ZWNJ = "\u200c"

# source codepoint -> replacement; None deletes
UNIFICATION_TABLE: dict[str, str | None] = {
    "\u064a": "\u06cc",  # ARABIC LETTER YEH -> FARSI YEH
    "\u0643": "\u06a9",  # ARABIC LETTER KAF -> KEHEH
    "\u0629": "\u0647",  # TEH MARBUTA -> HEH
    "\u0640": None,  # tatweel
}
UNIFICATION_TABLE.update({chr(cp): None for cp in range(0x064B, 0x0653)})
UNIFICATION_TABLE.update({chr(0x0660 + d): chr(0x06F0 + d) for d in range(10)})

_TRANSLATION = str.maketrans(UNIFICATION_TABLE)
_SEPARATOR_RUN = re.compile(r"[\s\u200c]+")


def normalize(raw: str) -> str:
    """Return the canonical form of ``raw``.

    Whitespace runs inside the token become a single ZWNJ, so a compound
    typed with spaces (``"غیر فعال"``) is treated as one token.  An input
    that reduces to nothing yields ``""``.
    """
    text = raw.strip().translate(_TRANSLATION)
    return _SEPARATOR_RUN.sub(ZWNJ, text).strip(ZWNJ)


@dataclass(frozen=True)
class SuffixRule:
    suffix: str
    strip_preceding_zwnj: bool = True

    def __post_init__(self):
        if not self.suffix:
            raise ValueError("suffix rule must have a non-empty suffix")
        if normalize(self.suffix) != self.suffix or ZWNJ in self.suffix:
            raise ValueError(f"suffix {self.suffix!r} is not in canonical form")


class SuffixRuleError(ValueError):
    pass


def order_rules(rules: Iterable[SuffixRule]) -> tuple[SuffixRule, ...]:
    """Sort rules longest suffix first; reject duplicate suffixes."""
    ordered = sorted(rules, key=lambda r: (-len(r.suffix), r.suffix))
    for a, b in zip(ordered, ordered[1:]):
        if a.suffix == b.suffix:
            raise SuffixRuleError(f"duplicate suffix rule {a.suffix!r}")
    return tuple(ordered)


def parse_suffix_rules(lines: Iterable[str], source: str = "<rules>") -> tuple[SuffixRule, ...]:
    """Parse ``suffix<TAB>zwnj`` lines; ``#`` starts a comment line."""
    rules = []
    for lineno, line in enumerate(lines, 1):
        line = line.lstrip("\ufeff").rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or fields[1].strip() not in ("0", "1"):
            raise SuffixRuleError(f"{source}:{lineno}: expected 'suffix<TAB>0|1', got {line!r}")
        suffix = normalize(fields[0])
        try:
            rules.append(SuffixRule(suffix, fields[1].strip() == "1"))
        except ValueError as exc:
            raise SuffixRuleError(f"{source}:{lineno}: {exc}") from None
    return order_rules(rules)


def load_suffix_rules(path: str | Path) -> tuple[SuffixRule, ...]:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return parse_suffix_rules(fh, str(path))


def default_suffix_rules() -> tuple[SuffixRule, ...]:
    ref = resources.files("persneg") / "data" / "suffix_rules.txt"
    return parse_suffix_rules(ref.read_text(encoding="utf-8").splitlines(), "suffix_rules.txt")


MIN_STEM_LENGTH = 2


def _strip_once(token: str, rules: Sequence[SuffixRule]) -> str | None:
    for rule in rules:
        if not token.endswith(rule.suffix):
            continue
        rest = token[: -len(rule.suffix)]
        if rest.endswith(ZWNJ):
            # a rule without ZWNJ stripping would leave a dangling joiner
            if not rule.strip_preceding_zwnj:
                continue
            rest = rest[:-1]
        if len(rest) >= MIN_STEM_LENGTH:
            return rest
    return None


def stem(token: str, rules: Sequence[SuffixRule]) -> str:
    """Strip noun postfixes from a canonical token until none applies.

    ``rules`` must be ordered longest-first (see :func:`order_rules`).  At
    each step the longest rule whose removal leaves at least
    ``MIN_STEM_LENGTH`` characters is applied, so the result is a fixed
    point and stemming twice changes nothing.
    """
    while True:
        stripped = _strip_once(token, rules)
        if stripped is None:
            return token
        token = stripped
