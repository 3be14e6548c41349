"""Command-line interface: ``persneg <subcommand> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .detector import Detector, SkippedLine
from .evaluation import evaluate, format_skeleton, read_gold, sample_words
from .extraction import (
    DEFAULT_THRESHOLD,
    diff_wordlists,
    emit_partition,
    harvest_candidates,
    partition_candidates,
    read_unigram_model,
)
from .lexicon import (
    ExceptionList,
    LoadError,
    PolarityLexicon,
    PrefixTable,
    data_path,
    iter_lines,
    read_wordlist,
)
from .textnorm import SuffixRuleError, load_suffix_rules, normalize, stem

log = logging.getLogger("persneg")

EXIT_OK, EXIT_ERROR, EXIT_EMPTY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    prefixes: Path
    lexicon: Path
    exceptions: list[Path]
    suffix_rules: Path
    threshold: int = DEFAULT_THRESHOLD
    exclude_prefixes: list[str] = field(default_factory=list)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        data_dir = Path(args.data_dir) if args.data_dir else data_path("")

        def pick(value, default_name):
            return Path(value) if value else data_dir / default_name

        return cls(
            prefixes=pick(args.prefixes, "prefixes.txt"),
            lexicon=pick(args.lexicon, "polarity.txt"),
            exceptions=[Path(p) for p in args.exceptions] if args.exceptions
            else [data_dir / "exceptions.txt"],
            suffix_rules=pick(args.suffix_rules, "suffix_rules.txt"),
            threshold=args.threshold,
            exclude_prefixes=getattr(args, "exclude_prefix", None) or [],
        )

    def load_prefixes(self) -> PrefixTable:
        table = PrefixTable.from_path(self.prefixes)
        if self.exclude_prefixes:
            table = table.without(self.exclude_prefixes)
        return table

    def load_detector(self) -> Detector:
        table = self.load_prefixes()
        exceptions = ExceptionList.from_paths(*self.exceptions)
        exceptions.irregular_entries(table)
        return Detector(
            PolarityLexicon.from_path(self.lexicon),
            exceptions,
            table,
            load_suffix_rules(self.suffix_rules),
        )


def _require_file(path: Path, what: str) -> None:
    if not path.is_file():
        raise UsageError(f"{what} not found: {path}")


def _input_lines(words: list[str]):
    return words if words else sys.stdin.buffer


def cmd_build_exceptions(args, config: RunConfig) -> int:
    corpus, words, out_dir = Path(args.corpus), Path(args.words), Path(args.out_dir)
    for path, what in ((corpus, "corpus"), (words, "word database"), (config.prefixes, "prefix file")):
        _require_file(path, what)
    # everything is parsed before the first output file is created
    table = config.load_prefixes()
    inventory = read_wordlist(words).entries
    model = read_unigram_model(corpus)

    reports = {
        "words": partition_candidates(harvest_candidates(inventory, table), model, table, config.threshold),
        "corpus": partition_candidates(
            harvest_candidates(model.vocabulary(), table), model, table, config.threshold
        ),
    }

    out_dir.mkdir(parents=True, exist_ok=True)
    summary = ["source\tword_count\n"]
    for source, report in reports.items():
        emit_partition(
            report,
            out_dir / f"{source}.valid_affixed.txt",
            out_dir / f"{source}.exceptions.txt",
            out_dir / f"{source}.evidence.tsv",
        )
        summary.append(f"{source} exceptions\t{len(report.exceptions)}\n")
        summary.append(f"{source} valid_affixed\t{len(report.valid_affixed)}\n")
    (out_dir / "summary.tsv").write_text("".join(summary), encoding="utf-8", newline="\n")

    print(f"corpus: {model.total_tokens} tokens, {len(model)} types")
    width = max(len(row.split("\t")[0]) for row in summary)
    for row in summary:
        name, count = row.rstrip("\n").split("\t")
        print(f"{name:<{width}}  {count}")

    empty = [source for source, report in reports.items() if not report.candidates]
    if empty:
        log.warning("no prefix-led candidates found in: %s", ", ".join(empty))
        return EXIT_EMPTY
    return EXIT_OK


def cmd_detect(args, config: RunConfig) -> int:
    detector = config.load_detector()
    out = sys.stdout
    for result in detector.detect_batch(_input_lines(args.words), "<stdin>"):
        if isinstance(result, SkippedLine):
            print(f"line {result.lineno}: skipped {result.surface!r}: {result.reason}", file=sys.stderr)
            continue
        out.write(result.to_tsv() + "\n")
    return EXIT_OK


def cmd_evaluate(args, config: RunConfig) -> int:
    gold_path = Path(args.gold)
    _require_file(gold_path, "gold file")
    sample = read_gold(gold_path)
    report = evaluate(sample, config.load_detector())
    sys.stdout.write(report.format_text())
    sys.stdout.write("\n")
    sys.stdout.write(report.format_keyvalue())
    return EXIT_OK


def cmd_normalize(args, config: RunConfig) -> int:
    rules = load_suffix_rules(config.suffix_rules) if args.stem else None
    for _, text in iter_lines(_input_lines(args.words), "<stdin>"):
        token = normalize(text)
        if rules is not None:
            token = stem(token, rules)
        sys.stdout.write(token + "\n")
    return EXIT_OK


def cmd_sample(args, config: RunConfig) -> int:
    pool = read_wordlist(args.pool).entries
    text = format_skeleton(sample_words(pool, args.k, args.seed))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_diff(args, config: RunConfig) -> int:
    diff = diff_wordlists(read_wordlist(args.generated).entries, read_wordlist(args.edited).entries)
    for word in diff.added:
        print(f"+{word}")
    for word in diff.removed:
        print(f"-{word}")
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _add_store_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommands repeat the global flags with SUPPRESS so that an unset
    # flag after the subcommand does not clobber one given before it
    def default(value):
        return argparse.SUPPRESS if suppress else value

    g = parser.add_argument_group("stores")
    g.add_argument("--data-dir", default=default(None), help="directory holding the default store files")
    g.add_argument("--prefixes", default=default(None), help="negative prefix file")
    g.add_argument("--lexicon", default=default(None), help="negative-polarity word list")
    g.add_argument("--exceptions", action="append", default=default(None),
                   help="exceptions word list (repeat to merge several)")
    g.add_argument("--suffix-rules", default=default(None), help="noun suffix rule file")
    g.add_argument("--threshold", type=_positive_int, default=default(DEFAULT_THRESHOLD),
                   help="base count a valid affixed word must exceed (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="persneg", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_store_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-exceptions", help="partition prefix-led words by base frequency")
    _add_store_options(p, suppress=True)
    p.add_argument("--corpus", required=True, help="plain-text corpus, whitespace tokenized")
    p.add_argument("--words", required=True, help="word database, one word per line")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_build_exceptions)

    p = sub.add_parser("detect", help="classify words (arguments or stdin lines)")
    _add_store_options(p, suppress=True)
    p.add_argument("words", nargs="*")
    p.add_argument("--exclude-prefix", action="append", metavar="PREFIX",
                   help="ignore this prefix from the table (repeatable)")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("evaluate", help="score the detector on a gold TSV file")
    _add_store_options(p, suppress=True)
    p.add_argument("--gold", required=True, help="TSV of word<TAB>label, label 0 or 1")
    p.add_argument("--exclude-prefix", action="append", metavar="PREFIX")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("normalize", help="print canonical forms")
    _add_store_options(p, suppress=True)
    p.add_argument("words", nargs="*")
    p.add_argument("--stem", action="store_true", help="also strip noun suffixes")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("sample", help="draw a random word sample for labelling")
    _add_store_options(p, suppress=True)
    p.add_argument("--pool", required=True, help="word list to sample from")
    p.add_argument("-k", type=_positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("diff", help="compare a generated word list with its edited copy")
    p.add_argument("generated")
    p.add_argument("edited")
    p.set_defaults(func=cmd_diff)
    return parser


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    logging.basicConfig(level=logging.WARNING, format="persneg: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        return args.func(args, config)
    except (UsageError, LoadError, SuffixRuleError, OSError, ValueError) as exc:
        print(f"persneg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
