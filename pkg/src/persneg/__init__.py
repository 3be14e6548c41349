"""Rule-based detection of Persian words with negative polarity."""

__version__ = "0.1.0"

from .detector import DegenerateInputError, DetectionVerdict, Detector, Rationale, detect, preprocess
from .evaluation import EvaluationReport, GoldSample, evaluate, sample_words
from .extraction import (
    PartitionReport,
    UnigramModel,
    build_unigram_model,
    emit_partition,
    harvest_candidates,
    partition_candidates,
)
from .lexicon import (
    ExceptionList,
    PolarityLexicon,
    PrefixTable,
    leading_prefix_match,
    load_wordlist,
    longest_negative_leading_match,
)
from .textnorm import SuffixRule, default_suffix_rules, normalize, stem

__all__ = [
    "DegenerateInputError",
    "DetectionVerdict",
    "Detector",
    "EvaluationReport",
    "ExceptionList",
    "GoldSample",
    "PartitionReport",
    "PolarityLexicon",
    "PrefixTable",
    "Rationale",
    "SuffixRule",
    "UnigramModel",
    "build_unigram_model",
    "default_suffix_rules",
    "detect",
    "emit_partition",
    "evaluate",
    "harvest_candidates",
    "leading_prefix_match",
    "load_wordlist",
    "longest_negative_leading_match",
    "normalize",
    "partition_candidates",
    "preprocess",
    "sample_words",
    "stem",
]
