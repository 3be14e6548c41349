import io
from collections import Counter

import pytest

from persneg.extraction import (
    ExtractionError,
    UnigramModel,
    build_unigram_model,
    diff_wordlists,
    emit_partition,
    harvest_candidates,
    partition_candidates,
)
from persneg.lexicon import LoadError, PrefixTable
from persneg.textnorm import ZWNJ

TABLE = PrefixTable.default()


def corpus(text):
    return io.BytesIO(text.encode("utf-8"))


def model_of(**counts):
    c = Counter(counts)
    return UnigramModel(c, sum(c.values()))


class TestUnigramModel:
    def test_counts(self):
        m = build_unigram_model(corpus("ناب ناب سیب"))
        assert m.counts == {"ناب": 2, "سیب": 1}
        assert m.total_tokens == 3

    def test_empty(self):
        m = build_unigram_model(corpus(""))
        assert m.counts == {} and m.total_tokens == 0

    def test_variants_merge(self):
        m = build_unigram_model(corpus("علي علی"))
        assert m.counts == {"علی": 2} and m.total_tokens == 2

    def test_zwnj_kept_inside_token(self):
        m = build_unigram_model(corpus("بی" + ZWNJ + "ادب ادب\nادب"))
        assert m.counts == {"بی" + ZWNJ + "ادب": 1, "ادب": 2}

    def test_degenerate_tokens_not_counted(self):
        m = build_unigram_model(corpus("ـ سیب"))
        assert m.counts == {"سیب": 1} and m.total_tokens == 1

    def test_malformed(self):
        with pytest.raises(LoadError, match="byte offset 4"):
            build_unigram_model(io.BytesIO("سیب".encode()[:4] + b"\xff"))


class TestHarvest:
    def test_examples(self):
        words = {"غیرقانونی", "کتاب", "نارنگی"}
        assert harvest_candidates(words, TABLE) == {"غیرقانونی", "نارنگی"}
        assert harvest_candidates(set(), TABLE) == set()
        assert harvest_candidates({"بی" + ZWNJ + "ادب"}, TABLE) == {"بی" + ZWNJ + "ادب"}


class TestPartition:
    def test_frequent_base_is_valid(self):
        report = partition_candidates({"نارنگی"}, model_of(**{"رنگی": 120}), TABLE)
        assert report.valid_affixed == {"نارنگی"}
        assert report.evidence == [("نارنگی", "نا", "رنگی", 120)]

    def test_unseen_base_is_exception(self):
        report = partition_candidates({"لاینقطع"}, model_of(), TABLE)
        assert report.exceptions == {"لاینقطع"}
        assert report.evidence[0].base == "ینقطع"
        assert report.evidence[0].base_count == 0

    def test_threshold_boundary(self):
        m = model_of(**{"ادب": 5, "رحم": 6})
        report = partition_candidates({"بی" + ZWNJ + "ادب", "بی" + ZWNJ + "رحم"}, m, TABLE, threshold=5)
        assert report.exceptions == {"بی" + ZWNJ + "ادب"}
        assert report.valid_affixed == {"بی" + ZWNJ + "رحم"}

    def test_not_a_candidate(self):
        with pytest.raises(ExtractionError):
            partition_candidates({"کتاب"}, model_of(), TABLE)

    def test_bad_threshold(self):
        with pytest.raises(ValueError):
            partition_candidates(set(), model_of(), TABLE, threshold=0)


class TestEmit:
    def report(self):
        m = model_of(**{"رحم": 9, "قانونی": 8})
        words = {"بی" + ZWNJ + "رحم", "غیرقانونی", "لاینقطع", "ضدآب", "پادزهر"}
        return partition_candidates(words, m, TABLE)

    def test_cardinalities(self, tmp_path):
        report = self.report()
        paths = [tmp_path / n for n in ("v.txt", "e.txt", "ev.tsv")]
        emit_partition(report, *paths)
        sizes = [len(p.read_text(encoding="utf-8").splitlines()) for p in paths]
        assert sizes == [2, 3, 5]
        row = paths[2].read_text(encoding="utf-8").splitlines()[0].split("\t")
        assert len(row) == 4

    def test_empty(self, tmp_path):
        paths = [tmp_path / n for n in ("v.txt", "e.txt", "ev.tsv")]
        emit_partition(partition_candidates(set(), model_of(), TABLE), *paths)
        assert all(p.read_bytes() == b"" for p in paths)

    def test_byte_identical_reruns(self, tmp_path):
        out = []
        for run in ("a", "b"):
            paths = [tmp_path / f"{run}{n}" for n in ("v.txt", "e.txt", "ev.tsv")]
            emit_partition(self.report(), *paths)
            out.append([p.read_bytes() for p in paths])
        assert out[0] == out[1]

    def test_unwritable(self, tmp_path):
        missing = tmp_path / "nope" / "v.txt"
        with pytest.raises(OSError, match="nope"):
            emit_partition(self.report(), missing, tmp_path / "e", tmp_path / "ev")


def test_diff():
    d = diff_wordlists({"نارنگی", "بیمار"}, {"نارنگی", "ضدآب"})
    assert d.added == ["ضدآب"] and d.removed == ["بیمار"]
