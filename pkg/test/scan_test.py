import io
import random
import time

import pytest

from pactlib.exception import UsageErr
from pactlib.scan import CorpusScanner, PatternMatcher, ScanReport, load_patterns, scan, scan_in_memory
from pactlib.utility import CONTAMINATION_PATTERNS

FILLER = b"0123456789\n"


@pytest.fixture(scope="module")
def bundled():
    return load_patterns(str(CONTAMINATION_PATTERNS))


def planted_corpus(patterns, seed, size=20000):
    """Digits filler with pattern i planted i + 1 times"""

    rnd = random.Random(seed)
    pieces = [bytes(rnd.choice(FILLER) for _ in range(size // 100)) for _ in range(100)]
    for index, pattern in enumerate(patterns):
        for _ in range(index + 1):
            pieces.insert(rnd.randrange(len(pieces) + 1), pattern)
    return b"".join(pieces)


def test_bundled_patterns_keep_trailing_spaces(bundled):
    assert len(bundled) == 8
    assert "{ rintro ⟨".encode("utf-8") in bundled
    assert b"apply (rule " in bundled
    assert b"apply (drule " in bundled


def test_overlapping_occurrences_are_counted():
    counts = [0]
    PatternMatcher([b"aaa"]).count(b"aaaaa", counts)
    assert counts == [3]
    assert scan_in_memory(b"aaaaa", [b"aaa"]) == [3]


def test_prefix_patterns_both_count():
    patterns = [b"abc", b"abcd"]
    counts = [0, 0]
    PatternMatcher(patterns).count(b"abcdabc", counts)
    assert counts == [2, 1]


@pytest.mark.parametrize("chunk_size", [17, 43, 64, 4096])
def test_planted_counts_across_chunk_sizes(bundled, chunk_size):
    data = planted_corpus(bundled, seed=chunk_size)
    counts, size = CorpusScanner(bundled, chunk_size=chunk_size).scan_stream(io.BytesIO(data))
    assert counts == [index + 1 for index in range(len(bundled))]
    assert size == len(data)


@pytest.mark.parametrize("seed", range(20))
def test_chunked_scan_matches_reference(seed):
    rnd = random.Random(seed)
    patterns = [bytes(rnd.choice(b"ab") for _ in range(rnd.randint(3, 6))) for _ in range(rnd.randint(1, 6))]
    data = bytes(rnd.choice(b"ab \n") for _ in range(rnd.randint(0, 5000)))
    expected = scan_in_memory(data, patterns)
    for chunk_size in [1, 7, 50, 1 << 20]:
        counts, _ = CorpusScanner(patterns, chunk_size=chunk_size).scan_stream(io.BytesIO(data))
        assert counts == expected, (patterns, chunk_size)


def test_whitespace_normalization_spans_chunks():
    pattern = b"( ph -> A = C )"
    data = b"x ( ph  ->\n\t A = C ) y ( ph -> A = C )"
    plain, _ = CorpusScanner([pattern], chunk_size=4).scan_stream(io.BytesIO(data))
    assert plain == [1]
    for chunk_size in [4, 9, 15, 1024]:
        counts, size = CorpusScanner([pattern], chunk_size=chunk_size, normalize_ws=True).scan_stream(
            io.BytesIO(data))
        assert counts == [2]
        assert size == len(data)


def test_directory_walk_and_failed_files(tmp_path):
    nested = tmp_path / "corpus" / "b"
    nested.mkdir(parents=True)
    (tmp_path / "corpus" / "a.txt").write_bytes(b"apply (rule foo)\napply (drule bar)")
    (nested / "c.txt").write_bytes(b"{ rcases h with x }")
    missing = str(tmp_path / "missing.txt")
    patterns = [b"apply (rule ", b"apply (drule ", b"{ rcases h"]
    report = scan([str(tmp_path / "corpus"), missing], patterns, chunk_size=8, workers=2)
    assert report.counts == [1, 1, 1]
    assert report.files_scanned == 2
    assert report.failed_files == [missing]
    assert report.count_of("{ rcases h") == 1
    assert report.bytes_scanned == 34 + 19


def test_report_shape():
    report = ScanReport.empty([b"abc", "⟨x⟩".encode("utf-8")])
    report.add_file([2, 0], 10)
    report.add_file([1, 0], 5)
    data = report.to_dict()
    assert data["perPattern"] == [{"pattern": "abc", "count": 3, "filesWithHits": 2},
                                  {"pattern": "⟨x⟩", "count": 0, "filesWithHits": 0}]
    assert data["bytesScanned"] == 15
    assert data["filesScanned"] == 2
    assert data["failedFiles"] == []


def test_rejects_short_or_missing_patterns(tmp_path):
    with pytest.raises(UsageErr):
        CorpusScanner([])
    with pytest.raises(UsageErr):
        CorpusScanner([b"ab"])
    with pytest.raises(UsageErr):
        load_patterns(str(tmp_path / "nope.txt"))


@pytest.mark.slow
def test_large_corpus_throughput(tmp_path, bundled):
    block = planted_corpus(bundled, seed=1, size=1 << 20)
    repeats = 100
    path = tmp_path / "big.txt"
    with open(path, "wb") as out_file:
        for _ in range(repeats):
            out_file.write(block)
    start = time.perf_counter()
    report = scan([str(path)], bundled, workers=1)
    elapsed = time.perf_counter() - start
    assert report.counts == [(index + 1) * repeats for index in range(len(bundled))]
    assert report.bytes_scanned / elapsed > 5 * (1 << 20)
