from pactlib.scan.pattern_matcher import PatternMatcher, normalize_whitespace
from pactlib.scan.scan_report import ScanReport
from pactlib.scan.corpus_scanner import (CorpusScanner, scan, scan_in_memory, load_patterns, DEFAULT_CHUNK_SIZE,
                                         MIN_PATTERN_LENGTH)
