import os
import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import BinaryIO, Iterator

from pactlib.exception import ScanIoErr, UsageErr
from pactlib.logger import ILogger, NoLogger
from ..scan.pattern_matcher import PatternMatcher, normalize_whitespace
from ..scan.scan_report import ScanReport

DEFAULT_CHUNK_SIZE = 1 << 20
MIN_PATTERN_LENGTH = 3
_TRAILING_WHITESPACE = re.compile(rb"\s+\Z")


def load_patterns(path: str) -> 'list[bytes]':
    """One raw byte pattern per line; only the line break is removed"""

    try:
        data = Path(path).read_bytes()
    except OSError as ex:
        raise UsageErr(f"Cannot read pattern file '{path}': {ex.strerror}") from ex
    return [line for line in data.split(b"\n") if line]


def scan_in_memory(data: bytes, patterns: 'list[bytes]') -> 'list[int]':
    """Reference counter: overlapping occurrences of each pattern by repeated find"""

    ret_val = []
    for pattern in patterns:
        count = 0
        position = data.find(pattern)
        while position >= 0:
            count += 1
            position = data.find(pattern, position + 1)
        ret_val.append(count)
    return ret_val


class CorpusScanner:
    """Streams files in chunks, carrying (longest pattern - 1) bytes across chunk boundaries"""

    def __init__(self, patterns: 'list[bytes]', chunk_size: int = DEFAULT_CHUNK_SIZE, workers: int = 4,
                 normalize_ws: bool = False, logger: ILogger = None):
        if not patterns:
            raise UsageErr("No patterns given")
        for pattern in patterns:
            if len(pattern) < MIN_PATTERN_LENGTH:
                raise UsageErr(f"Pattern {pattern!r} is shorter than {MIN_PATTERN_LENGTH} bytes")
        self.patterns = list(patterns)
        self.normalize_ws = normalize_ws
        search = [normalize_whitespace(p) for p in patterns] if normalize_ws else self.patterns
        self.__matcher = PatternMatcher(search)
        self.chunk_size = max(chunk_size, self.__matcher.max_length)
        self.workers = max(1, workers)
        self.logger = logger or NoLogger()

    def scan(self, paths: 'list[str]') -> ScanReport:
        report = ScanReport.empty(self.patterns)
        files = list(self.__files(paths))
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            results = list(executor.map(self.__scan_file_safe, files))
        for path, result in zip(files, results):
            if isinstance(result, ScanIoErr):
                report.failed_files.append(path)
                continue
            report.add_file(*result)
        self.logger.info("scan.done", files=report.files_scanned, bytes=report.bytes_scanned,
                         failed=len(report.failed_files))
        return report

    def scan_stream(self, stream: BinaryIO) -> 'tuple[list[int], int]':
        """Counts per pattern and number of raw bytes read"""

        counts = [0] * len(self.patterns)
        overlap = self.__matcher.max_length - 1
        tail = b""
        size = 0
        for chunk, raw_size in self.__chunks(stream):
            size += raw_size
            buffer = tail + chunk
            self.__matcher.count(buffer, counts, len(tail))
            tail = buffer[-overlap:] if overlap else b""
        return counts, size

    def __chunks(self, stream: BinaryIO) -> 'Iterator[tuple[bytes, int]]':
        if not self.normalize_ws:
            while True:
                chunk = stream.read(self.chunk_size)
                if not chunk:
                    return
                yield chunk, len(chunk)
        carry = b""
        while True:
            chunk = stream.read(self.chunk_size)
            if not chunk:
                if carry:
                    yield normalize_whitespace(carry), 0
                return
            data = carry + chunk
            # a whitespace run may continue in the next chunk
            match = _TRAILING_WHITESPACE.search(data)
            carry = data[match.start():] if match else b""
            data = data[:match.start()] if match else data
            yield normalize_whitespace(data), len(chunk)

    def __scan_file_safe(self, path: str) -> 'tuple[list[int], int]|ScanIoErr':
        try:
            with open(path, "rb") as stream:
                return self.scan_stream(stream)
        except OSError as ex:
            error = ScanIoErr(path, ex.strerror or str(ex))
            self.logger.warning("scan.io_error", path=path, reason=str(error))
            return error

    @staticmethod
    def __files(paths: 'list[str]') -> 'Iterator[str]':
        for path in paths:
            if os.path.isdir(path):
                for root, dirs, names in os.walk(path):
                    dirs.sort()
                    for name in sorted(names):
                        yield os.path.join(root, name)
            else:
                yield path


def scan(paths: 'list[str]', patterns: 'list[bytes]', chunk_size: int = DEFAULT_CHUNK_SIZE, workers: int = 4,
         normalize_ws: bool = False, logger: ILogger = None) -> ScanReport:
    return CorpusScanner(patterns, chunk_size, workers, normalize_ws, logger).scan(paths)
