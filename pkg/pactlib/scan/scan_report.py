from dataclasses import dataclass, field


@dataclass
class ScanReport:
    patterns: 'list[bytes]'
    counts: 'list[int]'
    files_with_hits: 'list[int]'
    bytes_scanned: int = 0
    files_scanned: int = 0
    failed_files: 'list[str]' = field(default_factory=list)

    @staticmethod
    def empty(patterns: 'list[bytes]') -> 'ScanReport':
        return ScanReport(list(patterns), [0] * len(patterns), [0] * len(patterns))

    def count_of(self, pattern: 'bytes|str') -> int:
        if isinstance(pattern, str):
            pattern = pattern.encode("utf-8")
        return self.counts[self.patterns.index(pattern)]

    def add_file(self, counts: 'list[int]', size: int):
        self.files_scanned += 1
        self.bytes_scanned += size
        for index, count in enumerate(counts):
            self.counts[index] += count
            if count:
                self.files_with_hits[index] += 1

    def to_dict(self) -> dict:
        return {
            "perPattern": [
                {"pattern": pattern.decode("utf-8", errors="backslashreplace"), "count": count,
                 "filesWithHits": files}
                for pattern, count, files in zip(self.patterns, self.counts, self.files_with_hits)
            ],
            "bytesScanned": self.bytes_scanned,
            "filesScanned": self.files_scanned,
            "failedFiles": self.failed_files,
        }
