import re

_WHITESPACE = re.compile(rb"\s+")


def normalize_whitespace(data: bytes) -> bytes:
    return _WHITESPACE.sub(b" ", data)


class PatternMatcher:
    """One-pass exact multi-pattern counter over bytes, overlapping occurrences included"""

    def __init__(self, patterns: 'list[bytes]'):
        if not patterns:
            raise ValueError("at least one pattern is required")
        self.patterns = list(patterns)
        self.max_length = max(len(p) for p in self.patterns)
        alternatives = b"|".join(re.escape(p) for p in sorted(set(self.patterns), key=len, reverse=True))
        self.__regex = re.compile(b"(?=(?:" + alternatives + b"))", re.S)
        self.__by_first_byte: 'dict[int, list[int]]' = dict()
        for index, pattern in enumerate(self.patterns):
            self.__by_first_byte.setdefault(pattern[0], []).append(index)

    def count(self, data: bytes, counts: 'list[int]', skip_before: int = 0):
        """Add to counts every occurrence ending after offset skip_before"""

        for match in self.__regex.finditer(data):
            position = match.start()
            for index in self.__by_first_byte[data[position]]:
                pattern = self.patterns[index]
                if position + len(pattern) > skip_before and data.startswith(pattern, position):
                    counts[index] += 1
