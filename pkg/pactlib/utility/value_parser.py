import math
import re

from pactlib.exception import UsageErr

_DURATION = re.compile(r'^(\d+(?:\.\d+)?)(ms|s|m)$')
_NUMBER_INT = re.compile(r'^[+-]?\d+$')
_NUMBER_FLOAT = re.compile(r'^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$')


class ValueParser:
    """Convert raw option text (config file or command line) into typed values"""

    @staticmethod
    def parse(raw: str):
        text = raw.strip()
        lower = text.lower()
        if lower in ("none", "null"):
            return None
        if lower in ("inf", "infinity", "∞"):
            return math.inf
        if lower == "true":
            return True
        if lower == "false":
            return False
        if _NUMBER_INT.match(text):
            return int(text)
        if _NUMBER_FLOAT.match(text):
            return float(text)
        duration = ValueParser.duration(text, strict=False)
        if duration is not None:
            return duration
        if len(text) >= 2 and text[0] == text[-1] and text[0] in ('"', "'"):
            return text[1:-1]
        return text

    @staticmethod
    def duration(value, strict: bool = True) -> 'float':
        """Seconds from `5s`, `250ms`, `2m`, a bare number, `inf` or `none` (no limit)"""

        if value is None:
            return math.inf
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
        text = str(value).strip().lower()
        if text in ("inf", "none", "∞"):
            return math.inf
        match = _DURATION.match(text)
        if match:
            amount = float(match.group(1))
            unit = match.group(2)
            if unit == "ms":
                return amount / 1000.0
            if unit == "m":
                return amount * 60.0
            return amount
        if _NUMBER_FLOAT.match(text):
            return float(text)
        if strict:
            raise UsageErr(f"Invalid duration '{value}'")
        return None

    @staticmethod
    def limit(value) -> 'float|int':
        """Nonnegative integer limit, `inf`/`none` meaning unbounded"""

        if value is None:
            return math.inf
        if isinstance(value, float) and math.isinf(value):
            return value
        if isinstance(value, str):
            parsed = ValueParser.parse(value)
            if parsed is None or (isinstance(parsed, float) and math.isinf(parsed)):
                return math.inf
            value = parsed
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise UsageErr(f"Invalid limit '{value}'")
        return value
