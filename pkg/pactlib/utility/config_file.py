from pathlib import Path

from pactlib.exception import UsageErr
from pactlib.utility.dict_ex import DictEx
from pactlib.utility.value_parser import ValueParser


class ConfigFile:
    """Flat `key = value` option file"""

    @staticmethod
    def load(path: str) -> DictEx:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as ex:
            raise UsageErr(f"Cannot read config file '{path}': {ex.strerror}") from ex
        return ConfigFile.parse(text, path)

    @staticmethod
    def parse(text: str, source: str = "<config>") -> DictEx:
        ret_val = DictEx()
        for line_no, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageErr(f"{source}:{line_no}: expected 'key = value'")
            key, value = line.split("=", 1)
            key = key.strip().replace("-", "_")
            if not key:
                raise UsageErr(f"{source}:{line_no}: empty key")
            ret_val[key] = ValueParser.parse(value)
        return ret_val
