import io
import json
import math

import pytest

from pactlib.exception import UsageErr
from pactlib.logger import ConsoleLogger, JsonLinesLogger, LoggerFactory, LogLevel, NoLogger
from pactlib.utility import (DATA_DIR, DEFAULT_OPTIONS, TOY_SCRIPTS, ConfigFile, DictEx, ValueParser,
                             resolve_data_path)


@pytest.mark.parametrize("raw, expected", [
    ("12", 12),
    ("-3", -3),
    ("0.25", 0.25),
    ("1e3", 1000.0),
    ("true", True),
    ("False", False),
    ("none", None),
    ("inf", math.inf),
    ("250ms", 0.25),
    ("2m", 120.0),
    ("'quoted'", "quoted"),
    ("scripted:toy_logic.script", "scripted:toy_logic.script"),
])
def test_value_parser(raw, expected):
    assert ValueParser.parse(raw) == expected


def test_durations_and_limits():
    assert ValueParser.duration("5s") == 5.0
    assert ValueParser.duration(None) == math.inf
    assert ValueParser.duration(3) == 3.0
    with pytest.raises(UsageErr):
        ValueParser.duration("soon")
    assert ValueParser.limit("16") == 16
    assert ValueParser.limit("inf") == math.inf
    assert ValueParser.limit(None) == math.inf
    for bad in [-1, 1.5, True, "many"]:
        with pytest.raises(UsageErr):
            ValueParser.limit(bad)


def test_config_file_parse():
    options = ConfigFile.parse("# search\nw-max = 8\n\nbackend = remote:http://h:1\nnormalize_ws = true\n")
    assert options == {"w_max": 8, "backend": "remote:http://h:1", "normalize_ws": True}
    assert options.w_max == 8
    with pytest.raises(UsageErr):
        ConfigFile.parse("w_max 8")
    with pytest.raises(UsageErr):
        ConfigFile.parse(" = 8")
    with pytest.raises(UsageErr):
        ConfigFile.load("/no/such/pact.cfg")


def test_dict_ex_merge_layers():
    base = DictEx({"a": 1, "nested": {"x": 1}})
    merged = base.merge({"a": 2, "b": None}, {"c": 3})
    assert merged == {"a": 2, "nested": {"x": 1}, "c": 3}
    assert merged.nested.x == 1
    assert base.a == 1
    assert merged.missing is None
    assert DictEx(a=1, zz=2).reject_unknown({"a"}) == ["zz"]


def test_defaults_cover_search_limits():
    assert DEFAULT_OPTIONS.w_max == 16
    assert DEFAULT_OPTIONS.d_max == 128
    assert DEFAULT_OPTIONS.backend == "tidy"


def test_resolve_data_path(tmp_path):
    assert resolve_data_path("toy_logic.script") == str(TOY_SCRIPTS)
    local = tmp_path / "toy_logic.script"
    local.write_text("", encoding="utf-8")
    assert resolve_data_path(str(local)) == str(local)
    assert resolve_data_path("nothing_here.txt") == "nothing_here.txt"
    assert (DATA_DIR / "contamination_patterns.txt").exists()


def test_logger_factory(tmp_path):
    assert isinstance(LoggerFactory.create(DictEx(logger="none")), NoLogger)
    assert isinstance(LoggerFactory.create(DictEx()), NoLogger)
    assert isinstance(LoggerFactory.create(DictEx(logger="console", log_level="debug")), ConsoleLogger)
    logger = LoggerFactory.create(DictEx(logger=f"jsonl:{tmp_path / 'log.jsonl'}", log_level="warning"))
    assert isinstance(logger, JsonLinesLogger)
    assert logger.level == LogLevel.WARNING
    for bad in [DictEx(logger="syslog"), DictEx(logger="jsonl:"), DictEx(logger="console", log_level="loud")]:
        with pytest.raises(UsageErr):
            LoggerFactory.create(bad)


def test_json_lines_logger(tmp_path):
    path = tmp_path / "events.jsonl"
    logger = JsonLinesLogger(str(path), LogLevel.INFO)
    logger.debug("search.expand", node=1)
    logger.info("search.done", theorem="id_imp", iterations=2)
    logger.warning("oracle.remote.failure", url="http://h/candidates", attempt=0)
    records = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert [r["event"] for r in records] == ["search.done", "oracle.remote.failure"]
    assert records[0]["level"] == "info"
    assert records[0]["iterations"] == 2
    assert "time" in records[0]


def test_console_logger_writes_stream():
    stream = io.StringIO()
    logger = ConsoleLogger(LogLevel.INFO, stream)
    logger.info("scan.done", files=2)
    logger.debug("hidden")
    assert "INFO scan.done files=2" in stream.getvalue()
    assert "hidden" not in stream.getvalue()
