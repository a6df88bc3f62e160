import io
import json

import pytest

from pactlib import __version__, edge
from pactlib.utility import DATA_DIR

PEIRCE_RAW = str(DATA_DIR / "peirce_raw.jsonl")


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = edge.from_options().dispatch(list(argv) + ["--logger", "none"], stdout, stderr)
    report = json.loads(stdout.getvalue()) if code != 2 and stdout.getvalue().strip() else None
    return code, report, stderr.getvalue()


def test_usage_errors():
    stdout, stderr = io.StringIO(), io.StringIO()
    assert edge.from_options().dispatch([], stdout, stderr) == 2
    assert "usage: pactlib <command>" in stderr.getvalue()
    code, _, err = run("frobnicate")
    assert code == 2
    assert json.loads(err.splitlines()[0])["errorCode"] == "cli-usage"
    assert run("extract", "--bogus", "1")[0] == 2
    assert run("extract")[0] == 2
    assert run("name-eval", "--candidates", PEIRCE_RAW, "--k", "0")[0] == 2


def test_version_and_help(capsys):
    assert edge.main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == f"pactlib {__version__}"
    assert edge.main(["--help"]) == 0
    text = capsys.readouterr().out
    for command in ["extract", "tasks", "split", "prove", "eval", "name-eval", "scan", "serve"]:
        assert f"  {command} " in text
    assert edge.main(["prove", "--help"]) == 0
    assert "--theorem NAME" in capsys.readouterr().out


def test_extract_then_tasks_then_split(tmp_path):
    raw = str(tmp_path / "raw.jsonl")
    code, report, _ = run("extract", "--out", raw, "--workers", "2")
    assert code == 0
    assert report["schema_version"] == 1
    assert report["command"] == "extract"
    assert report["datapoints"] == len(open(raw, encoding="utf-8").read().splitlines())

    tasks = str(tmp_path / "tasks.jsonl")
    code, report, _ = run("tasks", "--in", raw, "--out", tasks, "--scripts", "toy_logic.script")
    assert code == 0
    assert report["perTask"]["proofstep"] > 0

    code, report, _ = run("split", "--in", tasks, "--out-prefix", str(tmp_path / "split" / "pact"))
    assert code == 0
    assert sum(report["manifest"]["counts"].values()) == line_count(tasks)


def test_depth_limited_extract_feeds_tasks(tmp_path):
    raw = str(tmp_path / "raw.jsonl")
    assert run("extract", "--out", raw, "--max-depth", "3")[0] == 0
    code, report, _ = run("tasks", "--in", raw, "--out", str(tmp_path / "tasks.jsonl"))
    assert code == 0
    assert report["examples"] > 0


def line_count(path):
    return len(open(path, encoding="utf-8").read().splitlines())


def test_tasks_on_recorded_datapoints(tmp_path):
    code, report, _ = run("tasks", "--in", PEIRCE_RAW, "--out", str(tmp_path / "tasks.jsonl"))
    assert code == 0
    assert report["examples"] == 65
    assert report["perTask"]["naming"] == 1


def test_prove_exit_codes_and_reproducibility():
    args = ("prove", "--theorem", "peirce_identity", "--backend", "scripted:peirce.script")
    code, report, _ = run(*args)
    assert code == 0
    assert report["status"] == "proved"
    assert len(report["proof"]) == 4
    assert "wallTime" not in report
    assert run(*args)[1] == report

    code, report, _ = run("prove", "--theorem", "peirce_identity", "--backend", "refl")
    assert code == 1
    assert report["status"] == "exhausted"


def test_report_file_and_config_precedence(tmp_path):
    config = tmp_path / "pact.cfg"
    config.write_text("# prove settings\nbackend = refl\nmax-iterations = 64\n", encoding="utf-8")
    out = tmp_path / "reports" / "prove.json"
    code, report, _ = run("prove", "--theorem", "true_intro", "--config", str(config), "--report", str(out))
    assert code == 1
    assert report is None
    assert json.loads(out.read_text(encoding="utf-8"))["backend"] == "refl"

    code, report, _ = run("prove", "--theorem", "peirce_identity", "--config", str(config),
                          "--backend", "scripted:peirce.script")
    assert code == 0

    config.write_text("backend = refl\nbogus = 1\n", encoding="utf-8")
    assert run("prove", "--theorem", "peirce_identity", "--config", str(config))[0] == 2


def test_eval_command():
    code, report, _ = run("eval", "--backend", "scripted:toy_logic.script", "--runs", "2",
                          "--theorems", "id_imp,and_swap,nat.eq_self")
    assert code == 0
    assert report["passRate"] == 1.0
    assert report["perRun"] == [{"proved": 3, "attempted": 3}] * 2
    assert set(report["perModule"]) == {"data", "logic"}


def test_name_eval_command(tmp_path):
    path = tmp_path / "names.jsonl"
    path.write_text(json.dumps({"truth": "a", "candidates": [["b", -0.1], ["a", -0.2]]}) + "\n", encoding="utf-8")
    code, report, _ = run("name-eval", "--candidates", str(path), "--k", "1,2")
    assert code == 0
    assert report["rows"] == 1
    assert report["topK"] == {"1": 0.0, "2": 1.0}


def test_scan_command(tmp_path):
    first = tmp_path / "a.lean"
    second = tmp_path / "b.thy"
    first.write_text("lemma foo := by { rintro ⟨x, y⟩ }\n", encoding="utf-8")
    second.write_text("apply (rule\n  conjI)\n", encoding="utf-8")
    code, report, _ = run("scan", "--corpus", str(first), str(second))
    assert code == 0
    counts = {row["pattern"]: row["count"] for row in report["perPattern"]}
    assert counts["{ rintro ⟨"] == 1
    assert counts["apply (rule "] == 0
    assert report["filesScanned"] == 2

    code, report, _ = run("scan", "--normalize-ws", "--corpus", str(second))
    assert {row["pattern"]: row["count"] for row in report["perPattern"]}["apply (rule "] == 1
    assert run("scan")[0] == 2


@pytest.mark.parametrize("rate", ["1.5", "-0.1"])
def test_serve_rejects_bad_failure_rate(rate):
    assert run("serve", "--failure-rate", rate)[0] == 2
