import json

import pytest

from pactlib.codec import TaskCodec, write_tasks
from pactlib.exception import EmptyNameErr, MissingNameErr, SchemaErr
from pactlib.split import (BUCKETS, TEST, TRAIN, VALID, SplitAssignment, bucket_of, hash_name, split_dataset,
                           split_file, split_manifest)


def test_hash_is_deterministic_and_open_interval():
    for name in ["peirce_identity", "nat.succ_ne_zero", "ᾰ", "x"]:
        value = hash_name(name)
        assert 0.0 < value < 1.0
        assert hash_name(name) == value
    assert hash_name("a") != hash_name("b")


def test_bucket_boundaries():
    assert bucket_of(0.0001) == TRAIN
    assert bucket_of(0.7999) == TRAIN
    assert bucket_of(0.80) == VALID
    assert bucket_of(0.8499) == VALID
    assert bucket_of(0.85) == TEST
    assert bucket_of(0.9999) == TEST


def test_bucket_fractions_on_many_names():
    names = [f"lemma_{i}" for i in range(10000)]
    buckets = [SplitAssignment.of(name).bucket for name in names]
    fractions = {bucket: buckets.count(bucket) / len(names) for bucket in BUCKETS}
    assert fractions[TRAIN] == pytest.approx(0.80, abs=0.01)
    assert fractions[VALID] == pytest.approx(0.05, abs=0.01)
    assert fractions[TEST] == pytest.approx(0.15, abs=0.01)


def test_empty_and_missing_names():
    with pytest.raises(EmptyNameErr):
        hash_name("")
    with pytest.raises(MissingNameErr):
        split_dataset([{"decl_nm": "a"}, {"prompt": "x"}])
    with pytest.raises(MissingNameErr):
        split_dataset([{"decl_nm": ""}])


def test_split_keeps_order_and_groups_names():
    records = [{"decl_nm": f"lemma_{i % 40}", "row": i} for i in range(400)]
    streams = split_dataset(records)
    assert sum(len(rows) for rows in streams.values()) == len(records)
    seen = {}
    for bucket, rows in streams.items():
        assert [r["row"] for r in rows] == sorted(r["row"] for r in rows)
        for row in rows:
            assert seen.setdefault(row["decl_nm"], bucket) == bucket
    manifest = split_manifest(streams)
    assert sum(manifest["counts"].values()) == 400
    assert sum(manifest["names"].values()) == 40


def test_split_file_has_no_name_leakage(tmp_path, raw_datapoints):
    examples = TaskCodec().derive_all(raw_datapoints)
    extra = [{"prompt": "TYPE p NAME", "completion": f" lemma_{i}", "task": "naming", "mix": "mix2",
              "decl_nm": f"lemma_{i}"} for i in range(200)]
    source = tmp_path / "tasks.jsonl"
    write_tasks(examples, str(source))
    with open(source, "a", encoding="utf-8") as out_file:
        for row in extra:
            out_file.write(json.dumps(row, ensure_ascii=False) + "\n")
    manifest = split_file(str(source), str(tmp_path / "out" / "pact"))

    assert set(manifest["files"]) == set(BUCKETS)
    assert sum(manifest["counts"].values()) == len(examples) + len(extra)
    names = {}
    lines = []
    for bucket, path in manifest["files"].items():
        content = open(path, encoding="utf-8").read().splitlines()
        lines.extend(content)
        names[bucket] = {json.loads(line)["decl_nm"] for line in content}
        assert len(content) == manifest["counts"][bucket]
    assert not names[TRAIN] & names[VALID]
    assert not names[TRAIN] & names[TEST]
    assert not names[VALID] & names[TEST]
    assert sorted(lines) == sorted(source.read_text(encoding="utf-8").splitlines())
    written = json.loads((tmp_path / "out" / "pact.manifest.json").read_text(encoding="utf-8"))
    assert written["counts"] == manifest["counts"]


def test_split_file_rejects_invalid_lines(tmp_path):
    source = tmp_path / "bad.jsonl"
    source.write_text('{"decl_nm": "a"}\n{oops\n', encoding="utf-8")
    with pytest.raises(SchemaErr):
        split_file(str(source), str(tmp_path / "x"))
    source.write_text('{"decl_nm": "a"}\n{"prompt": "p"}\n', encoding="utf-8")
    with pytest.raises(MissingNameErr):
        split_file(str(source), str(tmp_path / "x"))
