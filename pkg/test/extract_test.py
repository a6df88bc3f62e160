import json

import pytest

from pactlib.exception import InvariantErr, SchemaErr
from pactlib.extract import (FIELDS, ExtractionConfig, PactExtractor, RawDatapoint, extract_decl_datapoints,
                             extract_environment, ingest_raw_json, premises_of, serialize_raw_json)
from pactlib.kernel import HOLE_NAME, context_from_hyps, occurs, parse_expr, substitute_hole
from pactlib.utility import DATA_DIR

RECORDED_PREMISES = ["absurd", "absurd", "decidable.not_imp", "iff.mp", "and.dcases_on",
                     "decidable.not_or_of_imp", "or.dcases_on", "em", "or.elim"]


def find(datapoints, **fields):
    for dp in datapoints:
        if all(predicate(getattr(dp, name)) if callable(predicate) else getattr(dp, name) == predicate
               for name, predicate in fields.items()):
            return dp
    raise AssertionError(f"no datapoint with {fields}")


def test_ingest_recorded_fixture(raw_datapoints):
    assert len(raw_datapoints) == 4
    assert [dp.proof_term for dp in raw_datapoints] == ["decidable.not_imp", "Q", "decidable.not_imp",
                                                        "classical.prop_decidable"]
    assert raw_datapoints[3].verbose_result.count(HOLE_NAME) == 2
    assert HOLE_NAME not in raw_datapoints[1].result


def test_serialize_keeps_strings_byte_identical(tmp_path, raw_datapoints):
    out = tmp_path / "again.jsonl"
    serialize_raw_json(raw_datapoints, str(out))
    original = [json.loads(line) for line in open(DATA_DIR / "peirce_raw.jsonl", encoding="utf-8") if line.strip()]
    written = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert written == original
    assert list(written[0]) == list(FIELDS)


@pytest.mark.parametrize("mutate, error", [
    (lambda d: d.pop("goal"), SchemaErr),
    (lambda d: d.update(extra=1), SchemaErr),
    (lambda d: d.update(hyps_mask=[True]), InvariantErr),
    (lambda d: d.update(goal_is_prop="yes"), SchemaErr),
    (lambda d: d.update(verbose_result="no hole here"), InvariantErr),
])
def test_ingest_rejects_bad_records(tmp_path, raw_datapoints, mutate, error):
    data = raw_datapoints[0].to_dict()
    mutate(data)
    path = tmp_path / "bad.jsonl"
    path.write_text(json.dumps(data, ensure_ascii=False) + "\n", encoding="utf-8")
    with pytest.raises(error):
        ingest_raw_json(str(path))


def test_ingest_reports_line_of_invalid_json(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text("\n{not json\n", encoding="utf-8")
    with pytest.raises(SchemaErr) as info:
        ingest_raw_json(str(path))
    assert info.value.data["line"] == 2


def test_premises_in_reverse_preorder(env, peirce):
    assert [name for name, _ in premises_of(peirce, env)] == RECORDED_PREMISES
    assert [name for name, _ in premises_of(peirce, env, dedup=True)].count("absurd") == 1


def test_native_extraction_matches_recorded_masks(env, peirce, raw_datapoints):
    datapoints = extract_decl_datapoints(peirce, env)
    native = [
        find(datapoints, verbose_proof_term="@decidable.not_imp P"),
        find(datapoints, proof_term="Q", verbose_result=lambda text: "@decidable.not_imp P PREDICT" in text),
        find(datapoints, verbose_proof_term="@decidable.not_imp P Q"),
        find(datapoints, proof_term="classical.prop_decidable"),
    ]
    for ours, recorded in zip(native, raw_datapoints):
        assert ours.proof_term == recorded.proof_term
        assert ours.goal == recorded.goal
        assert ours.goal_is_prop == recorded.goal_is_prop
        assert ours.decl_premises_mask == recorded.decl_premises_mask
        assert [name for name, _ in ours.decl_premises] == RECORDED_PREMISES
    for ours, recorded in zip(native[:3], raw_datapoints[:3]):
        assert [name for name, _ in ours.hyps] == ["P", "Q", "ᾰ", "ᾰ_1", "ᾰ_1"]
        assert ours.hyps_mask == recorded.hyps_mask
    assert not any(native[3].hyps_mask)
    assert native[1].next_lemma == ["Q", "Prop"]


def test_native_results_carry_one_hole(env, peirce):
    for dp in extract_decl_datapoints(peirce, env):
        assert dp.result.count(HOLE_NAME) == 1
        assert dp.verbose_result.count(HOLE_NAME) == 1
        dp.validate()


def test_hyps_mask_follows_shadowed_binders(env, peirce):
    dp = find(extract_decl_datapoints(peirce, env), proof_term="ᾰ_1",
              hyps=lambda hyps: [name for name, _ in hyps] == ["P", "Q", "ᾰ", "ᾰ_1", "ᾰ_1"])
    assert dp.hyps_mask == [False, False, False, False, True]


def test_hyps_mask_agrees_with_occurs(env):
    for dp in extract_environment(env, workers=2):
        ctx = context_from_hyps(dp.verbose_hyps, env)
        filler = parse_expr(dp.verbose_proof_term, env, ctx)
        names = [name for name, _ in dp.hyps]
        for i, name in enumerate(names):
            if name not in names[i + 1:]:
                assert dp.hyps_mask[i] == occurs(name, filler, ctx), (dp.decl_nm, dp.proof_term, name)


@pytest.mark.parametrize("max_depth", [1, 2, 4])
def test_depth_limit_keeps_the_hole(env, max_depth):
    datapoints = extract_environment(env, ExtractionConfig(max_depth=max_depth), workers=2)
    assert any("…" in dp.result for dp in datapoints)
    for dp in datapoints:
        assert dp.result.count(HOLE_NAME) == 1
        assert dp.verbose_result.count(HOLE_NAME) == 1
        dp.validate()


def test_depth_limited_records_ingest(tmp_path, env, peirce):
    path = str(tmp_path / "raw.jsonl")
    records = extract_decl_datapoints(peirce, env, ExtractionConfig(max_depth=4))
    serialize_raw_json(records, path)
    assert [dp.to_dict() for dp in ingest_raw_json(path)] == [dp.to_dict() for dp in records]


def test_mask_round_trip_on_every_theorem(env):
    datapoints = extract_environment(env, workers=2)
    theorems = {decl.name: decl for decl in env.theorems()}
    assert len(theorems) >= 10
    failures = []
    for dp in datapoints:
        masked = parse_expr(dp.verbose_result, env)
        filler = parse_expr(dp.verbose_proof_term, env, context_from_hyps(dp.verbose_hyps, env))
        if substitute_hole(masked, filler) != theorems[dp.decl_nm].value:
            failures.append((dp.decl_nm, dp.verbose_proof_term))
    assert failures == []


def test_extraction_order_follows_environment(env):
    datapoints = extract_environment(env, workers=3)
    order = {decl.name: decl.order_index for decl in env}
    indexes = [order[dp.decl_nm] for dp in datapoints]
    assert indexes == sorted(indexes)


def test_config_switches(env, peirce):
    everything = extract_decl_datapoints(peirce, env)
    larger = extract_decl_datapoints(peirce, env, ExtractionConfig(min_subterm_size=3))
    assert 0 < len(larger) < len(everything)
    plain = extract_decl_datapoints(peirce, env, ExtractionConfig(emit_verbose=False))
    assert all(dp.verbose_result == dp.result for dp in plain)
    shallow = PactExtractor(env, ExtractionConfig(max_depth=2)).extract(peirce)
    assert any("…" in dp.result for dp in shallow)


def test_config_validation():
    with pytest.raises(ValueError):
        ExtractionConfig(min_subterm_size=-1)
    with pytest.raises(ValueError):
        ExtractionConfig(max_depth=0)


def test_raw_datapoint_round_trips_through_dict(raw_datapoints):
    dp = raw_datapoints[2]
    assert RawDatapoint.from_dict(dp.to_dict()) == dp
