import json
import random
from itertools import groupby
from pathlib import Path
from typing import Iterable, Iterator, Optional

from pactlib.exception import EmptyNameErr, InvariantErr
from pactlib.extract import RawDatapoint
from pactlib.logger import ILogger, NoLogger
from ..codec.codec_config import CodecConfig
from ..codec.tactic_step import TacticStep
from ..codec.task_example import (LOCAL_CLS, NAMING, NEXT_LEMMA, PREMISE_CLS, PROOF_TERM, PROOFSTEP, PT_ELAB,
                                  SKIP_PROOF, TS_ELAB, TYPE_PREDICTION, TaskExample)

NO_LOCALS = "none"


def render_hyps(hyps: 'Iterable[tuple[str, str]]') -> str:
    """Group consecutive hypotheses sharing a type string: `P Q : Prop, h : P`"""

    groups = []
    for type_text, members in groupby(hyps, key=lambda hyp: hyp[1]):
        groups.append(f"{' '.join(name for name, _ in members)} : {type_text}")
    return ", ".join(groups)


def render_goal(hyps: 'Iterable[tuple[str, str]]', target: str) -> str:
    rendered = render_hyps(hyps)
    return f"{rendered} ⊢ {target}" if rendered else f"⊢ {target}"


def render_tactic_state(goals: 'Iterable[tuple[Iterable[tuple[str, str]], str]]') -> str:
    return "\n".join(render_goal(hyps, target) for hyps, target in goals)


def encode_proofstep(step: TacticStep) -> TaskExample:
    return TaskExample(f"GOAL {render_tactic_state(step.goals)} PROOFSTEP", f" {step.command}", PROOFSTEP,
                       step.decl_nm)


def encode_naming(decl_nm: str, decl_tp: str) -> TaskExample:
    if not decl_nm:
        raise EmptyNameErr()
    if not decl_tp:
        raise InvariantErr(f"declaration '{decl_nm}' has an empty type")
    return TaskExample(f"TYPE {decl_tp} NAME", f" {decl_nm}", NAMING, decl_nm)


class TaskCodec:
    """Turn raw datapoints into the prompt/completion examples of every co-training task"""

    def __init__(self, cfg: CodecConfig = None, logger: ILogger = None):
        self.cfg = cfg or CodecConfig()
        self.logger = logger or NoLogger()

    def derive_tasks(self, dp: RawDatapoint) -> 'list[TaskExample]':
        ts = render_goal(dp.hyps, dp.goal)
        name = dp.decl_nm
        ret_val = []
        if dp.next_lemma is not None:
            ret_val.append(TaskExample(f"GOAL {ts} NEXTLEMMA", f" apply ({dp.next_lemma[0]})", NEXT_LEMMA, name))
        ret_val.append(TaskExample(f"GOAL {ts} PROOFTERM", f" exact ({dp.proof_term})", PROOF_TERM, name))
        ret_val.append(TaskExample(f"RESULT {dp.result} SKIPPROOF", f" {dp.proof_term}", SKIP_PROOF, name))
        ret_val.append(TaskExample(f"RESULT {dp.result} PREDICTTYPE", f" {dp.goal}", TYPE_PREDICTION, name))
        verbose_ts = render_goal(dp.verbose_hyps if dp.verbose_hyps is not None else dp.hyps, dp.verbose_goal)
        ret_val.append(TaskExample(f"GOAL {ts} ELABGOAL", f" {verbose_ts}", TS_ELAB, name))
        ret_val.append(TaskExample(f"PROOFTERM {dp.proof_term} ELABPROOFTERM", f" {dp.verbose_proof_term}",
                                   PT_ELAB, name))
        ret_val.extend(self.__premise_examples(dp, ts))
        used = [hyp_name for (hyp_name, _), used in zip(dp.hyps, dp.hyps_mask) if used]
        ret_val.append(TaskExample(f"GOAL {ts} CLASSIFYLOCALS", f" {', '.join(used) if used else NO_LOCALS}",
                                   LOCAL_CLS, name))
        return ret_val

    def __premise_examples(self, dp: RawDatapoint, ts: str) -> 'Iterator[TaskExample]':
        positive, negative = self.cfg.labels
        rng = None
        if self.cfg.neg_ratio is not None:
            rng = random.Random(f"{self.cfg.seed}:{dp.decl_nm}:{dp.result}")
        for (premise, type_text), used in zip(dp.decl_premises, dp.decl_premises_mask):
            if rng is not None and not used and rng.random() >= self.cfg.neg_ratio:
                continue
            subject = f"{premise} {type_text}" if self.cfg.premise_type_in_prompt else premise
            yield TaskExample(f"GOAL {ts} CLASSIFYPREMISE {subject}", f" {positive if used else negative}",
                              PREMISE_CLS, dp.decl_nm)

    def derive_all(self, datapoints: 'Iterable[RawDatapoint]',
                   steps: 'Optional[Iterable[TacticStep]]' = None) -> 'list[TaskExample]':
        """Proof steps first, then one naming example per declaration followed by its per-datapoint tasks"""

        ret_val = [encode_proofstep(step) for step in steps or ()]
        named = set()
        for dp in datapoints:
            if dp.decl_nm not in named:
                named.add(dp.decl_nm)
                ret_val.append(encode_naming(dp.decl_nm, dp.decl_tp))
            ret_val.extend(self.derive_tasks(dp))
        self.logger.info("tasks.derived", declarations=len(named), examples=len(ret_val))
        return ret_val


def derive_tasks(dp: RawDatapoint, cfg: CodecConfig = None) -> 'list[TaskExample]':
    return TaskCodec(cfg).derive_tasks(dp)


def write_tasks(examples: 'Iterable[TaskExample]', path: str, concat: bool = False) -> int:
    count = 0
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as out_file:
        for example in examples:
            out_file.write(json.dumps(example.to_dict(concat), ensure_ascii=False) + "\n")
            count += 1
    return count


def read_tasks(path: str) -> 'list[dict]':
    with open(path, "r", encoding="utf-8") as in_file:
        return [json.loads(line) for line in in_file if line.strip()]
