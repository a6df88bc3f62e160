from dataclasses import dataclass, field
from typing import Optional

from pactlib.exception import InvariantErr, SchemaErr
from pactlib.kernel import HOLE_NAME

FIELDS = ("decl_nm", "decl_tp", "hyps", "hyps_mask", "decl_premises", "decl_premises_mask", "goal",
          "proof_term", "result", "next_lemma", "goal_is_prop", "verbose_proof_term", "verbose_goal",
          "verbose_result")
_STRING_FIELDS = ("decl_nm", "decl_tp", "goal", "proof_term", "result", "verbose_proof_term", "verbose_goal",
                  "verbose_result")
_PAIR_LIST_FIELDS = ("hyps", "decl_premises")
_MASK_FIELDS = ("hyps_mask", "decl_premises_mask")


def hole_count(text: str) -> int:
    return text.count(HOLE_NAME)


@dataclass
class RawDatapoint:
    """One record per proof subterm, laid out like the published datapoints"""

    decl_nm: str
    decl_tp: str
    hyps: 'list[list[str]]'
    hyps_mask: 'list[bool]'
    decl_premises: 'list[list[str]]'
    decl_premises_mask: 'list[bool]'
    goal: str
    proof_term: str
    result: str
    next_lemma: 'Optional[list[str]]'
    goal_is_prop: bool
    verbose_proof_term: str
    verbose_goal: str
    verbose_result: str
    # hypothesis types printed in verbose mode; produced by native extraction only, never serialized
    verbose_hyps: 'Optional[list[list[str]]]' = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in FIELDS}

    def validate(self, line: int = None):
        if len(self.hyps_mask) != len(self.hyps):
            raise InvariantErr(f"hyps_mask has {len(self.hyps_mask)} entries for {len(self.hyps)} hyps", line)
        if len(self.decl_premises_mask) != len(self.decl_premises):
            raise InvariantErr(
                f"decl_premises_mask has {len(self.decl_premises_mask)} entries for "
                f"{len(self.decl_premises)} premises", line)
        verbose_holes = hole_count(self.verbose_result)
        if verbose_holes == 0:
            raise InvariantErr("verbose_result has no PREDICT hole", line)
        if hole_count(self.result) > verbose_holes:
            raise InvariantErr(f"result has {hole_count(self.result)} PREDICT holes, verbose_result {verbose_holes}",
                               line)

    @staticmethod
    def from_dict(data: dict, line: int = None) -> 'RawDatapoint':
        """Build from a decoded JSON object, enforcing the exact field set"""

        if not isinstance(data, dict):
            raise SchemaErr("record", line, "is not a JSON object")
        for name in FIELDS:
            if name not in data:
                raise SchemaErr(name, line)
        for name in data:
            if name not in FIELDS:
                raise SchemaErr(name, line, "is not part of the schema")
        for name in _STRING_FIELDS:
            if not isinstance(data[name], str):
                raise SchemaErr(name, line, "must be a string")
        for name in _PAIR_LIST_FIELDS:
            if not RawDatapoint.__is_pair_list(data[name]):
                raise SchemaErr(name, line, "must be a list of [name, type] pairs")
        for name in _MASK_FIELDS:
            value = data[name]
            if not isinstance(value, list) or not all(isinstance(v, bool) for v in value):
                raise SchemaErr(name, line, "must be a list of booleans")
        if not isinstance(data["goal_is_prop"], bool):
            raise SchemaErr("goal_is_prop", line, "must be a boolean")
        next_lemma = data["next_lemma"]
        if next_lemma is not None and not RawDatapoint.__is_pair(next_lemma):
            raise SchemaErr("next_lemma", line, "must be a [name, type] pair or null")
        ret_val = RawDatapoint(**{name: data[name] for name in FIELDS})
        ret_val.validate(line)
        return ret_val

    @staticmethod
    def __is_pair(value) -> bool:
        return isinstance(value, list) and len(value) == 2 and all(isinstance(v, str) for v in value)

    @staticmethod
    def __is_pair_list(value) -> bool:
        return isinstance(value, list) and all(RawDatapoint.__is_pair(v) for v in value)
