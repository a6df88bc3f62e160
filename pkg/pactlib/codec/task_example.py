from dataclasses import dataclass

PROOFSTEP = "proofstep"
NEXT_LEMMA = "next_lemma"
PROOF_TERM = "proof_term"
SKIP_PROOF = "skip_proof"
TYPE_PREDICTION = "type_prediction"
TS_ELAB = "ts_elab"
PT_ELAB = "pt_elab"
PREMISE_CLS = "premise_cls"
LOCAL_CLS = "local_cls"
NAMING = "naming"

MIX_TACTIC = "tactic"
MIX_1 = "mix1"
MIX_2 = "mix2"

TASK_MIX = {
    PROOFSTEP: MIX_TACTIC,
    NEXT_LEMMA: MIX_1,
    PROOF_TERM: MIX_1,
    SKIP_PROOF: MIX_2,
    TYPE_PREDICTION: MIX_2,
    TS_ELAB: MIX_2,
    PT_ELAB: MIX_2,
    PREMISE_CLS: MIX_2,
    LOCAL_CLS: MIX_2,
    NAMING: MIX_2,
}

TASK_KEYWORD = {
    PROOFSTEP: "PROOFSTEP",
    NEXT_LEMMA: "NEXTLEMMA",
    PROOF_TERM: "PROOFTERM",
    SKIP_PROOF: "SKIPPROOF",
    TYPE_PREDICTION: "PREDICTTYPE",
    TS_ELAB: "ELABGOAL",
    PT_ELAB: "ELABPROOFTERM",
    PREMISE_CLS: "CLASSIFYPREMISE",
    LOCAL_CLS: "CLASSIFYLOCALS",
    NAMING: "NAME",
}

KEYWORDS = frozenset(TASK_KEYWORD.values())


def prompt_keywords(prompt: str) -> 'list[str]':
    """Task keywords found in a prompt; the leading section label is not counted"""

    return [token for token in prompt.split()[1:] if token in KEYWORDS]


@dataclass(frozen=True)
class TaskExample:
    prompt: str
    completion: str
    task: str
    decl_nm: str

    def __post_init__(self):
        if self.task not in TASK_MIX:
            raise ValueError(f"unknown task '{self.task}'")

    @property
    def mix(self) -> str:
        return TASK_MIX[self.task]

    @property
    def keyword(self) -> str:
        return TASK_KEYWORD[self.task]

    def has_valid_keywords(self) -> bool:
        return prompt_keywords(self.prompt) == [self.keyword]

    def to_dict(self, concat: bool = False) -> dict:
        if concat:
            return {"text": self.prompt + self.completion, "task": self.task, "mix": self.mix,
                    "decl_nm": self.decl_nm}
        return {"prompt": self.prompt, "completion": self.completion, "task": self.task, "mix": self.mix,
                "decl_nm": self.decl_nm}
