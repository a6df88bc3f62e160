from dataclasses import dataclass
from typing import Optional

from pactlib.utility import DictEx


@dataclass(frozen=True)
class CodecConfig:
    upper_case_labels: bool = False
    premise_type_in_prompt: bool = True
    neg_ratio: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if self.neg_ratio is not None and not 0.0 <= self.neg_ratio <= 1.0:
            raise ValueError("neg_ratio must lie in [0, 1]")

    @property
    def labels(self) -> 'tuple[str, str]':
        return ("TRUE", "FALSE") if self.upper_case_labels else ("True", "False")

    @staticmethod
    def from_options(options: DictEx) -> 'CodecConfig':
        return CodecConfig(
            upper_case_labels=bool(options.upper_case_labels or False),
            premise_type_in_prompt=bool(options.premise_type_in_prompt
                                        if options.has("premise_type_in_prompt") else True),
            neg_ratio=None if options.neg_ratio is None else float(options.neg_ratio),
            seed=int(options.seed or 0))
