from dataclasses import dataclass, field

from pactlib.search import split_chain
from ..eval.theorem_outcome import TheoremOutcome

PROVED = "proved"


@dataclass
class EvalReport:
    per_run: 'list[tuple[int, int]]' = field(default_factory=list)
    pass_rate: float = 0.0
    per_module: 'dict[str, tuple[int, int]]' = field(default_factory=dict)
    semicolon_histogram: 'dict[int, int]' = field(default_factory=dict)
    mean_chain_length: float = 0.0
    outcomes: 'list[TheoremOutcome]' = field(default_factory=list)
    interrupted: bool = False

    @staticmethod
    def chain_length(tactic: str) -> int:
        """Number of top-level `;` in a tactic"""

        return len(split_chain(tactic)) - 1

    @staticmethod
    def aggregate(outcomes: 'list[TheoremOutcome]', runs: int, interrupted: bool = False) -> 'EvalReport':
        ret_val = EvalReport(outcomes=list(outcomes), interrupted=interrupted)
        for run in range(runs):
            in_run = [o for o in outcomes if o.run == run]
            ret_val.per_run.append((sum(1 for o in in_run if o.status == PROVED), len(in_run)))
        rates = [proved / attempted if attempted else 0.0 for proved, attempted in ret_val.per_run]
        ret_val.pass_rate = sum(rates) / len(rates) if rates else 0.0
        modules: 'dict[str, list[int]]' = dict()
        for outcome in outcomes:
            counts = modules.setdefault(outcome.module, [0, 0])
            counts[1] += 1
            if outcome.status == PROVED:
                counts[0] += 1
        ret_val.per_module = {module: (counts[0], counts[1]) for module, counts in sorted(modules.items())}
        lengths = [EvalReport.chain_length(tactic)
                   for outcome in outcomes if outcome.status == PROVED
                   for tactic in outcome.proof or ()]
        lengths = [length for length in lengths if length > 0]
        for length in lengths:
            ret_val.semicolon_histogram[length] = ret_val.semicolon_histogram.get(length, 0) + 1
        ret_val.semicolon_histogram = dict(sorted(ret_val.semicolon_histogram.items()))
        ret_val.mean_chain_length = sum(lengths) / len(lengths) if lengths else 0.0
        return ret_val

    def to_dict(self) -> dict:
        return {
            "perRun": [{"proved": proved, "attempted": attempted} for proved, attempted in self.per_run],
            "passRate": self.pass_rate,
            "perModule": {module: {"proved": proved, "attempted": attempted}
                          for module, (proved, attempted) in self.per_module.items()},
            "semicolonHistogram": {str(length): count for length, count in self.semicolon_histogram.items()},
            "meanChainLength": self.mean_chain_length,
            "interrupted": self.interrupted,
            "theorems": [outcome.to_dict() for outcome in self.outcomes],
        }
