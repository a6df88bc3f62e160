import json
from dataclasses import dataclass

from pactlib.exception import SchemaErr


@dataclass(frozen=True)
class NamingEval:
    """Ground-truth name and model guesses, best first"""

    truth: str
    candidates: 'tuple[tuple[str, float], ...]'

    @staticmethod
    def from_candidates(truth: str, candidates: 'list[tuple[str, float]]') -> 'NamingEval':
        ordered = sorted(((str(name), float(score)) for name, score in candidates), key=lambda c: -c[1])
        return NamingEval(truth, tuple(ordered))

    def hit_at(self, k: int) -> bool:
        return any(name == self.truth for name, _ in self.candidates[:k])


def topk_accuracy(evals: 'list[NamingEval]', ks: 'list[int]') -> 'dict[int, float]':
    """Share of rows whose truth appears among the first K guesses, per K"""

    ret_val = {}
    for k in ks:
        if k < 1:
            raise ValueError("K must be positive")
        ret_val[k] = sum(1 for row in evals if row.hit_at(k)) / len(evals) if evals else 0.0
    return ret_val


def load_naming_evals(path: str) -> 'list[NamingEval]':
    """JSON-Lines rows `{"truth": name, "candidates": [[name, logprob], ...]}`"""

    ret_val = []
    with open(path, "r", encoding="utf-8") as in_file:
        for line_no, line in enumerate(in_file, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
                candidates = [(c["text"], c["logprob"]) if isinstance(c, dict) else (c[0], c[1])
                              for c in row["candidates"]]
                ret_val.append(NamingEval.from_candidates(row["truth"], candidates))
            except (ValueError, KeyError, IndexError, TypeError) as ex:
                raise SchemaErr("candidates", line_no, f"is malformed ({ex})") from ex
    return ret_val
