from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class TheoremOutcome:
    name: str
    module: str
    run: int
    status: str
    proof: 'Optional[list[str]]'
    iterations: int

    def to_dict(self) -> dict:
        return {"name": self.name, "module": self.module, "run": self.run, "status": self.status,
                "proof": self.proof, "iterations": self.iterations}
