from dataclasses import dataclass

from pactlib.kernel import Expr, FreeVar


@dataclass(frozen=True)
class Goal:
    """Hypotheses are local constants; a later hypothesis type may mention earlier ones"""

    hyps: 'tuple[FreeVar, ...]'
    target: Expr

    def find_hyp(self, name: str) -> 'FreeVar|None':
        for hyp in reversed(self.hyps):
            if hyp.name == name:
                return hyp
        return None

    def with_target(self, target: Expr) -> 'Goal':
        return Goal(self.hyps, target)

    def add_hyp(self, hyp: FreeVar, target: Expr) -> 'Goal':
        return Goal(self.hyps + (hyp,), target)
