from dataclasses import dataclass, field

from pactlib.exception import InvariantErr


@dataclass(frozen=True)
class TacticStep:
    """A recorded human proof step: the tactic state before the step and the command run on it"""

    goals: 'tuple[tuple[tuple[tuple[str, str], ...], str], ...]'
    command: str
    decl_nm: str = field(default="")

    def __post_init__(self):
        if not self.goals:
            raise InvariantErr("tactic step without goals")
        if not self.command.strip():
            raise InvariantErr("tactic step with empty command")

    @staticmethod
    def create(goals: 'list', command: str, decl_nm: str = "") -> 'TacticStep':
        """Build from nested lists, as read back from JSON"""

        frozen = tuple((tuple((str(n), str(t)) for n, t in hyps), str(target)) for hyps, target in goals)
        return TacticStep(frozen, command, decl_nm)
