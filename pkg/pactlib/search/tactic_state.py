from dataclasses import dataclass
from typing import Optional

from ..search.goal import Goal


@dataclass(frozen=True)
class TacticState:
    goals: 'tuple[Goal, ...]'
    env_cutoff: Optional[int] = None

    @property
    def is_solved(self) -> bool:
        return not self.goals

    def replace_first(self, goals: 'list[Goal]') -> 'TacticState':
        """New state with the first goal replaced by goals, order preserved"""

        return TacticState(tuple(goals) + self.goals[1:], self.env_cutoff)
