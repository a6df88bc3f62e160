from abc import ABC, abstractmethod
from typing import Any, Optional


class TacticRunner(ABC):
    """Applies tactic strings to opaque tactic states for the search loop"""

    @abstractmethod
    def run(self, state: Any, command: str, timeout: Optional[float] = None) -> Any:
        """New state, or a TacticErr when the command does not advance the proof"""

    @abstractmethod
    def serialize(self, state: Any) -> str:
        """The string the oracle sees"""

    @abstractmethod
    def is_solved(self, state: Any) -> bool:
        """True when no goals remain"""
