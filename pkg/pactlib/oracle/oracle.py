from abc import ABC, abstractmethod


class Oracle(ABC):
    """Maps a serialized tactic state to scored tactic candidates, best first"""

    @abstractmethod
    async def query_async(self, tactic_state: str, n: int) -> 'list[tuple[str, float]]':
        """At most n (candidate, score) pairs sorted by decreasing score"""

    def reseed(self, run_index: int):
        """Evaluation runs call this before each run; deterministic oracles ignore it"""

    async def close_async(self):
        """Release held resources"""
