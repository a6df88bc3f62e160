from dataclasses import dataclass, field
from typing import Optional

from ..search.search_status import SearchStatus


@dataclass
class SearchResult:
    status: SearchStatus
    proof: 'Optional[list[str]]'
    iterations: int
    nodes_expanded: int
    wall_time: float
    # serialized states in expansion order
    trace: 'list[str]' = field(default_factory=list, repr=False)
    max_queue_size: int = 0
    max_depth_expanded: int = 0

    @property
    def is_proved(self) -> bool:
        return self.status is SearchStatus.PROVED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "proof": self.proof,
            "iterations": self.iterations,
            "nodesExpanded": self.nodes_expanded,
            "wallTime": round(self.wall_time, 6),
        }
