from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class SearchNode:
    state: Any
    depth: int
    score: float
    seq: int
    parent: 'Optional[SearchNode]' = field(default=None, repr=False)
    tactic_from_parent: Optional[str] = None

    def sort_key(self) -> 'tuple[float, int]':
        """Heap key: higher score first, earlier insertion breaks ties"""

        return (-self.score, self.seq)

    def proof(self) -> 'list[str]':
        ret_val = []
        node = self
        while node.parent is not None:
            ret_val.append(node.tactic_from_parent)
            node = node.parent
        ret_val.reverse()
        return ret_val
