from dataclasses import dataclass
from typing import Optional

from ..kernel.binder_info import BinderInfo
from ..kernel.expr import Expr, lift
from ..kernel.local_binding import LocalBinding


@dataclass(frozen=True)
class SubtermContext:
    """Bound variables in scope at a subterm, outermost first, plus the child path from the root"""

    bs: 'tuple[LocalBinding, ...]' = ()
    path: 'tuple[str, ...]' = ()

    @property
    def depth(self) -> int:
        return len(self.bs)

    def push(self, name: str, type_: Expr, info: BinderInfo, step: str = "body") -> 'SubtermContext':
        return SubtermContext(self.bs + (LocalBinding(name, type_, info),), self.path + (step,))

    def step(self, selector: str) -> 'SubtermContext':
        return SubtermContext(self.bs, self.path + (selector,))

    def lookup(self, index: int) -> Optional[LocalBinding]:
        if index < 0 or index >= len(self.bs):
            return None
        return self.bs[-1 - index]

    def type_of(self, index: int) -> Optional[Expr]:
        """Type of BoundVar(index) expressed in this context"""

        binding = self.lookup(index)
        if binding is None:
            return None
        return lift(binding.type, index + 1)

    def name_of(self, index: int) -> Optional[str]:
        binding = self.lookup(index)
        return binding.name if binding else None

    def prefix(self, length: int) -> 'SubtermContext':
        return SubtermContext(self.bs[:length], ())

    @property
    def in_binder_type(self) -> bool:
        return "binder_type" in self.path

    def names(self) -> 'list[str]':
        return [b.name for b in self.bs]


EMPTY_CONTEXT = SubtermContext()
