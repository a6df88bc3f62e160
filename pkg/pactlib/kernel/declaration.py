from dataclasses import dataclass
from typing import Optional

from ..kernel.expr import Expr


@dataclass(frozen=True)
class Declaration:
    name: str
    type: Expr
    value: Optional[Expr] = None
    order_index: int = 0
    module_path: str = ""

    @property
    def is_theorem(self) -> bool:
        return self.value is not None

    @property
    def top_module(self) -> str:
        """First component of the module path"""

        if not self.module_path:
            return ""
        return self.module_path.replace("\\", "/").split("/")[0].split(".")[0]
