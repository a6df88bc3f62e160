from dataclasses import dataclass

from ..kernel.binder_info import BinderInfo
from ..kernel.expr import Expr


@dataclass(frozen=True)
class LocalBinding:
    """Bound variable in scope: its display name, its type (in the context before it) and binder info"""

    name: str
    type: Expr
    binder_info: BinderInfo = BinderInfo.EXPLICIT
