from dataclasses import dataclass, field

from ..kernel.binder_info import BinderInfo
from ..kernel.sort_level import SortLevel

HOLE_NAME = "PREDICT"
ELLIPSIS_NAME = "…"
ARROW_BINDER_NAME = "ᾰ"


class Expr:
    """Node of the expression tree; every concrete node is an immutable dataclass"""

    __slots__ = ()


@dataclass(frozen=True)
class BoundVar(Expr):
    """de Bruijn index: 0 is the innermost enclosing binder"""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("negative de Bruijn index")


@dataclass(frozen=True)
class FreeVar(Expr):
    """Local constant (hypothesis) carrying its own type"""

    name: str
    type: Expr


@dataclass(frozen=True)
class Const(Expr):
    name: str


@dataclass(frozen=True)
class Sort(Expr):
    level: SortLevel


@dataclass(frozen=True)
class App(Expr):
    fn: Expr
    arg: Expr


@dataclass(frozen=True)
class Lam(Expr):
    binder_name: str = field(compare=False)
    binder_info: BinderInfo
    binder_type: Expr
    body: Expr


@dataclass(frozen=True)
class Pi(Expr):
    binder_name: str = field(compare=False)
    binder_info: BinderInfo
    binder_type: Expr
    body: Expr


@dataclass(frozen=True)
class MetaVar(Expr):
    """Placeholder solved by the tactic elaborator"""

    id: int


PROP = Sort(SortLevel.PROP)
TYPE = Sort(SortLevel.TYPE)
HOLE = Const(HOLE_NAME)
ELLIPSIS = Const(ELLIPSIS_NAME)


def is_binder(e: Expr) -> bool:
    return isinstance(e, (Lam, Pi))


def mk_app(fn: Expr, args: 'list[Expr]') -> Expr:
    for arg in args:
        fn = App(fn, arg)
    return fn


def get_app_fn(e: Expr) -> Expr:
    while isinstance(e, App):
        e = e.fn
    return e


def get_app_args(e: Expr) -> 'tuple[Expr, list[Expr]]':
    """Split an application spine into its head and arguments"""

    args = []
    while isinstance(e, App):
        args.append(e.arg)
        e = e.fn
    args.reverse()
    return e, args


def lift(e: Expr, amount: int, cutoff: int = 0) -> Expr:
    """Shift loose bound variables >= cutoff by amount"""

    if amount == 0 or not has_loose_bvars(e, cutoff):
        return e
    if isinstance(e, BoundVar):
        return BoundVar(e.index + amount) if e.index >= cutoff else e
    if isinstance(e, App):
        return App(lift(e.fn, amount, cutoff), lift(e.arg, amount, cutoff))
    if isinstance(e, Lam):
        return Lam(e.binder_name, e.binder_info, lift(e.binder_type, amount, cutoff), lift(e.body, amount, cutoff + 1))
    if isinstance(e, Pi):
        return Pi(e.binder_name, e.binder_info, lift(e.binder_type, amount, cutoff), lift(e.body, amount, cutoff + 1))
    return e


def instantiate(body: Expr, value: Expr) -> Expr:
    """Replace BoundVar 0 of body by value, lowering the other loose indices"""

    return _instantiate(body, value, 0)


def _instantiate(e: Expr, value: Expr, depth: int) -> Expr:
    if not has_loose_bvars(e, depth):
        return e
    if isinstance(e, BoundVar):
        if e.index == depth:
            return lift(value, depth)
        if e.index > depth:
            return BoundVar(e.index - 1)
        return e
    if isinstance(e, App):
        return App(_instantiate(e.fn, value, depth), _instantiate(e.arg, value, depth))
    if isinstance(e, Lam):
        return Lam(e.binder_name, e.binder_info, _instantiate(e.binder_type, value, depth), _instantiate(e.body, value, depth + 1))
    if isinstance(e, Pi):
        return Pi(e.binder_name, e.binder_info, _instantiate(e.binder_type, value, depth), _instantiate(e.body, value, depth + 1))
    return e


def abstract(e: Expr, target: Expr, depth: int = 0) -> Expr:
    """Replace every occurrence of target (a closed expression) by BoundVar(depth)"""

    if e == target:
        return BoundVar(depth)
    if isinstance(e, App):
        return App(abstract(e.fn, target, depth), abstract(e.arg, target, depth))
    if isinstance(e, Lam):
        return Lam(e.binder_name, e.binder_info, abstract(e.binder_type, target, depth), abstract(e.body, target, depth + 1))
    if isinstance(e, Pi):
        return Pi(e.binder_name, e.binder_info, abstract(e.binder_type, target, depth), abstract(e.body, target, depth + 1))
    return e


def has_loose_bvars(e: Expr, depth: int = 0) -> bool:
    """True when e mentions a bound variable with index >= depth"""

    if isinstance(e, BoundVar):
        return e.index >= depth
    if isinstance(e, App):
        return has_loose_bvars(e.fn, depth) or has_loose_bvars(e.arg, depth)
    if isinstance(e, (Lam, Pi)):
        return has_loose_bvars(e.binder_type, depth) or has_loose_bvars(e.body, depth + 1)
    return False


def has_loose_bvar(e: Expr, index: int) -> bool:
    """True when BoundVar(index) occurs free in e"""

    if isinstance(e, BoundVar):
        return e.index == index
    if isinstance(e, App):
        return has_loose_bvar(e.fn, index) or has_loose_bvar(e.arg, index)
    if isinstance(e, (Lam, Pi)):
        return has_loose_bvar(e.binder_type, index) or has_loose_bvar(e.body, index + 1)
    return False


def has_metavars(e: Expr) -> bool:
    if isinstance(e, MetaVar):
        return True
    if isinstance(e, FreeVar):
        return has_metavars(e.type)
    if isinstance(e, App):
        return has_metavars(e.fn) or has_metavars(e.arg)
    if isinstance(e, (Lam, Pi)):
        return has_metavars(e.binder_type) or has_metavars(e.body)
    return False


def const_names(e: Expr) -> 'list[str]':
    """Constant names in pre-order, duplicates kept"""

    ret_val = []
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Const):
            ret_val.append(node.name)
        elif isinstance(node, App):
            stack.append(node.arg)
            stack.append(node.fn)
        elif isinstance(node, (Lam, Pi)):
            stack.append(node.body)
            stack.append(node.binder_type)
    return ret_val


def count_const(e: Expr, name: str) -> int:
    return sum(1 for n in const_names(e) if n == name)


def expr_size(e: Expr) -> int:
    if isinstance(e, App):
        return 1 + expr_size(e.fn) + expr_size(e.arg)
    if isinstance(e, (Lam, Pi)):
        return 1 + expr_size(e.binder_type) + expr_size(e.body)
    return 1


def expr_depth(e: Expr) -> int:
    """Nesting depth counting an application spine as one level"""

    if isinstance(e, App):
        head, args = get_app_args(e)
        return 1 + max([expr_depth(head)] + [expr_depth(a) for a in args])
    if isinstance(e, (Lam, Pi)):
        return 1 + max(expr_depth(e.binder_type), expr_depth(e.body))
    return 1


def truncate(e: Expr, max_depth: int, keep: str = None) -> Expr:
    """Replace every subtree nested deeper than max_depth by the ellipsis token.
    Subtrees holding the constant `keep` are never collapsed, only their other branches"""

    on_path = keep is not None and keep in const_names(e)
    if max_depth <= 0 and not on_path:
        return ELLIPSIS
    if isinstance(e, App):
        if max_depth <= 1 and not on_path:
            return ELLIPSIS
        head, args = get_app_args(e)
        return mk_app(truncate(head, max_depth - 1, keep), [truncate(a, max_depth - 1, keep) for a in args])
    if isinstance(e, (Lam, Pi)):
        if max_depth <= 1 and not on_path:
            return ELLIPSIS
        return type(e)(e.binder_name, e.binder_info, truncate(e.binder_type, max_depth - 1, keep),
                       truncate(e.body, max_depth - 1, keep))
    return e
