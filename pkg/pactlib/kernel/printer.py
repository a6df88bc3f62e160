from typing import Optional

from pactlib.exception import PactErr

from ..kernel.binder_info import BinderInfo
from ..kernel.environment import Environment
from ..kernel.expr import (App, BoundVar, Const, Expr, FreeVar, Lam, MetaVar, Pi, Sort, count_const,
                           get_app_args, has_loose_bvar, truncate, HOLE_NAME)
from ..kernel.notation import (APP_PRECEDENCE, ARROW_PRECEDENCE, ATOM_PRECEDENCE, BINDER_PRECEDENCE, EQ,
                               EQ_PRECEDENCE, INFIX, PREFIX)
from ..kernel.sort_level import SortLevel
from ..kernel.subterm_context import EMPTY_CONTEXT, SubtermContext

PRETTY = "pretty"
VERBOSE = "verbose"


class ExprPrinter:
    """Render expressions in pretty (implicit arguments elided) or verbose (fully explicit) mode"""

    def __init__(self, mode: str = PRETTY, env: Environment = None):
        if mode not in (PRETTY, VERBOSE):
            raise ValueError(f"unknown print mode '{mode}'")
        self.mode = mode
        self.env = env
        self.__checker = None
        if env is not None:
            from ..kernel.type_checker import TypeChecker
            self.__checker = TypeChecker(env)

    def print(self, e: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> str:
        return self.__fmt(e, ctx)[0]

    def __wrap(self, e: Expr, ctx: SubtermContext, min_prec: int) -> str:
        text, prec = self.__fmt(e, ctx)
        return f"({text})" if prec < min_prec else text

    def __fmt(self, e: Expr, ctx: SubtermContext) -> 'tuple[str, int]':
        if isinstance(e, BoundVar):
            name = ctx.name_of(e.index)
            return (name if name is not None else f"#{e.index}", ATOM_PRECEDENCE)
        if isinstance(e, FreeVar):
            return (e.name, ATOM_PRECEDENCE)
        if isinstance(e, Const):
            if self.mode == VERBOSE and e.name != HOLE_NAME and self.__has_non_explicit(self.__telescope(e, ctx)):
                return (f"@{e.name}", ATOM_PRECEDENCE)
            return (e.name, ATOM_PRECEDENCE)
        if isinstance(e, Sort):
            return ("Prop" if e.level == SortLevel.PROP else "Type", ATOM_PRECEDENCE)
        if isinstance(e, MetaVar):
            return (f"?m_{e.id}", ATOM_PRECEDENCE)
        if isinstance(e, App):
            return self.__fmt_app(e, ctx)
        if isinstance(e, Lam):
            return self.__fmt_lambda(e, ctx)
        if isinstance(e, Pi):
            return self.__fmt_pi(e, ctx)
        raise TypeError(f"unexpected expression node {type(e).__name__}")

    # applications

    def __telescope(self, head: Expr, ctx: SubtermContext) -> Optional[Expr]:
        if isinstance(head, Const):
            decl = self.env.get(head.name) if self.env is not None else None
            return decl.type if decl is not None else None
        if isinstance(head, FreeVar):
            return head.type
        if isinstance(head, BoundVar):
            return ctx.type_of(head.index)
        return None

    @staticmethod
    def __name_of(head: Expr, ctx: SubtermContext) -> str:
        if isinstance(head, BoundVar):
            name = ctx.name_of(head.index)
            return name if name is not None else f"#{head.index}"
        return head.name

    @staticmethod
    def __has_non_explicit(telescope: Optional[Expr]) -> bool:
        while isinstance(telescope, Pi):
            if telescope.binder_info is not BinderInfo.EXPLICIT:
                return True
            telescope = telescope.body
        return False

    @staticmethod
    def __arg_infos(telescope: Optional[Expr], count: int) -> 'list[BinderInfo]':
        ret_val = []
        for _ in range(count):
            if isinstance(telescope, Pi):
                ret_val.append(telescope.binder_info)
                telescope = telescope.body
            else:
                ret_val.append(BinderInfo.EXPLICIT)
        return ret_val

    def __fmt_app(self, e: App, ctx: SubtermContext) -> 'tuple[str, int]':
        head, args = get_app_args(e)
        if isinstance(head, Const):
            notation = self.__fmt_notation(head.name, args, ctx)
            if notation is not None:
                return notation
        telescope = self.__telescope(head, ctx)
        explicit_mode = self.mode == VERBOSE
        shown = args
        if not explicit_mode:
            infos = self.__arg_infos(telescope, len(args))
            shown = [a for a, info in zip(args, infos) if info is BinderInfo.EXPLICIT]
            hidden = [a for a, info in zip(args, infos) if info is not BinderInfo.EXPLICIT]
            if any(count_const(a, HOLE_NAME) for a in hidden):
                explicit_mode = True
                shown = args
        if explicit_mode and self.__has_non_explicit(telescope):
            head_text = f"@{self.__name_of(head, ctx)}"
        else:
            head_text = self.__wrap(head, ctx, APP_PRECEDENCE)
        if not shown:
            return (head_text, ATOM_PRECEDENCE)
        parts = [head_text] + [self.__wrap(a, ctx, APP_PRECEDENCE + 1) for a in shown]
        return (" ".join(parts), APP_PRECEDENCE)

    def __fmt_notation(self, name: str, args: 'list[Expr]', ctx: SubtermContext) -> 'Optional[tuple[str, int]]':
        if name in PREFIX and len(args) == PREFIX[name][2]:
            symbol, prec, _ = PREFIX[name]
            return (f"{symbol}{self.__wrap(args[0], ctx, prec)}", prec)
        if name in INFIX and len(args) == INFIX[name][2]:
            symbol, prec, _ = INFIX[name]
            if name in ("and", "or"):
                left_prec, right_prec = prec + 1, prec
            else:
                left_prec, right_prec = prec, prec + 1
            return (f"{self.__wrap(args[0], ctx, left_prec)} {symbol} {self.__wrap(args[1], ctx, right_prec)}", prec)
        if name == EQ and len(args) == 3 and self.mode != VERBOSE:
            return (f"{self.__wrap(args[1], ctx, EQ_PRECEDENCE + 1)} = {self.__wrap(args[2], ctx, EQ_PRECEDENCE + 1)}",
                    EQ_PRECEDENCE)
        return None

    # binders

    def __fmt_groups(self, binders: 'list[tuple[str, BinderInfo, Expr, SubtermContext]]') -> str:
        groups = []
        for name, info, type_, ctx in binders:
            type_text = self.print(type_, ctx)
            if groups and groups[-1][1] is info and groups[-1][2] == type_text:
                groups[-1][0].append(name)
            else:
                groups.append(([name], info, type_text))
        rendered = []
        for names, info, type_text in groups:
            opening, closing = info.brackets
            rendered.append(f"{opening}{' '.join(names)} : {type_text}{closing}")
        return " ".join(rendered)

    def __fmt_lambda(self, e: Lam, ctx: SubtermContext) -> 'tuple[str, int]':
        binders = []
        node: Expr = e
        while isinstance(node, Lam):
            binders.append((node.binder_name, node.binder_info, node.binder_type, ctx))
            ctx = ctx.push(node.binder_name, node.binder_type, node.binder_info)
            node = node.body
        return (f"λ {self.__fmt_groups(binders)}, {self.print(node, ctx)}", BINDER_PRECEDENCE)

    @staticmethod
    def __is_arrow(e: Pi) -> bool:
        return e.binder_info is BinderInfo.EXPLICIT and not has_loose_bvar(e.body, 0)

    def __fmt_pi(self, e: Pi, ctx: SubtermContext) -> 'tuple[str, int]':
        if self.__is_arrow(e):
            inner = ctx.push(e.binder_name, e.binder_type, e.binder_info)
            left = self.__wrap(e.binder_type, ctx, ARROW_PRECEDENCE + 1)
            right = self.__wrap(e.body, inner, ARROW_PRECEDENCE)
            return (f"{left} → {right}", ARROW_PRECEDENCE)
        keyword = "∀" if self.__is_proposition(e, ctx) else "Π"
        binders = []
        node: Expr = e
        while isinstance(node, Pi) and not (binders and self.__is_arrow(node)):
            binders.append((node.binder_name, node.binder_info, node.binder_type, ctx))
            ctx = ctx.push(node.binder_name, node.binder_type, node.binder_info)
            node = node.body
        return (f"{keyword} {self.__fmt_groups(binders)}, {self.print(node, ctx)}", BINDER_PRECEDENCE)

    def __is_proposition(self, e: Pi, ctx: SubtermContext) -> bool:
        if self.__checker is None:
            return True
        try:
            return self.__checker.sort_of(e, ctx) != SortLevel.TYPE
        except PactErr:
            return True


def print_expr(e: Expr, mode: str = PRETTY, max_depth: int = None, env: Environment = None,
               ctx: SubtermContext = None) -> str:
    """Render e; subtrees nested deeper than max_depth become `…`"""

    if max_depth is not None:
        if max_depth < 1:
            raise ValueError("max_depth must be positive")
        e = truncate(e, max_depth)
    return ExprPrinter(mode, env).print(e, ctx if ctx is not None else EMPTY_CONTEXT)
