from typing import Optional

from pactlib.exception import TypeMismatchErr, UnboundVariableErr, UnknownConstantErr
from ..kernel.environment import Environment
from ..kernel.expr import (PROP, TYPE, App, BoundVar, Const, Expr, FreeVar, Lam, MetaVar,
                           Pi, Sort, instantiate)
from ..kernel.reduction import beta_normalize, is_def_eq, whnf
from ..kernel.sort_level import SortLevel
from ..kernel.subterm_context import EMPTY_CONTEXT, SubtermContext


class TypeChecker:
    """Type inference for the lambda-Pi fragment with Prop and Type"""

    def __init__(self, env: Environment):
        self.env = env

    def infer(self, e: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> Expr:
        """Type of e in ctx, in beta normal form"""

        return beta_normalize(self._infer(e, ctx, []))

    def sort_of(self, type_: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> Optional[SortLevel]:
        """Sort of a type, None when type_ is not a type"""

        ret_val = whnf(self._infer(type_, ctx, []))
        return ret_val.level if isinstance(ret_val, Sort) else None

    def is_proposition(self, type_: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> bool:
        return self.sort_of(type_, ctx) == SortLevel.PROP

    def is_def_eq(self, a: Expr, b: Expr) -> bool:
        return is_def_eq(a, b)

    def const_type(self, name: str) -> Expr:
        decl = self.env.get(name)
        if decl is None:
            raise UnknownConstantErr(name)
        return decl.type

    def meta_type(self, meta: MetaVar, path: 'list[str]') -> Expr:
        raise TypeMismatchErr("a term", f"metavariable ?m_{meta.id}", path)

    def _check_arg(self, arg: Expr, expected: Expr, ctx: SubtermContext, path: 'list[str]'):
        actual = self._infer(arg, ctx, path)
        if not self.is_def_eq(actual, expected):
            from ..kernel.printer import print_expr
            raise TypeMismatchErr(
                print_expr(expected, "pretty", env=self.env, ctx=ctx),
                print_expr(actual, "pretty", env=self.env, ctx=ctx),
                path)

    def _ensure_sort(self, type_: Expr, ctx: SubtermContext, path: 'list[str]') -> Sort:
        sort = whnf(self._infer(type_, ctx, path))
        if not isinstance(sort, Sort):
            from ..kernel.printer import print_expr
            raise TypeMismatchErr("a sort", print_expr(sort, "pretty", env=self.env, ctx=ctx), path)
        return sort

    def _infer(self, e: Expr, ctx: SubtermContext, path: 'list[str]') -> Expr:
        if isinstance(e, BoundVar):
            ret_val = ctx.type_of(e.index)
            if ret_val is None:
                raise UnboundVariableErr(e.index, ctx.depth)
            return ret_val
        if isinstance(e, FreeVar):
            return e.type
        if isinstance(e, Const):
            return self.const_type(e.name)
        if isinstance(e, Sort):
            return TYPE
        if isinstance(e, MetaVar):
            return self.meta_type(e, path)
        if isinstance(e, App):
            fn_type = whnf(self._infer(e.fn, ctx, path + ["fn"]))
            if isinstance(fn_type, MetaVar):
                fn_type = whnf(self.resolve(fn_type))
            if not isinstance(fn_type, Pi):
                from ..kernel.printer import print_expr
                raise TypeMismatchErr("a function type", print_expr(fn_type, "pretty", env=self.env, ctx=ctx), path + ["fn"])
            self._check_arg(e.arg, fn_type.binder_type, ctx, path + ["arg"])
            return instantiate(fn_type.body, e.arg)
        if isinstance(e, Lam):
            self._ensure_sort(e.binder_type, ctx, path + ["binder_type"])
            inner = ctx.push(e.binder_name, e.binder_type, e.binder_info)
            body_type = self._infer(e.body, inner, path + ["body"])
            return Pi(e.binder_name, e.binder_info, e.binder_type, body_type)
        if isinstance(e, Pi):
            self._ensure_sort(e.binder_type, ctx, path + ["binder_type"])
            inner = ctx.push(e.binder_name, e.binder_type, e.binder_info)
            body_sort = self._ensure_sort(e.body, inner, path + ["body"])
            return PROP if body_sort.level == SortLevel.PROP else TYPE
        raise TypeError(f"unexpected expression node {type(e).__name__}")

    def resolve(self, e: Expr) -> Expr:
        """Hook for elaborators; the kernel has no metavariable assignments"""

        return e


def infer_type(e: Expr, ctx: SubtermContext, env: Environment) -> Expr:
    return TypeChecker(env).infer(e, ctx if ctx is not None else EMPTY_CONTEXT)
