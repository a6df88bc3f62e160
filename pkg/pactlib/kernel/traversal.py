from typing import Iterator

from pactlib.exception import MultipleHolesErr, NoHoleErr
from ..kernel.binder_info import BinderInfo
from ..kernel.environment import Environment
from ..kernel.expr import (HOLE, HOLE_NAME, App, BoundVar, Const, Expr, FreeVar, Lam, Pi, count_const,
                           has_loose_bvar)
from ..kernel.subterm_context import EMPTY_CONTEXT, SubtermContext

FN = "fn"
ARG = "arg"
BINDER_TYPE = "binder_type"
BODY = "body"


def subterms(e: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> 'Iterator[tuple[Expr, SubtermContext]]':
    """Depth-first pre-order walk yielding every subterm with its bound-variable context"""

    stack = [(e, ctx)]
    while stack:
        node, node_ctx = stack.pop()
        yield node, node_ctx
        if isinstance(node, App):
            stack.append((node.arg, node_ctx.step(ARG)))
            stack.append((node.fn, node_ctx.step(FN)))
        elif isinstance(node, (Lam, Pi)):
            stack.append((node.body, node_ctx.push(node.binder_name, node.binder_type, node.binder_info, BODY)))
            stack.append((node.binder_type, node_ctx.step(BINDER_TYPE)))


def free_names(e: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> 'set[str]':
    """Names of constants, locals and context variables occurring free in e"""

    ret_val = set()
    stack = [(e, 0)]
    while stack:
        node, depth = stack.pop()
        if isinstance(node, BoundVar):
            if node.index >= depth:
                name = ctx.name_of(node.index - depth)
                if name is not None:
                    ret_val.add(name)
        elif isinstance(node, (Const, FreeVar)):
            ret_val.add(node.name)
        elif isinstance(node, App):
            stack.append((node.fn, depth))
            stack.append((node.arg, depth))
        elif isinstance(node, (Lam, Pi)):
            stack.append((node.binder_type, depth))
            stack.append((node.body, depth + 1))
    return ret_val


def occurs(target: str, e: Expr, ctx: SubtermContext = EMPTY_CONTEXT) -> bool:
    """True when the named constant or context variable occurs in e; a bound name means its innermost binder"""

    for index in range(ctx.depth):
        if ctx.name_of(index) == target:
            return has_loose_bvar(e, index)
    return target in free_names(e)


def substitute_hole(masked: Expr, filler: Expr) -> Expr:
    """Replace the single PREDICT hole; filler is read in the hole's context"""

    count = count_const(masked, HOLE_NAME)
    if count == 0:
        raise NoHoleErr()
    if count > 1:
        raise MultipleHolesErr(count)
    return _replace_hole(masked, filler)


def _replace_hole(e: Expr, filler: Expr) -> Expr:
    if e == HOLE:
        return filler
    if isinstance(e, App):
        return App(_replace_hole(e.fn, filler), _replace_hole(e.arg, filler))
    if isinstance(e, (Lam, Pi)):
        return type(e)(e.binder_name, e.binder_info, _replace_hole(e.binder_type, filler), _replace_hole(e.body, filler))
    return e


def replace_at(e: Expr, path: 'tuple[str, ...]', replacement: Expr) -> Expr:
    """Copy of e with the subterm at path replaced"""

    if not path:
        return replacement
    step, rest = path[0], path[1:]
    if isinstance(e, App):
        if step == FN:
            return App(replace_at(e.fn, rest, replacement), e.arg)
        if step == ARG:
            return App(e.fn, replace_at(e.arg, rest, replacement))
    elif isinstance(e, (Lam, Pi)):
        if step == BINDER_TYPE:
            return type(e)(e.binder_name, e.binder_info, replace_at(e.binder_type, rest, replacement), e.body)
        if step == BODY:
            return type(e)(e.binder_name, e.binder_info, e.binder_type, replace_at(e.body, rest, replacement))
    raise ValueError(f"invalid path step '{step}' for {type(e).__name__}")


def context_from_hyps(hyps: 'list[tuple[str, str]]', env: Environment) -> SubtermContext:
    """Rebuild bound variables from (name, type-string) pairs, each type read in the context before it"""

    from ..kernel.parser import parse_expr
    ctx = EMPTY_CONTEXT
    for name, type_text in hyps:
        ctx = ctx.push(name, parse_expr(type_text, env, ctx), BinderInfo.EXPLICIT)
    return SubtermContext(ctx.bs, ())
