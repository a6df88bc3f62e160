from typing import Optional

from pactlib.exception import PactErr, TacticFailedErr
from pactlib.kernel import (EMPTY_CONTEXT, App, BinderInfo, Const, Environment, Expr, Lam, MetaVar, Pi,
                            SubtermContext, TypeChecker, alpha_eq, beta_normalize, has_loose_bvars, instantiate,
                            whnf)


class Elaborator(TypeChecker):
    """Type checker with metavariables solved by first-order unification"""

    def __init__(self, env: Environment):
        super().__init__(env)
        self.assignments: 'dict[int, Expr]' = dict()
        self.meta_types: 'dict[int, Expr]' = dict()
        self.meta_infos: 'dict[int, BinderInfo]' = dict()
        self.next_meta = 0

    def new_meta(self, type_: Expr, info: BinderInfo) -> MetaVar:
        meta = MetaVar(self.next_meta)
        self.next_meta += 1
        self.meta_types[meta.id] = type_
        self.meta_infos[meta.id] = info
        return meta

    def snapshot(self) -> 'tuple[dict, dict]':
        return dict(self.assignments), dict(self.meta_types)

    def restore(self, snapshot: 'tuple[dict, dict]'):
        self.assignments, self.meta_types = dict(snapshot[0]), dict(snapshot[1])

    def meta_type(self, meta: MetaVar, path: 'list[str]') -> Expr:
        if meta.id in self.meta_types:
            return self.resolve(self.meta_types[meta.id])
        return super().meta_type(meta, path)

    def _check_arg(self, arg: Expr, expected: Expr, ctx: SubtermContext, path: 'list[str]'):
        if isinstance(arg, MetaVar) and arg.id not in self.meta_types:
            self.meta_types[arg.id] = expected
            return
        super()._check_arg(arg, expected, ctx, path)

    def is_def_eq(self, a: Expr, b: Expr) -> bool:
        saved = self.snapshot()
        if self.unify(a, b):
            return True
        self.restore(saved)
        return False

    def resolve(self, e: Expr) -> Expr:
        """Substitute every assigned metavariable"""

        if not self.assignments:
            return e
        if isinstance(e, MetaVar):
            value = self.assignments.get(e.id)
            return e if value is None else self.resolve(value)
        if isinstance(e, App):
            return App(self.resolve(e.fn), self.resolve(e.arg))
        if isinstance(e, (Lam, Pi)):
            return type(e)(e.binder_name, e.binder_info, self.resolve(e.binder_type), self.resolve(e.body))
        return e

    def unassigned(self, e: Expr) -> 'list[MetaVar]':
        """Unassigned metavariables of e in pre-order, without repeats"""

        ret_val = []
        stack = [self.resolve(e)]
        while stack:
            node = stack.pop()
            if isinstance(node, MetaVar):
                if node not in ret_val:
                    ret_val.append(node)
            elif isinstance(node, App):
                stack.append(node.arg)
                stack.append(node.fn)
            elif isinstance(node, (Lam, Pi)):
                stack.append(node.body)
                stack.append(node.binder_type)
        return ret_val

    def unify(self, a: Expr, b: Expr) -> bool:
        a = beta_normalize(self.resolve(a))
        b = beta_normalize(self.resolve(b))
        return self.__unify(a, b)

    def __unify(self, a: Expr, b: Expr) -> bool:
        if isinstance(a, MetaVar):
            return self.__assign(a, b)
        if isinstance(b, MetaVar):
            return self.__assign(b, a)
        if isinstance(a, App) and isinstance(b, App):
            return self.__unify(a.fn, b.fn) and self.__unify(self.resolve(a.arg), self.resolve(b.arg))
        if (isinstance(a, Lam) and isinstance(b, Lam)) or (isinstance(a, Pi) and isinstance(b, Pi)):
            return self.__unify(a.binder_type, b.binder_type) and \
                self.__unify(self.resolve(a.body), self.resolve(b.body))
        return alpha_eq(a, b)

    def __assign(self, meta: MetaVar, value: Expr) -> bool:
        if value == meta:
            return True
        if meta.id in self.assignments:
            return self.__unify(self.resolve(meta), value)
        if has_loose_bvars(value) or meta in self.unassigned(value):
            return False
        self.assignments[meta.id] = value
        return True

    def peel(self, type_: Expr, count: int) -> 'tuple[list[MetaVar], Expr]':
        """Instantiate the first count binders of a Pi telescope with fresh metavariables"""

        metas = []
        for _ in range(count):
            type_ = whnf(self.resolve(type_))
            if not isinstance(type_, Pi):
                raise TacticFailedErr("too many arguments requested")
            meta = self.new_meta(self.resolve(type_.binder_type), type_.binder_info)
            metas.append(meta)
            type_ = instantiate(type_.body, meta)
        return metas, type_

    def synthesize_instance(self, meta: MetaVar, env_cutoff: Optional[int]) -> bool:
        """Solve an instance metavariable from one environment constant applied to inferable arguments"""

        target = self.resolve(self.meta_types[meta.id])
        for decl in self.env:
            if not self.env.is_usable(decl.name, env_cutoff):
                continue
            saved = self.snapshot()
            arity = 0
            telescope = decl.type
            while isinstance(telescope, Pi):
                arity += 1
                telescope = telescope.body
            args, conclusion = self.peel(decl.type, arity)
            if self.unify(conclusion, target) and all(self.resolve(arg) != arg for arg in args):
                value = Const(decl.name)
                for arg in args:
                    value = App(value, self.resolve(arg))
                self.assignments[meta.id] = value
                return True
            self.restore(saved)
        return False


def is_prop_goal(elab: Elaborator, target: Expr) -> bool:
    try:
        return elab.is_proposition(target, EMPTY_CONTEXT)
    except PactErr:
        return False
