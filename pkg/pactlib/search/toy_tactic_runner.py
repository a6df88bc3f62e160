import time
from typing import Optional

from pactlib.codec import TacticStep, render_tactic_state
from pactlib.exception import (ParseErr, PactErr, TacticErr, TacticFailedErr, TacticParseErr, TacticTimeoutErr,
                               UnknownConstantErr)
from pactlib.kernel import (ARROW_BINDER_NAME, PRETTY, BinderInfo, Const, Declaration, Environment, Expr,
                            ExprParser, ExprPrinter, FreeVar, MetaVar, Pi, alpha_eq, beta_normalize, const_names,
                            get_app_args, instantiate, lift, whnf)
from pactlib.kernel.notation import AND, EQ, IFF, OR
from ..search.elaborator import Elaborator, is_prop_goal
from ..search.goal import Goal
from ..search.tactic_command import TacticCommand, parse_tactic, split_chain
from ..search.tactic_runner import TacticRunner
from ..search.tactic_state import TacticState
from ..search.tautology import Tautology


class ToyTacticRunner(TacticRunner):
    """Executes the toy tactic language against an environment"""

    def __init__(self, env: Environment):
        self.env = env
        self.__printer = ExprPrinter(PRETTY, env)
        self.__handlers = {
            "assumption": self._tactic_assumption,
            "exact": self._tactic_exact,
            "apply": self._tactic_apply,
            "intro": self._tactic_intro,
            "intros": self._tactic_intros,
            "intros1": self._tactic_intros1,
            "split": self._tactic_split,
            "left": self._tactic_left,
            "right": self._tactic_right,
            "refl": self._tactic_refl,
        }

    # states

    def root_state(self, decl: Declaration, env_cutoff: Optional[int] = None) -> TacticState:
        """Leading implicit and instance binders of the statement become hypotheses"""

        hyps = []
        target = decl.type
        while isinstance(target, Pi) and not target.binder_info.is_explicit:
            hyp = FreeVar(target.binder_name, target.binder_type)
            hyps.append(hyp)
            target = instantiate(target.body, hyp)
        cutoff = decl.order_index if env_cutoff is None else env_cutoff
        return TacticState((Goal(tuple(hyps), target),), cutoff)

    def goal_strings(self, goal: Goal) -> 'tuple[tuple[tuple[str, str], ...], str]':
        hyps = tuple((hyp.name, self.__printer.print(hyp.type)) for hyp in goal.hyps)
        return hyps, self.__printer.print(goal.target)

    def serialize(self, state: TacticState) -> str:
        return render_tactic_state(self.goal_strings(goal) for goal in state.goals)

    def is_solved(self, state: TacticState) -> bool:
        return state.is_solved

    # execution

    def run(self, state: TacticState, command: str, timeout: Optional[float] = None) -> TacticState:
        if state.is_solved:
            raise TacticFailedErr("no goals")
        parts = [parse_tactic(part) for part in split_chain(command)]
        started = time.monotonic()
        goals = self.__run_one(state.goals[0], parts[0], state.env_cutoff, timeout)
        for part in parts[1:]:
            goals = [new_goal for goal in goals
                     for new_goal in self.__run_one(goal, part, state.env_cutoff, timeout)]
        if timeout is not None and time.monotonic() - started > timeout:
            raise TacticTimeoutErr(timeout)
        return state.replace_first(goals)

    def __run_one(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int],
                  timeout: Optional[float]) -> 'list[Goal]':
        try:
            if tactic.name == "tauto!":
                return self._tactic_tauto(goal, timeout)
            return self.__handlers[tactic.name](goal, tactic, cutoff)
        except TacticErr:
            raise
        except PactErr as ex:
            raise TacticFailedErr(str(ex)) from ex

    # tactics

    def _tactic_assumption(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        target = beta_normalize(goal.target)
        for hyp in reversed(goal.hyps):
            if alpha_eq(beta_normalize(hyp.type), target):
                return []
        raise TacticFailedErr("no hypothesis matches the goal")

    def _tactic_exact(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        elab = Elaborator(self.env)
        term = self.__elaborate(tactic.term, goal, elab, cutoff)
        if not elab.is_def_eq(elab.infer(term), goal.target):
            raise TacticFailedErr(f"'{tactic.term}' does not have the goal type")
        self.__finish(elab, elab.unassigned(term), cutoff)
        return []

    def _tactic_apply(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        elab = Elaborator(self.env)
        term = self.__elaborate(tactic.term, goal, elab, cutoff)
        term_type = elab.infer(term)
        arity = 0
        telescope = whnf(elab.resolve(term_type))
        while isinstance(telescope, Pi):
            arity += 1
            telescope = whnf(telescope.body)
        for count in range(arity + 1):
            saved = elab.snapshot()
            metas, conclusion = elab.peel(term_type, count)
            if elab.unify(conclusion, goal.target):
                new_goals = self.__apply_goals(elab, goal, term, metas, cutoff)
                if new_goals is not None:
                    return new_goals
            elab.restore(saved)
        raise TacticFailedErr(f"cannot apply '{tactic.term}'")

    def __apply_goals(self, elab: Elaborator, goal: Goal, term: Expr, metas: list,
                      cutoff: Optional[int]) -> 'Optional[list[Goal]]':
        pending = [meta for meta in metas if elab.resolve(meta) == meta]
        goal_metas = [meta for meta in pending if elab.meta_infos[meta.id].is_explicit]
        try:
            self.__finish(elab, elab.unassigned(term) + [m for m in pending if m not in goal_metas], cutoff)
        except TacticFailedErr:
            return None
        ret_val = []
        for meta in goal_metas:
            target = elab.resolve(elab.meta_types[meta.id])
            if elab.unassigned(target) or not is_prop_goal(elab, target):
                return None
            ret_val.append(goal.with_target(target))
        return ret_val

    def _tactic_intro(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        return [self.__intro(goal, tactic.names[0] if tactic.names else None)]

    def _tactic_intros(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        if tactic.names:
            for name in tactic.names:
                goal = self.__intro(goal, name)
            return [goal]
        while isinstance(whnf(goal.target), Pi):
            goal = self.__intro(goal, None)
        return [goal]

    def _tactic_intros1(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        goal = self.__intro(goal, None)
        return self._tactic_intros(goal, tactic, cutoff)

    def _tactic_split(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        name, args = self.__connective(goal.target)
        if name == AND and len(args) == 2:
            return [goal.with_target(args[0]), goal.with_target(args[1])]
        if name == IFF and len(args) == 2:
            forward = Pi(ARROW_BINDER_NAME, BinderInfo.EXPLICIT, args[0], lift(args[1], 1))
            backward = Pi(ARROW_BINDER_NAME, BinderInfo.EXPLICIT, args[1], lift(args[0], 1))
            return [goal.with_target(forward), goal.with_target(backward)]
        raise TacticFailedErr("split expects a conjunction or an equivalence")

    def _tactic_left(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        return [goal.with_target(self.__disjunct(goal, 0))]

    def _tactic_right(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        return [goal.with_target(self.__disjunct(goal, 1))]

    def _tactic_refl(self, goal: Goal, tactic: TacticCommand, cutoff: Optional[int]) -> 'list[Goal]':
        name, args = self.__connective(goal.target)
        if name == EQ and len(args) == 3 and alpha_eq(args[1], args[2]):
            return []
        if name == IFF and len(args) == 2 and alpha_eq(args[0], args[1]):
            return []
        raise TacticFailedErr("goal is not a reflexivity")

    def _tactic_tauto(self, goal: Goal, timeout: Optional[float]) -> 'list[Goal]':
        elab = Elaborator(self.env)
        hyps = [hyp.type for hyp in goal.hyps if is_prop_goal(elab, hyp.type)]
        if not Tautology(elab).is_valid(hyps, goal.target, timeout):
            raise TacticFailedErr("goal is not a propositional tautology")
        return []

    # helpers

    @staticmethod
    def __connective(target: Expr) -> 'tuple[Optional[str], list[Expr]]':
        head, args = get_app_args(beta_normalize(target))
        return (head.name if isinstance(head, Const) else None), args

    def __disjunct(self, goal: Goal, index: int) -> Expr:
        name, args = self.__connective(goal.target)
        if name != OR or len(args) != 2:
            raise TacticFailedErr("goal is not a disjunction")
        return args[index]

    @staticmethod
    def __intro(goal: Goal, name: Optional[str]) -> Goal:
        target = whnf(goal.target)
        if not isinstance(target, Pi):
            raise TacticFailedErr("nothing to introduce")
        hyp = FreeVar(name or target.binder_name, target.binder_type)
        return goal.add_hyp(hyp, instantiate(target.body, hyp))

    def __elaborate(self, text: str, goal: Goal, elab: Elaborator, cutoff: Optional[int]) -> Expr:
        parser = ExprParser(text, self.env, hyps=list(goal.hyps), insert_implicits=True,
                            meta_start=elab.next_meta, checker=elab)
        try:
            term = parser.parse()
        except (ParseErr, UnknownConstantErr) as ex:
            raise TacticParseErr(text, str(ex)) from ex
        elab.next_meta = parser.next_meta
        elab.meta_infos.update(parser.meta_infos)
        for name in const_names(term):
            if not self.env.is_usable(name, cutoff):
                raise TacticFailedErr(f"'{name}' is not available before the cutoff")
        return term

    @staticmethod
    def __finish(elab: Elaborator, pending: 'list[MetaVar]', cutoff: Optional[int]):
        """Synthesize instance arguments; every other pending metavariable must be solved"""

        for meta in pending:
            if elab.resolve(meta) != meta:
                continue
            if elab.meta_infos.get(meta.id) is not BinderInfo.INSTANCE or not elab.synthesize_instance(meta, cutoff):
                raise TacticFailedErr("cannot infer every implicit argument")


def apply_tactic(state: TacticState, command: str, env: Environment, timeout: Optional[float] = None) -> TacticState:
    return ToyTacticRunner(env).run(state, command, timeout)


def root_state(decl: Declaration, env: Environment, env_cutoff: Optional[int] = None) -> TacticState:
    return ToyTacticRunner(env).root_state(decl, env_cutoff)


def record_script(decl: Declaration, tactics: 'list[str]', env: Environment) -> 'list[TacticStep]':
    """Replay a ground-truth script, recording the state before every tactic"""

    runner = ToyTacticRunner(env)
    state = runner.root_state(decl)
    ret_val = []
    for tactic in tactics:
        goals = tuple(runner.goal_strings(goal) for goal in state.goals)
        ret_val.append(TacticStep(goals, tactic, decl.name))
        state = runner.run(state, tactic)
    if not state.is_solved:
        raise TacticFailedErr(f"script for '{decl.name}' leaves {len(state.goals)} goals open")
    return ret_val
