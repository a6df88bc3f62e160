import itertools
import time
from typing import Optional

from pactlib.exception import PactErr, TacticFailedErr, TacticTimeoutErr
from pactlib.kernel import (EMPTY_CONTEXT, App, Const, Expr, Pi, TypeChecker, beta_normalize, get_app_args,
                            has_loose_bvar)
from pactlib.kernel.notation import AND, FALSE, IFF, NOT, OR, TRUE

MAX_ATOMS = 20
# rows evaluated between two deadline checks
CHECK_EVERY = 1024

_TRUE = ("const", True)
_FALSE = ("const", False)


class Tautology:
    """Classical propositional validity by truth table; non-connective subterms are atoms"""

    def __init__(self, checker: TypeChecker, max_atoms: int = MAX_ATOMS):
        self.__checker = checker
        self.max_atoms = max_atoms

    def compile(self, e: Expr, atoms: 'dict[Expr, int]') -> tuple:
        e = beta_normalize(e)
        head, args = get_app_args(e)
        if isinstance(head, Const):
            if head.name == TRUE and not args:
                return _TRUE
            if head.name == FALSE and not args:
                return _FALSE
            if head.name == NOT and len(args) == 1:
                return ("not", self.compile(args[0], atoms))
            if head.name in (AND, OR, IFF) and len(args) == 2:
                return (head.name, self.compile(args[0], atoms), self.compile(args[1], atoms))
        if isinstance(e, Pi) and not has_loose_bvar(e.body, 0) and self.__is_prop(e.binder_type):
            return ("imp", self.compile(e.binder_type, atoms), self.compile(e.body, atoms))
        if e not in atoms:
            atoms[e] = len(atoms)
        return ("atom", atoms[e])

    def __is_prop(self, e: Expr) -> bool:
        try:
            return self.__checker.is_proposition(e, EMPTY_CONTEXT)
        except PactErr:
            return False

    @staticmethod
    def evaluate(formula: tuple, row: 'tuple[bool, ...]') -> bool:
        kind = formula[0]
        if kind == "atom":
            return row[formula[1]]
        if kind == "const":
            return formula[1]
        if kind == "not":
            return not Tautology.evaluate(formula[1], row)
        left = Tautology.evaluate(formula[1], row)
        if kind == AND:
            return left and Tautology.evaluate(formula[2], row)
        if kind == OR:
            return left or Tautology.evaluate(formula[2], row)
        if kind == "imp":
            return not left or Tautology.evaluate(formula[2], row)
        return left == Tautology.evaluate(formula[2], row)

    def is_valid(self, hyps: 'list[Expr]', target: Expr, timeout: Optional[float] = None) -> bool:
        """True when the conjunction of hyps implies target under every assignment"""

        atoms: 'dict[Expr, int]' = dict()
        premises = [self.compile(hyp, atoms) for hyp in hyps]
        goal = self.compile(target, atoms)
        if len(atoms) > self.max_atoms:
            raise TacticFailedErr(f"tauto! supports at most {self.max_atoms} atoms, found {len(atoms)}")
        deadline = None if timeout is None else time.monotonic() + timeout
        for count, row in enumerate(itertools.product((False, True), repeat=len(atoms)), start=1):
            if deadline is not None and count % CHECK_EVERY == 0 and time.monotonic() > deadline:
                raise TacticTimeoutErr(timeout)
            if all(self.evaluate(p, row) for p in premises) and not self.evaluate(goal, row):
                return False
        return True
