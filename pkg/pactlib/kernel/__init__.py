from pactlib.kernel.binder_info import BinderInfo
from pactlib.kernel.sort_level import SortLevel
from pactlib.kernel.expr import (Expr, BoundVar, FreeVar, Const, Sort, App, Lam, Pi, MetaVar, PROP, TYPE, HOLE,
                                 HOLE_NAME, ELLIPSIS, ARROW_BINDER_NAME, mk_app, get_app_fn, get_app_args, lift,
                                 instantiate, abstract, has_loose_bvar, has_loose_bvars, has_metavars, const_names,
                                 count_const, expr_size, expr_depth, truncate)
from pactlib.kernel.declaration import Declaration
from pactlib.kernel.environment import Environment
from pactlib.kernel.local_binding import LocalBinding
from pactlib.kernel.subterm_context import SubtermContext, EMPTY_CONTEXT
from pactlib.kernel.reduction import whnf, beta_normalize, alpha_eq, is_def_eq
from pactlib.kernel.type_checker import TypeChecker, infer_type
from pactlib.kernel.parser import ExprParser, parse_expr
from pactlib.kernel.printer import ExprPrinter, print_expr, PRETTY, VERBOSE
from pactlib.kernel.traversal import (subterms, free_names, occurs, substitute_hole, replace_at,
                                      context_from_hyps)
from pactlib.kernel.env_loader import parse_environment, load_environment, check_declaration, check_environment
