from ..kernel.expr import App, Expr, Lam, Pi, get_app_args, instantiate, mk_app


def whnf(e: Expr) -> Expr:
    """Weak-head normal form under beta"""

    while True:
        head, args = get_app_args(e)
        if not isinstance(head, Lam) or not args:
            return e
        e = mk_app(instantiate(head.body, args[0]), args[1:])


def beta_normalize(e: Expr) -> Expr:
    e = whnf(e)
    if isinstance(e, App):
        head, args = get_app_args(e)
        return mk_app(beta_normalize(head), [beta_normalize(a) for a in args])
    if isinstance(e, Lam):
        return Lam(e.binder_name, e.binder_info, beta_normalize(e.binder_type), beta_normalize(e.body))
    if isinstance(e, Pi):
        return Pi(e.binder_name, e.binder_info, beta_normalize(e.binder_type), beta_normalize(e.body))
    return e


def alpha_eq(a: Expr, b: Expr) -> bool:
    """Structural equality ignoring binder names and binder infos"""

    if a is b:
        return True
    if isinstance(a, App) and isinstance(b, App):
        return alpha_eq(a.fn, b.fn) and alpha_eq(a.arg, b.arg)
    if (isinstance(a, Lam) and isinstance(b, Lam)) or (isinstance(a, Pi) and isinstance(b, Pi)):
        return alpha_eq(a.binder_type, b.binder_type) and alpha_eq(a.body, b.body)
    return a == b


def is_def_eq(a: Expr, b: Expr) -> bool:
    """Definitional equality: alpha equality after beta normalization"""

    return alpha_eq(beta_normalize(a), beta_normalize(b))
