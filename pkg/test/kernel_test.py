import pytest

from pactlib.exception import (DeclarationErr, MultipleHolesErr, NoHoleErr, ParseErr, TypeMismatchErr,
                               UnboundVariableErr, UnknownConstantErr)
from pactlib.kernel import (HOLE, HOLE_NAME, PROP, PRETTY, VERBOSE, App, BinderInfo, BoundVar, Const, Declaration,
                            Environment, Lam, Pi, TypeChecker, context_from_hyps, count_const, infer_type, occurs,
                            parse_environment, parse_expr, print_expr, replace_at, substitute_hole, subterms,
                            truncate)


def test_parse_builds_de_bruijn_terms(env):
    e = parse_expr("λ {P : Prop} (h : P), h", env)
    assert e == Lam("P", BinderInfo.IMPLICIT, PROP, Lam("h", BinderInfo.EXPLICIT, BoundVar(0), BoundVar(0)))


def test_arrow_is_non_dependent_pi(env):
    e = parse_expr("true → false", env)
    assert isinstance(e, Pi)
    assert e.binder_type == Const("true")
    assert e.body == Const("false")
    assert parse_expr("true -> false", env) == e


def test_binder_names_do_not_affect_equality(env):
    assert parse_expr("λ (a : Prop), a", env) == parse_expr("λ (b : Prop), b", env)


def test_pretty_printing_of_statements(env, peirce):
    assert print_expr(peirce.type, PRETTY, env=env) == "∀ {P Q : Prop}, ((P → Q) → P) → P"
    assert print_expr(env["classical.prop_decidable"].type, PRETTY, env=env) == "Π (a : Prop), decidable a"
    assert print_expr(env["nat.eq_self"].type, PRETTY, env=env) == "∀ (n : nat), n = n"


def test_pretty_elides_implicit_arguments(env):
    e = env["and_swap"].value
    pretty = print_expr(e, PRETTY, env=env)
    verbose = print_expr(e, VERBOSE, env=env)
    assert "and.intro (and.right h) (and.left h)" in pretty
    assert "@and.intro Q P (@and.right P Q h) (@and.left P Q h)" in verbose


def test_verbose_equality_shows_its_type(env):
    statement = env["nat.eq_self"].type
    verbose = print_expr(statement, VERBOSE, env=env)
    assert "@eq nat n n" in verbose
    assert " = " not in verbose
    assert parse_expr(verbose, env) == statement


def test_verbose_printing_round_trips(env):
    for decl in env:
        assert parse_expr(print_expr(decl.type, VERBOSE, env=env), env) == decl.type, decl.name
        if decl.value is not None:
            assert parse_expr(print_expr(decl.value, VERBOSE, env=env), env) == decl.value, decl.name


def test_pretty_statements_round_trip(env):
    for decl in env.theorems():
        assert parse_expr(print_expr(decl.type, PRETTY, env=env), env) == decl.type, decl.name


def test_infer_type_of_every_theorem(env):
    checker = TypeChecker(env)
    for decl in env.theorems():
        assert checker.is_def_eq(infer_type(decl.value, None, env), decl.type), decl.name


def test_infer_errors(env):
    with pytest.raises(TypeMismatchErr):
        infer_type(App(Const("trivial"), Const("trivial")), None, env)
    with pytest.raises(UnboundVariableErr):
        infer_type(BoundVar(0), None, env)
    with pytest.raises(UnknownConstantErr):
        infer_type(Const("no_such_lemma"), None, env)


def test_parse_errors(env):
    with pytest.raises(UnknownConstantErr):
        parse_expr("no_such_lemma", env)
    with pytest.raises(ParseErr) as info:
        parse_expr("(true", env)
    assert info.value.offset == 5


def test_print_depth_limit(env, peirce):
    truncated = print_expr(peirce.value, PRETTY, max_depth=2, env=env)
    assert "…" in truncated
    with pytest.raises(ValueError):
        print_expr(peirce.value, PRETTY, max_depth=0, env=env)


def test_subterms_visit_binder_types(env):
    walked = list(subterms(env["id_imp"].value))
    assert len(walked) == 5
    assert sum(1 for _, ctx in walked if ctx.in_binder_type) == 2
    innermost, ctx = walked[-1]
    assert innermost == BoundVar(0)
    assert ctx.names() == ["P", "h"]


def test_occurs_in_context(env):
    ctx = context_from_hyps([("P", "Prop"), ("h", "P")], env)
    e = parse_expr("h", env, ctx)
    assert e == BoundVar(0)
    assert occurs("h", e, ctx)
    assert not occurs("P", e, ctx)
    assert occurs("absurd", parse_expr("@absurd", env))


def test_occurs_resolves_shadowed_names_to_innermost(env):
    ctx = context_from_hyps([("P", "Prop"), ("h", "P"), ("h", "¬P")], env)
    inner, outer = BoundVar(0), BoundVar(1)
    assert occurs("h", inner, ctx)
    assert not occurs("h", outer, ctx)
    assert occurs("P", BoundVar(2), ctx)


def test_truncate_keeps_the_path_to_the_hole(env, peirce):
    masked = replace_at(peirce.value, deepest_path(peirce.value), HOLE)
    assert count_const(truncate(masked, 2), HOLE_NAME) == 0
    kept = truncate(masked, 2, HOLE_NAME)
    assert count_const(kept, HOLE_NAME) == 1
    assert count_const(kept, "…") > 0
    assert truncate(HOLE, 1, HOLE_NAME) == HOLE


def deepest_path(e):
    return max((ctx.path for _, ctx in subterms(e) if not ctx.in_binder_type), key=len)


def test_substitute_hole(env):
    masked = parse_expr("@and.intro PREDICT true trivial", env)
    assert masked.fn.fn.arg == HOLE
    with pytest.raises(NoHoleErr):
        substitute_hole(Const("true"), Const("true"))
    with pytest.raises(MultipleHolesErr) as info:
        substitute_hole(App(HOLE, HOLE), Const("true"))
    assert info.value.data["count"] == 2


def test_environment_order_and_cutoff(env, peirce):
    assert env.is_usable("em", peirce.order_index)
    assert not env.is_usable("peirce_identity", peirce.order_index)
    assert env.is_usable("peirce_identity", None)
    assert not env.is_usable("missing", None)
    assert peirce.top_module == "logic"
    assert [decl.order_index for decl in env] == sorted(decl.order_index for decl in env)


def test_environment_rejects_bad_declarations():
    prop = Declaration("p", PROP, None, 0)
    with pytest.raises(DeclarationErr):
        Environment([prop, Declaration("p", PROP, None, 1)])
    with pytest.raises(DeclarationErr):
        Environment([Declaration("q", Const("p"), None, 0), Declaration("p", PROP, None, 1)])
    with pytest.raises(UnknownConstantErr):
        Environment([Declaration("q", Const("missing"), None, 0)])


def test_environment_loader_checks_proofs():
    text = "constant true : Prop\nconstant false : Prop\ntheorem bad : true := λ (h : false), h\n"
    with pytest.raises(TypeMismatchErr):
        parse_environment(text)
    env = parse_environment("-- module: core/base\nconstant true : Prop\naxiom trivial : true\n")
    assert env["trivial"].module_path == "core/base"
    assert env["trivial"].top_module == "core"
