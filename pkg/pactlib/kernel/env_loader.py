import re
from pathlib import Path

from pactlib.exception import DeclarationErr, PactErr, ParseErr, TypeMismatchErr
from ..kernel.declaration import Declaration
from ..kernel.environment import Environment
from ..kernel.parser import parse_expr
from ..kernel.printer import print_expr
from ..kernel.type_checker import TypeChecker

_MODULE_DIRECTIVE = re.compile(r'^--\s*module\s*:\s*(\S+)\s*$')
_HEADER = re.compile(r'^(theorem|lemma|constant|axiom)\s+(\S+)\s*:(?!=)\s*(.*)$', re.S)
_KEYWORDS = ("theorem", "lemma", "constant", "axiom")


def _blocks(text: str) -> 'list[tuple[int, str, str]]':
    """(first line, module path, joined text) for every declaration block"""

    ret_val = []
    module_path = ""
    current = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        directive = _MODULE_DIRECTIVE.match(line)
        if directive:
            module_path = directive.group(1)
            current = None
            continue
        if not line or line.startswith("--"):
            current = None
            continue
        if line.split(maxsplit=1)[0] in _KEYWORDS:
            current = [line_no, module_path, line]
            ret_val.append(current)
        elif current is not None:
            current[2] += " " + line
        else:
            raise ParseErr(f"line {line_no}: expected a declaration", 0, raw)
    return [tuple(block) for block in ret_val]


def parse_environment(text: str, check: bool = True) -> Environment:
    """Build an environment from fixture text; with check every theorem is type-checked"""

    decls: 'list[Declaration]' = []
    env = Environment()
    for order_index, (line_no, module_path, block) in enumerate(_blocks(text)):
        header = _HEADER.match(block)
        if header is None:
            raise ParseErr(f"line {line_no}: malformed declaration", 0, block)
        keyword, name, rest = header.groups()
        value_text = None
        if keyword in ("theorem", "lemma"):
            if ":=" not in rest:
                raise DeclarationErr(name, f"line {line_no}: theorem without ':='")
            type_text, value_text = rest.split(":=", 1)
        else:
            type_text = rest
        try:
            type_ = parse_expr(type_text.strip(), env)
            value = parse_expr(value_text.strip(), env) if value_text is not None else None
        except PactErr as ex:
            raise DeclarationErr(name, f"line {line_no}: {ex}") from ex
        decl = Declaration(name, type_, value, order_index, module_path)
        decls.append(decl)
        env = env.extend([decl])
        if check:
            check_declaration(decl, env)
    return env


def check_declaration(decl: Declaration, env: Environment):
    """Verify that the type is a type and the value (if any) has it"""

    checker = TypeChecker(env)
    if checker.sort_of(decl.type) is None:
        raise DeclarationErr(decl.name, "type is not a sort")
    if decl.value is not None:
        actual = checker.infer(decl.value)
        if not checker.is_def_eq(actual, decl.type):
            raise TypeMismatchErr(print_expr(decl.type, env=env), print_expr(actual, env=env), [decl.name])


def check_environment(env: Environment):
    for decl in env:
        check_declaration(decl, env)


def load_environment(path: str, check: bool = True) -> Environment:
    return parse_environment(Path(path).read_text(encoding="utf-8"), check)
