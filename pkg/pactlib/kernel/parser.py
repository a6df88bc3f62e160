from typing import Optional

from pactlib.exception import ParseErr, UnknownConstantErr
from ..kernel.binder_info import BinderInfo
from ..kernel.environment import Environment
from ..kernel.expr import (ARROW_BINDER_NAME, ELLIPSIS, HOLE, HOLE_NAME, PROP, TYPE, App, BoundVar,
                           Const, Expr, FreeVar, Lam, MetaVar, Pi, lift, mk_app)
from ..kernel.local_binding import LocalBinding
from ..kernel.notation import AND, EQ, IFF, LAMBDA_KEYWORDS, NOT, OR, PI_KEYWORDS
from ..kernel.subterm_context import SubtermContext
from ..kernel.token import Token
from ..kernel.tokenizer import byte_offset, tokenize


class ExprParser:
    """Recursive descent parser for the Lean-like surface syntax"""

    def __init__(self, src: str, env: Environment, ctx: SubtermContext = None, hyps: 'list[FreeVar]' = None,
                 insert_implicits: bool = False, meta_start: int = 0, checker=None):
        self.__src = src
        self.__tokens = tokenize(src)
        self.__index = 0
        self.__env = env
        self.__bs: 'list[LocalBinding]' = list(ctx.bs) if ctx is not None else []
        self.__hyps: 'list[FreeVar]' = list(hyps or [])
        self.__insert_implicits = insert_implicits
        self.__next_meta = meta_start
        self.__checker = checker
        self.meta_infos: 'dict[int, BinderInfo]' = dict()

    @property
    def next_meta(self) -> int:
        return self.__next_meta

    def parse(self) -> Expr:
        ret_val = self.__term()
        token = self.__peek()
        if token.kind != Token.EOF:
            self.__fail(f"Unexpected '{token.text}'", token)
        return ret_val

    # tokens

    def __peek(self, ahead: int = 0) -> Token:
        index = min(self.__index + ahead, len(self.__tokens) - 1)
        return self.__tokens[index]

    def __advance(self) -> Token:
        token = self.__tokens[self.__index]
        if token.kind != Token.EOF:
            self.__index += 1
        return token

    def __expect(self, text: str) -> Token:
        token = self.__peek()
        if not token.is_symbol(text):
            self.__fail(f"Expected '{text}' but found '{token.text or 'end of input'}'", token)
        return self.__advance()

    def __fail(self, message: str, token: Token):
        raise ParseErr(message, byte_offset(self.__src, token.pos), self.__src)

    def __starts_binder(self) -> bool:
        token = self.__peek()
        return token.is_symbol("λ", "∀", "Π") or token.is_ident("fun", "forall")

    def __starts_argument(self) -> bool:
        token = self.__peek()
        if token.kind == Token.IDENT:
            return token.text not in ("fun", "forall")
        return token.is_symbol("(", "…")

    # grammar

    def __term(self) -> Expr:
        if self.__starts_binder():
            return self.__binder()
        return self.__iff()

    def __iff(self) -> Expr:
        left = self.__arrow()
        while self.__peek().is_symbol("↔", "<->"):
            token = self.__advance()
            right = self.__arrow()
            left = mk_app(self.__notation(IFF, token), [left, right])
        return left

    def __arrow(self) -> Expr:
        left = self.__or()
        if self.__peek().is_symbol("→", "->"):
            self.__advance()
            right = self.__binder() if self.__starts_binder() else self.__arrow()
            return Pi(ARROW_BINDER_NAME, BinderInfo.EXPLICIT, left, lift(right, 1))
        return left

    def __or(self) -> Expr:
        left = self.__and()
        if self.__peek().is_symbol("∨"):
            token = self.__advance()
            right = self.__or()
            return mk_app(self.__notation(OR, token), [left, right])
        return left

    def __and(self) -> Expr:
        left = self.__not()
        if self.__peek().is_symbol("∧"):
            token = self.__advance()
            right = self.__and()
            return mk_app(self.__notation(AND, token), [left, right])
        return left

    def __not(self) -> Expr:
        if self.__peek().is_symbol("¬"):
            token = self.__advance()
            operand = self.__binder() if self.__starts_binder() else self.__not()
            return App(self.__notation(NOT, token), operand)
        return self.__eq()

    def __eq(self) -> Expr:
        left = self.__app()
        if self.__peek().is_symbol("="):
            token = self.__advance()
            right = self.__app()
            eq = self.__notation(EQ, token)
            from ..kernel.type_checker import TypeChecker
            checker = self.__checker or TypeChecker(self.__env)
            carrier = checker.infer(left, SubtermContext(tuple(self.__bs)))
            return mk_app(eq, [carrier, left, right])
        return left

    def __app(self) -> Expr:
        explicit = False
        if self.__peek().is_symbol("@"):
            self.__advance()
            token = self.__advance()
            if token.kind != Token.IDENT:
                self.__fail("Expected an identifier after '@'", token)
            head = self.__resolve(token)
            explicit = True
        else:
            head = self.__primary()
        args = []
        while self.__starts_argument():
            args.append(self.__primary())
        if self.__insert_implicits and not explicit and isinstance(head, (Const, FreeVar, BoundVar)):
            return self.__insert_metas(head, args)
        return mk_app(head, args)

    def __primary(self) -> Expr:
        token = self.__peek()
        if token.kind == Token.IDENT:
            if token.text in ("fun", "forall"):
                return self.__binder()
            self.__advance()
            if token.text == "Prop":
                return PROP
            if token.text == "Type":
                return TYPE
            return self.__resolve(token)
        if token.is_symbol("("):
            self.__advance()
            ret_val = self.__term()
            self.__expect(")")
            return ret_val
        if token.is_symbol("…"):
            self.__advance()
            return ELLIPSIS
        if token.is_symbol("λ", "∀", "Π"):
            return self.__binder()
        self.__fail(f"Unexpected '{token.text or 'end of input'}'", token)

    def __binder(self) -> Expr:
        keyword = self.__advance()
        is_lambda = keyword.text in LAMBDA_KEYWORDS
        binders: 'list[LocalBinding]' = []
        try:
            while not self.__peek().is_symbol(","):
                token = self.__peek()
                if token.is_symbol("(", "{", "["):
                    opening = self.__advance().text
                    closing = {"(": ")", "{": "}", "[": "]"}[opening]
                    info = BinderInfo.from_bracket(opening)
                    if opening == "[" and not (self.__peek().kind == Token.IDENT and self.__peek(1).is_symbol(":")):
                        names = ["_inst"]
                    else:
                        names = self.__binder_names()
                        self.__expect(":")
                    type_ = self.__term()
                    self.__expect(closing)
                elif token.kind == Token.IDENT and not binders:
                    info = BinderInfo.EXPLICIT
                    names = self.__binder_names()
                    self.__expect(":")
                    type_ = self.__term()
                    if not self.__peek().is_symbol(","):
                        self.__fail("Expected ','", self.__peek())
                else:
                    self.__fail(f"Expected a binder after '{keyword.text}'", token)
                for offset, name in enumerate(names):
                    binding = LocalBinding(name, lift(type_, offset), info)
                    binders.append(binding)
                    self.__bs.append(binding)
            if not binders:
                self.__fail(f"Expected a binder after '{keyword.text}'", self.__peek())
            self.__expect(",")
            body = self.__term()
        finally:
            del self.__bs[len(self.__bs) - len(binders):]
        node = Lam if is_lambda else Pi
        for binding in reversed(binders):
            body = node(binding.name, binding.binder_info, binding.type, body)
        return body

    def __binder_names(self) -> 'list[str]':
        names = []
        while self.__peek().kind == Token.IDENT:
            names.append(self.__advance().text)
        if not names:
            self.__fail("Expected a binder name", self.__peek())
        return names

    # names

    def __resolve(self, token: Token) -> Expr:
        name = token.text
        for position in range(len(self.__bs) - 1, -1, -1):
            if self.__bs[position].name == name:
                return BoundVar(len(self.__bs) - 1 - position)
        for hyp in reversed(self.__hyps):
            if hyp.name == name:
                return hyp
        if name == HOLE_NAME:
            return HOLE
        if self.__env is not None and name in self.__env:
            return Const(name)
        raise UnknownConstantErr(name, byte_offset(self.__src, token.pos))

    def __notation(self, name: str, token: Token) -> Const:
        if self.__env is None or name not in self.__env:
            raise UnknownConstantErr(name, byte_offset(self.__src, token.pos))
        return Const(name)

    def __head_type(self, head: Expr) -> Optional[Expr]:
        if isinstance(head, Const):
            decl = self.__env.get(head.name) if self.__env is not None else None
            return decl.type if decl else None
        if isinstance(head, FreeVar):
            return head.type
        if isinstance(head, BoundVar):
            return SubtermContext(tuple(self.__bs)).type_of(head.index)
        return None

    def __insert_metas(self, head: Expr, args: 'list[Expr]') -> Expr:
        ret_val = head
        remaining = list(args)
        telescope = self.__head_type(head)
        while isinstance(telescope, Pi):
            if telescope.binder_info is not BinderInfo.EXPLICIT:
                meta = MetaVar(self.__next_meta)
                self.meta_infos[meta.id] = telescope.binder_info
                self.__next_meta += 1
                ret_val = App(ret_val, meta)
            elif remaining:
                ret_val = App(ret_val, remaining.pop(0))
            else:
                break
            telescope = telescope.body
        return mk_app(ret_val, remaining)


def parse_expr(src: str, env: Environment, ctx: SubtermContext = None, hyps: 'list[FreeVar]' = None,
               insert_implicits: bool = False) -> Expr:
    """Parse surface syntax into a well-scoped expression"""

    return ExprParser(src, env, ctx, hyps, insert_implicits).parse()
