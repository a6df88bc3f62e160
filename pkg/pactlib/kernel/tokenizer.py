from pactlib.exception import ParseErr
from ..kernel.token import Token

_SYMBOLS = sorted(["(", ")", "{", "}", "[", "]", ",", ":", "@", "λ", "∀", "Π", "→", "↔", "¬",
                   "∧", "∨", "=", "->", "<->", "…"], key=len, reverse=True)
_NOT_IDENT_LETTERS = {"λ", "Π", "Σ"}
_IDENT_EXTRA = {"_", ".", "'"}


def is_ident_start(ch: str) -> bool:
    return (ch.isalpha() and ch not in _NOT_IDENT_LETTERS) or ch == "_"


def is_ident_part(ch: str) -> bool:
    return (ch.isalnum() and ch not in _NOT_IDENT_LETTERS) or ch in _IDENT_EXTRA


def byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


def tokenize(src: str) -> 'list[Token]':
    """Split surface syntax into identifier and symbol tokens"""

    ret_val = []
    pos = 0
    length = len(src)
    while pos < length:
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if is_ident_start(ch):
            start = pos
            pos += 1
            while pos < length and is_ident_part(src[pos]):
                pos += 1
            text = src[start:pos]
            while text.endswith("."):
                text = text[:-1]
                pos -= 1
            ret_val.append(Token(Token.IDENT, text, start))
            continue
        for symbol in _SYMBOLS:
            if src.startswith(symbol, pos):
                ret_val.append(Token(Token.SYMBOL, symbol, pos))
                pos += len(symbol)
                break
        else:
            raise ParseErr(f"Unexpected character '{ch}'", byte_offset(src, pos), src)
    ret_val.append(Token(Token.EOF, "", length))
    return ret_val
