from dataclasses import dataclass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int

    IDENT = "ident"
    SYMBOL = "symbol"
    EOF = "eof"

    def is_symbol(self, *texts: str) -> bool:
        return self.kind == Token.SYMBOL and self.text in texts

    def is_ident(self, *texts: str) -> bool:
        return self.kind == Token.IDENT and (not texts or self.text in texts)
