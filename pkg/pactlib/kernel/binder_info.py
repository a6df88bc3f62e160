from enum import Enum


class BinderInfo(Enum):
    """How an argument is supplied at application sites"""

    EXPLICIT = "explicit"
    IMPLICIT = "implicit"
    INSTANCE = "instance"

    @property
    def brackets(self) -> 'tuple[str, str]':
        if self is BinderInfo.IMPLICIT:
            return ("{", "}")
        if self is BinderInfo.INSTANCE:
            return ("[", "]")
        return ("(", ")")

    @property
    def is_explicit(self) -> bool:
        return self is BinderInfo.EXPLICIT

    @staticmethod
    def from_bracket(opening: str) -> 'BinderInfo':
        if opening == "{":
            return BinderInfo.IMPLICIT
        if opening == "[":
            return BinderInfo.INSTANCE
        return BinderInfo.EXPLICIT
