from dataclasses import dataclass

from pactlib.exception import TacticParseErr
from pactlib.kernel import ARROW_BINDER_NAME

NO_ARGUMENT = ("assumption", "split", "left", "right", "refl", "tauto!")
TERM_ARGUMENT = ("exact", "apply")
NAME_ARGUMENT = ("intro", "intros")
ALIASES = {"fsplit": "split", "tactic.intros1": "intros1"}


@dataclass(frozen=True)
class TacticCommand:
    name: str
    term: str = ""
    names: 'tuple[str, ...]' = ()


def split_chain(command: str) -> 'list[str]':
    """Split `t; s; u` at top-level semicolons"""

    parts = []
    depth = 0
    start = 0
    for index, ch in enumerate(command):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == ";" and depth == 0:
            parts.append(command[start:index])
            start = index + 1
    parts.append(command[start:])
    return [part.strip() for part in parts]


def parse_tactic(command: str) -> TacticCommand:
    text = command.strip()
    if not text:
        raise TacticParseErr(command, "empty tactic")
    head, _, rest = text.partition(" ")
    rest = rest.strip()
    name = ALIASES.get(head, head)
    if name in NO_ARGUMENT or name == "intros1":
        if rest:
            raise TacticParseErr(command, f"'{head}' takes no argument")
        return TacticCommand(name)
    if name in TERM_ARGUMENT:
        if not rest:
            raise TacticParseErr(command, f"'{head}' expects a term")
        return TacticCommand(name, term=rest)
    if name in NAME_ARGUMENT:
        names = tuple(ARROW_BINDER_NAME if n == "_" else n for n in rest.split())
        if name == "intro" and len(names) > 1:
            raise TacticParseErr(command, "'intro' takes at most one name")
        return TacticCommand(name, names=names)
    raise TacticParseErr(command, f"unknown tactic '{head}'")
