from pactlib.exception import UsageErr

HEADER = "theorem"


def parse_scripts(text: str, source: str = "<script>") -> 'dict[str, list[str]]':
    """`theorem <name>` headers each followed by one tactic per line; `#` starts a comment line"""

    ret_val: 'dict[str, list[str]]' = dict()
    current = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == HEADER:
            current = rest.strip()
            if not current:
                raise UsageErr(f"{source}:{line_no}: theorem header without a name")
            ret_val.setdefault(current, [])
        elif current is None:
            raise UsageErr(f"{source}:{line_no}: tactic outside a theorem block")
        else:
            ret_val[current].append(line)
    return ret_val


def load_scripts(path: str) -> 'dict[str, list[str]]':
    try:
        with open(path, "r", encoding="utf-8") as script_file:
            return parse_scripts(script_file.read(), path)
    except OSError as ex:
        raise UsageErr(f"Cannot read script file '{path}': {ex.strerror}") from ex
