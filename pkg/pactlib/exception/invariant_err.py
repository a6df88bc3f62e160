from ..exception.pact_err import PactErr


class InvariantErr(PactErr):
    def __init__(self, reason: str, line: int = None):
        where = f" (line {line})" if line is not None else ''
        super().__init__('extract-invariant', f"{reason}{where}", {"line": line})
        self.line = line
