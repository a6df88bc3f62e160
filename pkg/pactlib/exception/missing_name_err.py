from ..exception.pact_err import PactErr


class MissingNameErr(PactErr):
    def __init__(self, line: int = None):
        super().__init__('split-missing-name', f"Record {line} carries no decl_nm", {"line": line})
        self.line = line
