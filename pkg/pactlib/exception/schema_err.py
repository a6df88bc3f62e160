from ..exception.pact_err import PactErr


class SchemaErr(PactErr):
    def __init__(self, field: str, line: int, reason: str = "missing"):
        super().__init__('extract-schema', f"Field '{field}' {reason} (line {line})",
                         {"field": field, "line": line})
        self.field = field
        self.line = line
