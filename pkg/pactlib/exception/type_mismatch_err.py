from ..exception.pact_err import PactErr


class TypeMismatchErr(PactErr):
    def __init__(self, expected: str, actual: str, path: 'list[str]' = None):
        super().__init__(
            'kernel-type-mismatch',
            f"Type mismatch at /{'/'.join(path or [])}: expected {expected}, got {actual}",
            {"expected": expected, "actual": actual, "path": list(path or [])})
        self.expected = expected
        self.actual = actual
        self.path = list(path or [])
