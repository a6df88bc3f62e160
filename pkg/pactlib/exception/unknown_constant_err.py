from ..exception.pact_err import PactErr


class UnknownConstantErr(PactErr):
    def __init__(self, name: str, offset: int = None):
        where = f" (at byte {offset})" if offset is not None else ''
        super().__init__('kernel-unknown-constant', f"Unknown identifier '{name}'{where}", {"name": name})
        self.name = name
        self.offset = offset
