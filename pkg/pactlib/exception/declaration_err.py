from ..exception.pact_err import PactErr


class DeclarationErr(PactErr):
    def __init__(self, name: str, reason: str):
        super().__init__('kernel-declaration', f"Declaration '{name}': {reason}", {"name": name})
        self.name = name
