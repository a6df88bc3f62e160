from ..exception.pact_err import PactErr


class EmptyNameErr(PactErr):
    def __init__(self):
        super().__init__('split-empty-name', "Theorem name is empty")
