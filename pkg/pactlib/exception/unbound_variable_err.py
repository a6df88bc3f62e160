from ..exception.pact_err import PactErr


class UnboundVariableErr(PactErr):
    def __init__(self, index: int, depth: int):
        super().__init__('kernel-unbound-variable',
                         f"Bound variable #{index} escapes a context of {depth} binders", {"index": index})
        self.index = index
