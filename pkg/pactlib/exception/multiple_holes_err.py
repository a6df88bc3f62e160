from ..exception.pact_err import PactErr


class MultipleHolesErr(PactErr):
    def __init__(self, count: int):
        super().__init__('kernel-multiple-holes', f"Masked term has {count} PREDICT holes", {"count": count})
        self.count = count
