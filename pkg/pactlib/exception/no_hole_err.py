from ..exception.pact_err import PactErr


class NoHoleErr(PactErr):
    def __init__(self):
        super().__init__('kernel-no-hole', "Masked term has no PREDICT hole")
