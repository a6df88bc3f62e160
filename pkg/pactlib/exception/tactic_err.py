from ..exception.pact_err import PactErr


class TacticErr(PactErr):
    """Tactic did not advance the proof; the search skips the candidate"""
