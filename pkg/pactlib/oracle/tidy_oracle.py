from ..oracle.oracle import Oracle

TIDY_DEFAULT_TACTICS = (
    "refl",
    "exact dec_trivial",
    "assumption",
    "tactic.intros1",
    "tactic.auto_cases",
    "apply_auto_param",
    "dsimp at *",
    "simp at *",
    "ext1",
    "fsplit",
    "injections_and_clear",
    "solve_by_elim",
    "norm_cast",
)


class TidyOracle(Oracle):
    """Constant oracle cycling the tidy waterfall"""

    async def query_async(self, tactic_state: str, n: int) -> 'list[tuple[str, float]]':
        return [(tactic, 0.0) for tactic in TIDY_DEFAULT_TACTICS[:n]]
