from enum import Enum


class SearchStatus(Enum):
    PROVED = "proved"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budgetExceeded"
    TIMED_OUT = "timedOut"
