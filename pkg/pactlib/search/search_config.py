import math
from dataclasses import dataclass

from pactlib.utility import DictEx, ValueParser


@dataclass(frozen=True)
class SearchConfig:
    """Search limits; `math.inf` disables w_max, d_max and the two timeouts"""

    w_max: 'int|float' = 16
    d_max: 'int|float' = 128
    max_iterations: int = 512
    tactic_timeout: float = 5.0
    global_timeout: float = 600.0
    candidates_per_query: int = 16

    def __post_init__(self):
        if self.w_max < 0 or self.d_max < 0:
            raise ValueError("w_max and d_max must be nonnegative")
        if self.max_iterations < 1 or self.candidates_per_query < 1:
            raise ValueError("max_iterations and candidates_per_query must be positive")
        if self.tactic_timeout <= 0 or self.global_timeout <= 0:
            raise ValueError("timeouts must be positive")

    @staticmethod
    def unbounded(**kwargs) -> 'SearchConfig':
        values = dict(w_max=math.inf, d_max=math.inf, max_iterations=1 << 30, tactic_timeout=math.inf,
                      global_timeout=math.inf)
        values.update(kwargs)
        return SearchConfig(**values)

    @staticmethod
    def from_options(options: DictEx) -> 'SearchConfig':
        defaults = SearchConfig()
        return SearchConfig(
            w_max=ValueParser.limit(options.w_max) if options.has("w_max") else defaults.w_max,
            d_max=ValueParser.limit(options.d_max) if options.has("d_max") else defaults.d_max,
            max_iterations=int(options.max_iterations or defaults.max_iterations),
            tactic_timeout=ValueParser.duration(options.tactic_timeout)
            if options.has("tactic_timeout") else defaults.tactic_timeout,
            global_timeout=ValueParser.duration(options.global_timeout)
            if options.has("global_timeout") else defaults.global_timeout,
            candidates_per_query=int(options.candidates_per_query or defaults.candidates_per_query))
