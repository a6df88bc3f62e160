from dataclasses import dataclass
from typing import Optional

from pactlib.utility import DictEx


@dataclass(frozen=True)
class ExtractionConfig:
    min_subterm_size: int = 1
    skip_sorts: bool = True
    emit_verbose: bool = True
    max_depth: Optional[int] = None
    dedup_premises: bool = False

    def __post_init__(self):
        if self.min_subterm_size < 0:
            raise ValueError("min_subterm_size must be nonnegative")
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError("max_depth must be positive")

    @staticmethod
    def from_options(options: DictEx) -> 'ExtractionConfig':
        return ExtractionConfig(
            min_subterm_size=int(options.min_subterm_size if options.has("min_subterm_size") else 1),
            skip_sorts=bool(options.skip_sorts if options.has("skip_sorts") else True),
            emit_verbose=bool(options.emit_verbose if options.has("emit_verbose") else True),
            max_depth=options.max_depth,
            dedup_premises=bool(options.dedup_premises or False))
