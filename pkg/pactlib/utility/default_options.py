import math

from pactlib.utility.dict_ex import DictEx

DEFAULT_OPTIONS = DictEx({
    # search
    "w_max": 16,
    "d_max": 128,
    "max_iterations": 512,
    "tactic_timeout": 5.0,
    "global_timeout": 600.0,
    "candidates_per_query": 16,
    # extraction
    "min_subterm_size": 1,
    "skip_sorts": True,
    "emit_verbose": True,
    "max_depth": None,
    "dedup_premises": False,
    # task codec
    "upper_case_labels": False,
    "premise_type_in_prompt": True,
    "neg_ratio": None,
    "seed": 0,
    "concat": False,
    # evaluation
    "runs": 3,
    "workers": 4,
    "backend": "tidy",
    "cutoff": None,
    # remote oracle
    "remote_timeout": 30.0,
    "retries": 0,
    # mock oracle server
    "failure_rate": 0.0,
    # scan
    "chunk_size": 1 << 20,
    "normalize_ws": False,
    # logging
    "logger": "console",
    "log_level": "info",
})

UNBOUNDED = math.inf
