from pactlib.eval.theorem_outcome import TheoremOutcome
from pactlib.eval.eval_report import EvalReport
from pactlib.eval.naming_eval import NamingEval, topk_accuracy, load_naming_evals
from pactlib.eval.eval_harness import chronological_holdout, run_eval_async, run_eval
