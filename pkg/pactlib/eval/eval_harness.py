import asyncio
import signal
from typing import Optional

from pactlib.kernel import Declaration, Environment
from pactlib.logger import ILogger, NoLogger
from pactlib.oracle import Oracle
from pactlib.search import SearchConfig, ToyTacticRunner, best_first_search_async
from ..eval.eval_report import EvalReport
from ..eval.theorem_outcome import TheoremOutcome


def chronological_holdout(env: Environment, cutoff: int) -> 'list[Declaration]':
    """Theorems added at or after cutoff"""

    return [decl for decl in env.theorems() if decl.order_index >= cutoff]


async def run_eval_async(theorems: 'list[Declaration]', oracle: Oracle, cfg: SearchConfig, env: Environment,
                         runs: int = 3, workers: int = 4, env_cutoff: Optional[int] = None,
                         logger: ILogger = None, stop: Optional[asyncio.Event] = None) -> EvalReport:
    """Search every theorem once per run; a set stop event lets running searches finish and starts no new one.

    `workers` bounds the searches in flight on this loop. Their oracle queries overlap, tactics run
    synchronously on the loop.
    """

    if runs < 1 or workers < 1:
        raise ValueError("runs and workers must be positive")
    logger = logger or NoLogger()
    stop = stop or asyncio.Event()
    runner = ToyTacticRunner(env)
    semaphore = asyncio.Semaphore(workers)
    outcomes: 'list[TheoremOutcome]' = []

    async def search_async(decl: Declaration, run: int) -> Optional[TheoremOutcome]:
        async with semaphore:
            if stop.is_set():
                return None
            cutoff = decl.order_index if env_cutoff is None else env_cutoff
            result = await best_first_search_async(runner.root_state(decl, cutoff), oracle, cfg, runner,
                                                   logger, decl.name)
            return TheoremOutcome(decl.name, decl.top_module, run, result.status.value, result.proof,
                                  result.iterations)

    for run in range(runs):
        if stop.is_set():
            break
        oracle.reseed(run)
        results = await asyncio.gather(*(search_async(decl, run) for decl in theorems))
        outcomes.extend(outcome for outcome in results if outcome is not None)
    if stop.is_set():
        logger.warning("eval.interrupted", completed=len(outcomes))
    return EvalReport.aggregate(outcomes, runs, stop.is_set())


def run_eval(theorems: 'list[Declaration]', oracle: Oracle, cfg: SearchConfig, env: Environment, runs: int = 3,
             workers: int = 4, env_cutoff: Optional[int] = None, logger: ILogger = None) -> EvalReport:
    """Blocking evaluation; SIGINT and SIGTERM stop it and mark the report interrupted"""

    async def main_async() -> EvalReport:
        loop = asyncio.get_running_loop()
        stop = asyncio.Event()
        previous = {}
        for sig in (signal.SIGTERM, signal.SIGINT):
            try:
                previous[sig] = signal.signal(sig, lambda sig, _: loop.call_soon_threadsafe(stop.set))
            except ValueError:
                pass
        try:
            return await run_eval_async(theorems, oracle, cfg, env, runs, workers, env_cutoff, logger, stop)
        finally:
            for sig, handler in previous.items():
                signal.signal(sig, handler)
            await oracle.close_async()

    return asyncio.run(main_async())
