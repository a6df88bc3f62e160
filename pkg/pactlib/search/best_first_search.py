import asyncio
import heapq
import math
import time
from typing import Any, Optional

from pactlib.exception import TacticErr
from pactlib.logger import ILogger, NoLogger
from ..search.search_config import SearchConfig
from ..search.search_node import SearchNode
from ..search.search_result import SearchResult
from ..search.search_status import SearchStatus
from ..search.tactic_runner import TacticRunner


async def best_first_search_async(root: Any, oracle, cfg: SearchConfig, runner: TacticRunner,
                                  logger: ILogger = None, name: str = "") -> SearchResult:
    """Expand the highest scoring node until the goals are closed, the queue empties or a limit is hit"""

    logger = logger or NoLogger()
    started = time.monotonic()
    deadline = started + cfg.global_timeout if not math.isinf(cfg.global_timeout) else None
    tactic_timeout = None if math.isinf(cfg.tactic_timeout) else cfg.tactic_timeout
    seq = 0
    root_node = SearchNode(root, 0, 0.0, seq)
    root_key = runner.serialize(root)
    result = SearchResult(SearchStatus.EXHAUSTED, None, 0, 0, 0.0)
    if runner.is_solved(root):
        result.status, result.proof = SearchStatus.PROVED, []
        return _finish(result, started, logger, name)
    queue = [(root_node.sort_key(), root_node)]
    visited = {root_key}
    while queue:
        if result.iterations >= cfg.max_iterations:
            result.status = SearchStatus.BUDGET_EXCEEDED
            break
        if deadline is not None and time.monotonic() > deadline:
            result.status = SearchStatus.TIMED_OUT
            break
        _, node = heapq.heappop(queue)
        result.iterations += 1
        result.nodes_expanded += 1
        result.max_depth_expanded = max(result.max_depth_expanded, node.depth)
        state_key = runner.serialize(node.state)
        result.trace.append(state_key)
        candidates = await oracle.query_async(state_key, cfg.candidates_per_query)
        for text, score in candidates[:cfg.candidates_per_query]:
            if node.depth + 1 > cfg.d_max or len(queue) > cfg.w_max:
                continue
            try:
                child_state = runner.run(node.state, text, tactic_timeout)
            except TacticErr:
                continue
            child_key = runner.serialize(child_state)
            if child_key in visited:
                continue
            visited.add(child_key)
            seq += 1
            child = SearchNode(child_state, node.depth + 1, node.score + score, seq, node, text)
            if runner.is_solved(child_state):
                result.status, result.proof = SearchStatus.PROVED, child.proof()
                return _finish(result, started, logger, name)
            heapq.heappush(queue, (child.sort_key(), child))
            result.max_queue_size = max(result.max_queue_size, len(queue))
        await asyncio.sleep(0)
    return _finish(result, started, logger, name)


def _finish(result: SearchResult, started: float, logger: ILogger, name: str) -> SearchResult:
    result.wall_time = time.monotonic() - started
    logger.info("search.done", theorem=name, status=result.status.value, iterations=result.iterations,
                wall_time=round(result.wall_time, 6))
    return result


def best_first_search(root: Any, oracle, cfg: SearchConfig, runner: TacticRunner,
                      logger: Optional[ILogger] = None, name: str = "") -> SearchResult:
    return asyncio.run(best_first_search_async(root, oracle, cfg, runner, logger, name))
