import asyncio
import json
import math

import aiohttp

from pactlib.logger import ILogger, NoLogger
from ..oracle.oracle import Oracle

KEYWORD = "PROOFSTEP"
CANDIDATES_PATH = "/candidates"


class RemoteOracle(Oracle):
    """Queries a model server over HTTP; transport failures yield no candidates"""

    def __init__(self, endpoint: str, timeout: float = 30.0, n: int = 16, retries: int = 0,
                 backoff: float = 0.1, logger: ILogger = None):
        self.__url = endpoint.rstrip("/") + CANDIDATES_PATH if not endpoint.endswith(CANDIDATES_PATH) else endpoint
        self.timeout = timeout
        self.n = n
        self.retries = retries
        self.backoff = backoff
        self.logger = logger or NoLogger()
        self.failures = 0

    @property
    def url(self) -> str:
        return self.__url

    async def query_async(self, tactic_state: str, n: int = None) -> 'list[tuple[str, float]]':
        count = min(n, self.n) if n is not None else self.n
        request = {"tactic_state": tactic_state, "n": count, "keyword": KEYWORD}
        for attempt in range(self.retries + 1):
            if attempt:
                await asyncio.sleep(self.backoff * 2 ** (attempt - 1))
            try:
                candidates = await self.__post_async(request)
            except (aiohttp.ClientError, asyncio.TimeoutError, ValueError) as ex:
                self.failures += 1
                self.logger.warning("oracle.remote.failure", url=self.__url, attempt=attempt,
                                    error=f"{type(ex).__name__}: {ex}")
                continue
            candidates.sort(key=lambda c: -c[1])
            return candidates[:count]
        return []

    async def __post_async(self, request: dict) -> 'list[tuple[str, float]]':
        timeout = aiohttp.ClientTimeout(total=None if math.isinf(self.timeout) else self.timeout)
        async with aiohttp.ClientSession(timeout=timeout) as session:
            async with session.post(self.__url, json=request) as response:
                if response.status != 200:
                    raise ValueError(f"status {response.status}")
                body = await response.text()
        return RemoteOracle.parse_response(body)

    @staticmethod
    def parse_response(body: str) -> 'list[tuple[str, float]]':
        """Candidates of a response body; ValueError when malformed"""

        data = json.loads(body)
        if not isinstance(data, dict) or not isinstance(data.get("candidates"), list):
            raise ValueError("response has no candidate list")
        ret_val = []
        for item in data["candidates"]:
            if not isinstance(item, dict):
                raise ValueError("candidate is not an object")
            text, logprob = item.get("text"), item.get("logprob")
            if not isinstance(text, str) or isinstance(logprob, bool) or not isinstance(logprob, (int, float)):
                raise ValueError("candidate needs a text and a numeric logprob")
            ret_val.append((text, float(logprob)))
        return ret_val
