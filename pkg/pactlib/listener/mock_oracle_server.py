import asyncio
import json
import random
from typing import Optional

from aiohttp import web

from pactlib.logger import ILogger, NoLogger
from pactlib.oracle import CANDIDATES_PATH, Oracle
from ..listener.endpoint import Endpoint


class MockOracleServer:
    """Serves the candidate wire protocol from a local oracle, failing a configurable share of requests"""

    def __init__(self, oracle: Oracle, failure_rate: float = 0.0, seed: int = 0, logger: ILogger = None):
        if not 0.0 <= failure_rate <= 1.0:
            raise ValueError("failure_rate must lie in [0, 1]")
        self.oracle = oracle
        self.failure_rate = failure_rate
        self.logger = logger or NoLogger()
        self.__random = random.Random(seed)
        self.requests = 0
        self.failed = 0

    def create_app(self) -> web.Application:
        app = web.Application()
        app.add_routes([web.post(CANDIDATES_PATH, self.__on_candidates_async)])
        return app

    async def __on_candidates_async(self, request: web.Request) -> web.Response:
        self.requests += 1
        if self.__random.random() < self.failure_rate:
            self.failed += 1
            return web.Response(status=503, text="injected failure")
        try:
            body = json.loads(await request.text())
            tactic_state = body["tactic_state"]
            n = int(body.get("n", 16))
        except (ValueError, KeyError, TypeError):
            return web.Response(status=400, text="malformed request")
        candidates = await self.oracle.query_async(tactic_state, n)
        return web.json_response({"candidates": [{"text": text, "logprob": score} for text, score in candidates]})

    async def run_async(self, endpoint: Endpoint, stop: Optional[asyncio.Event] = None):
        """Serve until stop is set or the task is cancelled"""

        runner = web.AppRunner(self.create_app(), handle_signals=False)
        await runner.setup()
        site = web.TCPSite(runner, endpoint.url, endpoint.port)
        await site.start()
        self.logger.info("listener.started", endpoint=str(endpoint))
        try:
            if stop is None:
                while True:
                    await asyncio.sleep(1)
            else:
                await stop.wait()
        except asyncio.CancelledError:
            pass
        finally:
            await runner.cleanup()
            self.logger.info("listener.stopped", endpoint=str(endpoint))
