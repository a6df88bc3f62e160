import asyncio
import itertools
import json

import aiohttp
import pytest
from aiohttp.test_utils import TestServer

from pactlib.eval import run_eval_async
from pactlib.exception import UsageErr
from pactlib.listener import Endpoint, MockOracleServer
from pactlib.oracle import (TIDY_DEFAULT_TACTICS, OracleFactory, ReflOracle, RemoteOracle, ScriptedOracle,
                            TidyOracle, refl_oracle, remote_oracle, scripted_oracle, tidy_oracle)
from pactlib.search import SearchConfig
from pactlib.utility import DictEx, TOY_SCRIPTS

TABLE = {"⊢ true": [("refl", -0.9), ("exact trivial", -0.2), ("simp", -1.5)]}


def test_parse_response():
    body = json.dumps({"candidates": [{"text": "intro h", "logprob": -0.5}, {"text": "simp", "logprob": -2}]})
    assert RemoteOracle.parse_response(body) == [("intro h", -0.5), ("simp", -2.0)]
    for bad in ["[]", "{}", '{"candidates": [1]}', '{"candidates": [{"text": "x"}]}',
                '{"candidates": [{"text": "x", "logprob": true}]}', "not json"]:
        with pytest.raises(ValueError):
            RemoteOracle.parse_response(bad)


def test_remote_url():
    assert RemoteOracle("http://localhost:8080/").url == "http://localhost:8080/candidates"
    assert RemoteOracle("http://localhost:8080/candidates").url == "http://localhost:8080/candidates"


def test_remote_round_trip_through_mock_server():
    async def main():
        server = MockOracleServer(ScriptedOracle(TABLE))
        async with TestServer(server.create_app()) as test_server:
            remote = RemoteOracle(str(test_server.make_url("/")), timeout=5.0)
            best = await remote.query_async("⊢ true", 2)
            unknown = await remote.query_async("⊢ false", 4)
            async with aiohttp.ClientSession() as session:
                async with session.post(remote.url, data="not json") as response:
                    malformed = response.status
        return server, remote, best, unknown, malformed

    server, remote, best, unknown, malformed = asyncio.run(main())
    assert best == [("exact trivial", -0.2), ("refl", -0.9)]
    assert unknown == []
    assert malformed == 400
    assert server.requests == 3
    assert remote.failures == 0


def test_remote_failures_yield_no_candidates():
    async def main():
        server = MockOracleServer(ScriptedOracle(TABLE), failure_rate=1.0)
        async with TestServer(server.create_app()) as test_server:
            remote = RemoteOracle(str(test_server.make_url("/")), timeout=5.0, retries=2, backoff=0.01)
            candidates = await remote.query_async("⊢ true", 2)
        return server, remote, candidates

    server, remote, candidates = asyncio.run(main())
    assert candidates == []
    assert server.failed == 3
    assert remote.failures == 3


def test_unreachable_endpoint():
    remote = RemoteOracle("http://127.0.0.1:1", timeout=2.0)
    assert asyncio.run(remote.query_async("⊢ true", 1)) == []
    assert remote.failures == 1


def test_eval_over_flaky_remote(env):
    theorems = list(itertools.islice(itertools.cycle(env.theorems()), 50))
    scripted = ScriptedOracle.from_script_file(str(TOY_SCRIPTS), env)

    async def main():
        server = MockOracleServer(scripted, failure_rate=0.1, seed=0)
        async with TestServer(server.create_app()) as test_server:
            remote = RemoteOracle(str(test_server.make_url("/")), timeout=5.0)
            report = await run_eval_async(theorems, remote, SearchConfig(), env, runs=1, workers=8)
            await remote.close_async()
        return server, remote, report

    server, remote, report = asyncio.run(main())
    assert len(report.outcomes) == 50
    assert {outcome.status for outcome in report.outcomes} <= {"proved", "exhausted"}
    assert server.requests > 0
    assert remote.failures == server.failed
    assert not report.interrupted


def test_mock_server_validates_failure_rate():
    with pytest.raises(ValueError):
        MockOracleServer(TidyOracle(), failure_rate=1.5)


def test_endpoint_parsing():
    endpoint = Endpoint("0.0.0.0:9000")
    assert (endpoint.url, endpoint.port) == ("0.0.0.0", 9000)
    assert str(Endpoint(":7000")) == "http://127.0.0.1:7000"


def test_constant_oracles():
    assert asyncio.run(TidyOracle().query_async("⊢ true", 3)) == [(t, 0.0) for t in TIDY_DEFAULT_TACTICS[:3]]
    assert asyncio.run(ReflOracle().query_async("⊢ true", 16)) == [("refl", 0.0)]


def test_oracle_constructors():
    assert isinstance(tidy_oracle(), TidyOracle)
    assert isinstance(refl_oracle(), ReflOracle)
    assert asyncio.run(scripted_oracle(TABLE).query_async("⊢ true", 2)) == [("exact trivial", -0.2), ("refl", -0.9)]
    remote = remote_oracle("http://model:8000", timeout=5.0, n=4)
    assert (remote.url, remote.timeout, remote.n, remote.retries) == ("http://model:8000/candidates", 5.0, 4, 0)


def test_oracle_factory(env):
    assert isinstance(OracleFactory.create("tidy"), TidyOracle)
    assert isinstance(OracleFactory.create(None), TidyOracle)
    assert isinstance(OracleFactory.create("refl"), ReflOracle)
    assert isinstance(OracleFactory.create(f"scripted:{TOY_SCRIPTS}", env), ScriptedOracle)
    remote = OracleFactory.create("remote:http://model:8000", options=DictEx(retries=2, remote_timeout="3s"))
    assert isinstance(remote, RemoteOracle)
    assert remote.url == "http://model:8000/candidates"
    assert remote.retries == 2
    assert remote.timeout == 3.0
    with pytest.raises(UsageErr):
        OracleFactory.create(f"scripted:{TOY_SCRIPTS}")
    with pytest.raises(UsageErr):
        OracleFactory.create("gpt")
