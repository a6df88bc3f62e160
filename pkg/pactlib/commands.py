"""The pactlib subcommands, registered on a CommandDispatcher"""
import asyncio
import signal
from collections import Counter

from pactlib.codec import TaskCodec, write_tasks
from pactlib.context import CommandContext
from pactlib.dispatcher import CommandDispatcher
from pactlib.eval import chronological_holdout, load_naming_evals, run_eval, topk_accuracy
from pactlib.exception import ExitCodes, UsageErr
from pactlib.extract import extract_environment, ingest_raw_json, serialize_raw_json
from pactlib.listener import Endpoint, MockOracleServer
from pactlib.oracle import OracleFactory
from pactlib.scan import load_patterns, scan
from pactlib.search import ToyTacticRunner, best_first_search_async, load_scripts, record_script
from pactlib.split import split_file
from pactlib.utility import CONTAMINATION_PATTERNS, resolve_data_path

DEFAULT_KS = "1,3,10,16"
DEFAULT_ENDPOINT = "127.0.0.1:8080"


def _parse_ks(text: str) -> 'list[int]':
    try:
        ks = [int(part) for part in str(text).split(",") if part.strip()]
    except ValueError as ex:
        raise UsageErr(f"Invalid --k '{text}'") from ex
    if not ks or min(ks) < 1:
        raise UsageErr(f"Invalid --k '{text}'")
    return ks


def _backend(context: CommandContext) -> str:
    """Backend spec with a scripted file resolved against the bundled data"""

    backend = str(context.options.backend or "tidy")
    kind, _, argument = backend.partition(":")
    if kind == "scripted" and argument:
        return f"{kind}:{resolve_data_path(argument)}"
    return backend


def register_commands(dispatcher: CommandDispatcher) -> CommandDispatcher:

    @dispatcher.command("extract", "--out FILE [--env FILE] [--workers N]", "env", "out")
    def extract(context: CommandContext) -> dict:
        env = context.environment()
        out = context.require("out")
        records = extract_environment(env, context.extraction_config(), int(context.options.workers),
                                      context.logger)
        count = serialize_raw_json(records, out)
        return {"theorems": len(env.theorems()), "datapoints": count, "out": out}

    @dispatcher.command("tasks", "--in FILE --out FILE [--scripts FILE] [--env FILE] [--concat]",
                        "in", "out", "scripts", "env")
    def tasks(context: CommandContext) -> dict:
        datapoints = ingest_raw_json(context.data_path("in"))
        out = context.require("out")
        steps = []
        if context.options.scripts:
            env = context.environment()
            for name, tactics in load_scripts(context.data_path("scripts")).items():
                steps.extend(record_script(env[name], tactics, env))
        examples = TaskCodec(context.codec_config(), context.logger).derive_all(datapoints, steps)
        count = write_tasks(examples, out, bool(context.options.concat))
        per_task = Counter(example.task for example in examples)
        return {"examples": count, "perTask": dict(sorted(per_task.items())), "out": out}

    @dispatcher.command("split", "--in FILE --out-prefix PREFIX", "in", "out_prefix")
    def split(context: CommandContext) -> dict:
        return {"manifest": split_file(context.data_path("in"), context.require("out_prefix"), context.logger)}

    @dispatcher.command("prove", "--theorem NAME [--backend SPEC] [--env FILE] [--cutoff N]", "theorem", "env")
    async def prove(context: CommandContext) -> dict:
        env = context.environment()
        decl = env[context.require("theorem")]
        cfg = context.search_config()
        oracle = OracleFactory.create(_backend(context), env, context.options, context.logger)
        runner = ToyTacticRunner(env)
        try:
            result = await best_first_search_async(runner.root_state(decl, context.options.cutoff), oracle, cfg,
                                                   runner, context.logger, decl.name)
        finally:
            await oracle.close_async()
        if not result.is_proved:
            context.exit_code = ExitCodes.FAILURE
        # reports are byte-identical across reruns; wall time is in the search log
        payload = result.to_dict()
        payload.pop("wallTime", None)
        return {"theorem": decl.name, "backend": context.options.backend, **payload}

    @dispatcher.command("eval", "[--backend SPEC] [--runs N] [--workers N] [--cutoff N] [--theorems A,B]",
                        "env", "theorems")
    def evaluate(context: CommandContext) -> dict:
        env = context.environment()
        cutoff = context.options.cutoff
        theorems = env.theorems() if cutoff is None else chronological_holdout(env, int(cutoff))
        if context.options.theorems:
            wanted = {name.strip() for name in str(context.options.theorems).split(",") if name.strip()}
            theorems = [decl for decl in theorems if decl.name in wanted]
        oracle = OracleFactory.create(_backend(context), env, context.options, context.logger)
        report = run_eval(theorems, oracle, context.search_config(), env, int(context.options.runs),
                          int(context.options.workers), None if cutoff is None else int(cutoff), context.logger)
        return {"backend": context.options.backend, **report.to_dict()}

    @dispatcher.command("name-eval", "--candidates FILE [--k 1,3,10,16]", "candidates", "k")
    def name_eval(context: CommandContext) -> dict:
        ks = _parse_ks(context.options.k or DEFAULT_KS)
        evals = load_naming_evals(context.data_path("candidates"))
        accuracy = topk_accuracy(evals, ks)
        return {"rows": len(evals), "topK": {str(k): value for k, value in accuracy.items()}}

    @dispatcher.command("scan", "[--patterns FILE] [--normalize-ws] [--chunk-size BYTES] --corpus PATH ... [PATH ...]",
                        "patterns", "corpus")
    def scan_corpus(context: CommandContext) -> dict:
        paths = list(context.options.corpus or []) + context.args
        if not paths:
            raise UsageErr("Missing --corpus", context.dispatcher.usage(context.command))
        patterns = load_patterns(context.data_path("patterns", CONTAMINATION_PATTERNS))
        report = scan(paths, patterns, int(context.options.chunk_size), int(context.options.workers),
                      bool(context.options.normalize_ws), context.logger)
        return report.to_dict()

    @dispatcher.command("serve", "[--endpoint HOST:PORT] [--backend SPEC] [--failure-rate P] [--seed N]",
                        "endpoint", "env")
    async def serve(context: CommandContext) -> dict:
        env = context.environment()
        oracle = OracleFactory.create(_backend(context), env, context.options, context.logger)
        try:
            server = MockOracleServer(oracle, float(context.options.failure_rate), int(context.options.seed or 0),
                                      context.logger)
        except ValueError as ex:
            raise UsageErr(str(ex), context.dispatcher.usage(context.command)) from ex
        endpoint = Endpoint(str(context.options.endpoint or DEFAULT_ENDPOINT))
        stop = asyncio.Event()
        loop = asyncio.get_running_loop()
        for sig in (signal.SIGINT, signal.SIGTERM):
            try:
                loop.add_signal_handler(sig, stop.set)
            except (NotImplementedError, RuntimeError):
                pass
        try:
            await server.run_async(endpoint, stop)
        finally:
            await oracle.close_async()
        return {"endpoint": str(endpoint), "requests": server.requests, "failed": server.failed}

    return dispatcher
