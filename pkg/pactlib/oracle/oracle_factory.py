from pactlib.exception import UsageErr
from pactlib.kernel import Environment
from pactlib.logger import ILogger
from pactlib.utility import DictEx, ValueParser
from ..oracle.oracle import Oracle
from ..oracle.refl_oracle import ReflOracle
from ..oracle.remote_oracle import RemoteOracle
from ..oracle.scripted_oracle import ScriptedOracle
from ..oracle.tidy_oracle import TidyOracle


class OracleFactory:
    """Create oracle from a backend spec `tidy|refl|scripted:<file>|remote:<url>`"""

    @staticmethod
    def create(backend: str, env: Environment = None, options: DictEx = None, logger: ILogger = None) -> Oracle:
        options = options if options is not None else DictEx()
        kind, _, argument = (backend or "tidy").partition(":")
        if kind == "tidy" and not argument:
            return TidyOracle()
        if kind == "refl" and not argument:
            return ReflOracle()
        if kind == "scripted" and argument:
            if argument.endswith(".json"):
                return ScriptedOracle.from_json(argument)
            if env is None:
                raise UsageErr("A scripted backend needs an environment")
            return ScriptedOracle.from_script_file(argument, env)
        if kind == "remote" and argument:
            return RemoteOracle(
                argument,
                timeout=ValueParser.duration(options.remote_timeout) if options.has("remote_timeout") else 30.0,
                n=int(options.candidates_per_query or 16),
                retries=int(options.retries or 0),
                logger=logger)
        raise UsageErr(f"Unknown backend '{backend}'", "tidy|refl|scripted:<file>|remote:<url>")
