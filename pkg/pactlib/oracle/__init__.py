from pactlib.oracle.oracle import Oracle
from pactlib.oracle.tidy_oracle import TidyOracle, TIDY_DEFAULT_TACTICS
from pactlib.oracle.refl_oracle import ReflOracle
from pactlib.oracle.scripted_oracle import ScriptedOracle
from pactlib.oracle.remote_oracle import RemoteOracle, KEYWORD, CANDIDATES_PATH
from pactlib.oracle.oracle_factory import OracleFactory


def tidy_oracle() -> Oracle:
    return TidyOracle()


def refl_oracle() -> Oracle:
    return ReflOracle()


def scripted_oracle(table: 'dict[str, list[tuple[str, float]]]') -> Oracle:
    return ScriptedOracle(table)


def remote_oracle(endpoint: str, timeout: float = 30.0, n: int = 16) -> Oracle:
    return RemoteOracle(endpoint, timeout, n)
