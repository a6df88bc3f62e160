import pytest

from pactlib.extract import ingest_raw_json
from pactlib.kernel import load_environment
from pactlib.search import ToyTacticRunner, load_scripts
from pactlib.utility import DATA_DIR, TOY_ENVIRONMENT, TOY_SCRIPTS

PEIRCE_RAW = str(DATA_DIR / "peirce_raw.jsonl")


@pytest.fixture(scope="session")
def env():
    return load_environment(str(TOY_ENVIRONMENT))


@pytest.fixture(scope="session")
def peirce(env):
    return env["peirce_identity"]


@pytest.fixture(scope="session")
def scripts():
    return load_scripts(str(TOY_SCRIPTS))


@pytest.fixture
def runner(env):
    return ToyTacticRunner(env)


@pytest.fixture
def raw_datapoints():
    return ingest_raw_json(PEIRCE_RAW)
