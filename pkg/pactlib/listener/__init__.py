from pactlib.listener.endpoint import Endpoint
from pactlib.listener.mock_oracle_server import MockOracleServer
