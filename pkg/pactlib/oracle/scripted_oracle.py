import json

from pactlib.exception import UsageErr
from pactlib.kernel import Environment
from ..oracle.oracle import Oracle


class ScriptedOracle(Oracle):
    """Answers from a table keyed by exact tactic-state strings"""

    def __init__(self, table: 'dict[str, list[tuple[str, float]]]' = None):
        self.table: 'dict[str, list[tuple[str, float]]]' = {
            state: sorted(((str(text), float(score)) for text, score in candidates), key=lambda c: -c[1])
            for state, candidates in (table or {}).items()
        }

    async def query_async(self, tactic_state: str, n: int) -> 'list[tuple[str, float]]':
        return list(self.table.get(tactic_state, ()))[:n]

    def add(self, tactic_state: str, tactic: str, score: float = 0.0):
        candidates = self.table.setdefault(tactic_state, [])
        if all(text != tactic for text, _ in candidates):
            candidates.append((tactic, score))
            candidates.sort(key=lambda c: -c[1])

    @staticmethod
    def from_scripts(scripts: 'dict[str, list[str]]', env: Environment) -> 'ScriptedOracle':
        """Table mapping every state of each replayed ground-truth script to its tactic"""

        from pactlib.codec import render_tactic_state
        from pactlib.search import record_script
        ret_val = ScriptedOracle()
        for name, tactics in scripts.items():
            for step in record_script(env[name], tactics, env):
                ret_val.add(render_tactic_state(step.goals), step.command)
        return ret_val

    @staticmethod
    def from_script_file(path: str, env: Environment) -> 'ScriptedOracle':
        from pactlib.search import load_scripts
        return ScriptedOracle.from_scripts(load_scripts(path), env)

    @staticmethod
    def from_json(path: str) -> 'ScriptedOracle':
        """JSON object mapping state strings to lists of [tactic, score] pairs"""

        try:
            with open(path, "r", encoding="utf-8") as table_file:
                data = json.load(table_file)
        except (OSError, json.JSONDecodeError) as ex:
            raise UsageErr(f"Cannot read oracle table '{path}': {ex}") from ex
        if not isinstance(data, dict):
            raise UsageErr(f"Oracle table '{path}' must be a JSON object")
        return ScriptedOracle({state: [tuple(pair) for pair in pairs] for state, pairs in data.items()})
