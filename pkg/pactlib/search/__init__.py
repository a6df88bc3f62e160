from pactlib.search.goal import Goal
from pactlib.search.tactic_state import TacticState
from pactlib.search.search_node import SearchNode
from pactlib.search.search_config import SearchConfig
from pactlib.search.search_status import SearchStatus
from pactlib.search.search_result import SearchResult
from pactlib.search.elaborator import Elaborator
from pactlib.search.tautology import Tautology, MAX_ATOMS
from pactlib.search.tactic_command import TacticCommand, parse_tactic, split_chain
from pactlib.search.tactic_runner import TacticRunner
from pactlib.search.toy_tactic_runner import ToyTacticRunner, apply_tactic, root_state, record_script
from pactlib.search.best_first_search import best_first_search_async, best_first_search
from pactlib.search.script_file import parse_scripts, load_scripts
