from pactlib.utility.dict_ex import DictEx
from pactlib.utility.value_parser import ValueParser
from pactlib.utility.default_options import DEFAULT_OPTIONS, UNBOUNDED
from pactlib.utility.config_file import ConfigFile
from pactlib.utility.data_files import (DATA_DIR, TOY_ENVIRONMENT, TOY_SCRIPTS, CONTAMINATION_PATTERNS,
                                        resolve_data_path)
