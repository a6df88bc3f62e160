from pactlib.codec.tactic_step import TacticStep
from pactlib.codec.task_example import TaskExample, TASK_MIX, TASK_KEYWORD, KEYWORDS, prompt_keywords
from pactlib.codec.codec_config import CodecConfig
from pactlib.codec.task_codec import (TaskCodec, render_hyps, render_goal, render_tactic_state, encode_proofstep,
                                      encode_naming, derive_tasks, write_tasks, read_tasks)
