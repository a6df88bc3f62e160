import json
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, Optional

from pactlib.exception import DeclarationErr, SchemaErr, UnknownConstantErr
from pactlib.kernel import (EMPTY_CONTEXT, HOLE, HOLE_NAME, PRETTY, VERBOSE, BoundVar, Const, Declaration, Environment,
                            Expr, ExprPrinter, FreeVar, Sort, SubtermContext, TypeChecker, expr_size, free_names,
                            get_app_fn, has_loose_bvar, replace_at, subterms, truncate)
from pactlib.logger import ILogger, NoLogger
from ..extract.extraction_config import ExtractionConfig
from ..extract.raw_datapoint import RawDatapoint


class PactExtractor:
    """Walk proof terms and record one datapoint per eligible subterm"""

    def __init__(self, env: Environment, cfg: ExtractionConfig = None, logger: ILogger = None):
        self.env = env
        self.cfg = cfg or ExtractionConfig()
        self.logger = logger or NoLogger()
        self.__checker = TypeChecker(env)
        self.__pretty = ExprPrinter(PRETTY, env)
        self.__verbose = ExprPrinter(VERBOSE, env)

    def premises_of(self, decl: Declaration) -> 'list[list[str]]':
        """Lemmas referenced by the proof term, in reverse pre-order of occurrence"""

        if decl.value is None:
            raise DeclarationErr(decl.name, "has no proof term")
        names = []
        for sub, ctx in subterms(decl.value):
            if ctx.in_binder_type or not isinstance(sub, Const):
                continue
            used = self.env.get(sub.name)
            if used is None:
                raise UnknownConstantErr(sub.name)
            if self.__checker.is_proposition(used.type):
                names.append(sub.name)
        names.reverse()
        if self.cfg.dedup_premises:
            names = list(dict.fromkeys(names))
        return [[name, self.__pretty.print(self.env[name].type)] for name in names]

    def extract(self, decl: Declaration) -> 'list[RawDatapoint]':
        if decl.value is None:
            raise DeclarationErr(decl.name, "has no proof term")
        premises = self.premises_of(decl)
        decl_tp = self.__pretty.print(decl.type)
        ret_val = []
        for sub, ctx in subterms(decl.value):
            if not self.__eligible(sub, ctx):
                continue
            ret_val.append(self.__datapoint(decl, decl_tp, premises, sub, ctx))
        self.logger.debug("extract.declaration", decl=decl.name, datapoints=len(ret_val))
        return ret_val

    def __eligible(self, sub: Expr, ctx: SubtermContext) -> bool:
        if ctx.in_binder_type:
            return False
        if self.cfg.skip_sorts and isinstance(sub, Sort):
            return False
        return expr_size(sub) >= self.cfg.min_subterm_size

    def __print(self, printer: ExprPrinter, e: Expr, ctx: SubtermContext = EMPTY_CONTEXT, keep: str = None) -> str:
        if self.cfg.max_depth is not None:
            e = truncate(e, self.cfg.max_depth, keep)
        return printer.print(e, ctx)

    def __datapoint(self, decl: Declaration, decl_tp: str, premises: 'list[list[str]]', sub: Expr,
                    ctx: SubtermContext) -> RawDatapoint:
        goal = self.__checker.infer(sub, ctx)
        masked = replace_at(decl.value, ctx.path, HOLE)
        # constants only; bound variables are matched by position below
        used = free_names(sub)
        hyps = [[b.name, self.__pretty.print(b.type, ctx.prefix(i))] for i, b in enumerate(ctx.bs)]
        proof_term = self.__print(self.__pretty, sub, ctx)
        result = self.__print(self.__pretty, masked, keep=HOLE_NAME)
        goal_text = self.__pretty.print(goal, ctx)
        # without verbose output the verbose fields mirror the pretty ones
        emit_verbose = self.cfg.emit_verbose
        return RawDatapoint(
            decl_nm=decl.name,
            decl_tp=decl_tp,
            hyps=hyps,
            hyps_mask=[has_loose_bvar(sub, ctx.depth - 1 - i) for i in range(ctx.depth)],
            decl_premises=[list(p) for p in premises],
            decl_premises_mask=[name in used for name, _ in premises],
            goal=goal_text,
            proof_term=proof_term,
            result=result,
            next_lemma=self.__next_lemma(sub, ctx),
            goal_is_prop=self.__checker.is_proposition(goal, ctx),
            verbose_proof_term=self.__print(self.__verbose, sub, ctx) if emit_verbose else proof_term,
            verbose_goal=self.__verbose.print(goal, ctx) if emit_verbose else goal_text,
            verbose_result=self.__print(self.__verbose, masked, keep=HOLE_NAME) if emit_verbose else result,
            verbose_hyps=[[b.name, self.__verbose.print(b.type, ctx.prefix(i))] for i, b in enumerate(ctx.bs)])

    def __next_lemma(self, sub: Expr, ctx: SubtermContext) -> 'Optional[list[str]]':
        head = get_app_fn(sub)
        if isinstance(head, Const):
            decl = self.env.get(head.name)
            if decl is None:
                return None
            return [head.name, self.__pretty.print(decl.type)]
        if isinstance(head, BoundVar):
            return [ctx.name_of(head.index), self.__pretty.print(ctx.type_of(head.index), ctx)]
        if isinstance(head, FreeVar):
            return [head.name, self.__pretty.print(head.type, ctx)]
        return None


def premises_of(decl: Declaration, env: Environment, dedup: bool = False) -> 'list[list[str]]':
    return PactExtractor(env, ExtractionConfig(dedup_premises=dedup)).premises_of(decl)


def extract_decl_datapoints(decl: Declaration, env: Environment, cfg: ExtractionConfig = None) -> 'list[RawDatapoint]':
    return PactExtractor(env, cfg).extract(decl)


def extract_environment(env: Environment, cfg: ExtractionConfig = None, workers: int = 4,
                        logger: ILogger = None) -> 'list[RawDatapoint]':
    """Extract every theorem; output ordered by order index then traversal order"""

    extractor = PactExtractor(env, cfg, logger)
    theorems = env.theorems()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        batches = list(executor.map(extractor.extract, theorems))
    ret_val = [dp for batch in batches for dp in batch]
    extractor.logger.info("extract.done", theorems=len(theorems), datapoints=len(ret_val))
    return ret_val


def ingest_raw_json(path: str) -> 'list[RawDatapoint]':
    """Read JSON-Lines raw datapoints, keeping every string byte-identical"""

    ret_val = []
    with open(path, "r", encoding="utf-8") as raw_file:
        for line_no, line in enumerate(raw_file, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as ex:
                raise SchemaErr("record", line_no, f"is not valid JSON ({ex.msg})") from ex
            ret_val.append(RawDatapoint.from_dict(data, line_no))
    return ret_val


def serialize_raw_json(records: 'Iterable[RawDatapoint]', path: str) -> int:
    count = 0
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as out_file:
        for record in records:
            out_file.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
            count += 1
    return count
