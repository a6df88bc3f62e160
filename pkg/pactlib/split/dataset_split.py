import json
from pathlib import Path
from typing import Iterable

from pactlib.exception import MissingNameErr, SchemaErr
from pactlib.logger import ILogger, NoLogger
from ..split.split_assignment import BUCKETS, SplitAssignment


def _name_of(record, line: int = None) -> str:
    name = record.get("decl_nm") if isinstance(record, dict) else getattr(record, "decl_nm", None)
    if not name:
        raise MissingNameErr(line)
    return name


def split_dataset(records: Iterable) -> 'dict[str, list]':
    """Route records to train/valid/test by the hash of their declaration name, keeping input order"""

    ret_val = {bucket: [] for bucket in BUCKETS}
    cache = {}
    for line, record in enumerate(records, start=1):
        name = _name_of(record, line)
        if name not in cache:
            cache[name] = SplitAssignment.of(name).bucket
        ret_val[cache[name]].append(record)
    return ret_val


def split_manifest(streams: 'dict[str, list]') -> dict:
    return {
        "counts": {bucket: len(streams[bucket]) for bucket in BUCKETS},
        "names": {bucket: len({_name_of(r) for r in streams[bucket]}) for bucket in BUCKETS},
    }


def _read_records(in_path: str) -> 'list[dict]':
    """JSON objects of a JSON-Lines file; the raw line is kept under `_raw` so it is written back untouched"""

    ret_val = []
    with open(in_path, "r", encoding="utf-8") as in_file:
        for line_no, line in enumerate(in_file, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as ex:
                raise SchemaErr("record", line_no, f"is not valid JSON ({ex.msg})") from ex
            ret_val.append({"decl_nm": _name_of(record, line_no), "_raw": line.rstrip("\n")})
    return ret_val


def split_file(in_path: str, out_prefix: str, logger: ILogger = None) -> dict:
    """Split a JSON-Lines file into `<prefix>.train/valid/test.jsonl` plus `<prefix>.manifest.json`"""

    logger = logger or NoLogger()
    streams = split_dataset(_read_records(in_path))
    Path(out_prefix).parent.mkdir(parents=True, exist_ok=True)
    files = {}
    for bucket in BUCKETS:
        files[bucket] = f"{out_prefix}.{bucket}.jsonl"
        with open(files[bucket], "w", encoding="utf-8") as out_file:
            for record in streams[bucket]:
                out_file.write(record["_raw"] + "\n")
    manifest = split_manifest(streams)
    manifest["files"] = files
    with open(f"{out_prefix}.manifest.json", "w", encoding="utf-8") as manifest_file:
        json.dump(manifest, manifest_file, ensure_ascii=False, indent=2)
    logger.info("split.done", **manifest["counts"])
    return manifest
