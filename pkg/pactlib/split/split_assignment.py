import hashlib
from dataclasses import dataclass

from pactlib.exception import EmptyNameErr

TRAIN = "train"
VALID = "valid"
TEST = "test"
BUCKETS = (TRAIN, VALID, TEST)

TRAIN_BOUND = 0.80
VALID_BOUND = 0.85


def hash_name(name: str) -> float:
    """Map a name to a float strictly inside (0, 1), identically on every platform"""

    if not name:
        raise EmptyNameErr()
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    return (int.from_bytes(digest[:8], "big") + 0.5) / 2 ** 64


def bucket_of(value: float) -> str:
    if value < TRAIN_BOUND:
        return TRAIN
    if value < VALID_BOUND:
        return VALID
    return TEST


@dataclass(frozen=True)
class SplitAssignment:
    name: str
    hash01: float
    bucket: str

    @staticmethod
    def of(name: str) -> 'SplitAssignment':
        value = hash_name(name)
        return SplitAssignment(name, value, bucket_of(value))
