from enum import Enum


class SortLevel(Enum):
    PROP = "Prop"
    TYPE = "Type"
