from typing import Any, Dict

from ..logger.log_level import LogLevel


class LogObject:
    def __init__(self, event: str, level: int = LogLevel.INFO, **kwargs) -> None:
        self.event = event
        self.level = level
        self.__items: Dict[str, Any] = dict()
        for key, value in kwargs.items():
            self.add_property(key, value)

    def add_property(self, prp_title: str, value: Any):
        self.__items[prp_title] = value

    @property
    def properties(self) -> Dict[str, Any]:
        return self.__items

    def to_dict(self) -> dict:
        ret_val = {"event": self.event, "level": LogLevel.to_name(self.level)}
        ret_val.update(self.__items)
        return ret_val

    def __str__(self) -> str:
        details = " ".join(f"{k}={v}" for k, v in self.__items.items())
        return f"{self.event} {details}".rstrip()
