from typing import Iterable, Iterator, Optional

from pactlib.exception import DeclarationErr, UnknownConstantErr
from ..kernel.declaration import Declaration
from ..kernel.expr import HOLE_NAME, const_names


class Environment:
    """Ordered, immutable collection of declarations"""

    def __init__(self, decls: 'Iterable[Declaration]' = ()):
        ordered = sorted(decls, key=lambda d: d.order_index)
        self.__decls: 'tuple[Declaration, ...]' = tuple(ordered)
        self.__by_name: 'dict[str, Declaration]' = dict()
        seen_index = set()
        for decl in self.__decls:
            if decl.name in self.__by_name:
                raise DeclarationErr(decl.name, "duplicate name")
            if decl.order_index in seen_index:
                raise DeclarationErr(decl.name, f"duplicate order index {decl.order_index}")
            if decl.name == HOLE_NAME:
                raise DeclarationErr(decl.name, "reserved name")
            seen_index.add(decl.order_index)
            self.__by_name[decl.name] = decl
        for decl in self.__decls:
            self.__check_references(decl)

    def __check_references(self, decl: Declaration):
        names = const_names(decl.type)
        if decl.value is not None:
            names += const_names(decl.value)
        for name in names:
            used = self.__by_name.get(name)
            if used is None:
                raise UnknownConstantErr(name)
            if used.order_index >= decl.order_index:
                raise DeclarationErr(decl.name, f"refers to '{name}' which is not declared before it")

    def get(self, name: str) -> Optional[Declaration]:
        return self.__by_name.get(name)

    def __getitem__(self, name: str) -> Declaration:
        decl = self.__by_name.get(name)
        if decl is None:
            raise UnknownConstantErr(name)
        return decl

    def __contains__(self, name: str) -> bool:
        return name in self.__by_name

    def __iter__(self) -> 'Iterator[Declaration]':
        return iter(self.__decls)

    def __len__(self) -> int:
        return len(self.__decls)

    @property
    def declarations(self) -> 'tuple[Declaration, ...]':
        return self.__decls

    def theorems(self) -> 'list[Declaration]':
        return [decl for decl in self.__decls if decl.is_theorem]

    def is_usable(self, name: str, env_cutoff: Optional[int]) -> bool:
        """True when name exists and precedes env_cutoff (None means no cutoff)"""

        decl = self.__by_name.get(name)
        if decl is None:
            return False
        return env_cutoff is None or decl.order_index < env_cutoff

    @property
    def next_order_index(self) -> int:
        return self.__decls[-1].order_index + 1 if self.__decls else 0

    def extend(self, decls: 'Iterable[Declaration]') -> 'Environment':
        return Environment(list(self.__decls) + list(decls))
