import copy


class DictEx(dict):
    """Extended version of dict class for dot.notation access to options"""

    def __init__(self, *args, **kwargs):
        super().__init__()
        for arg in args:
            if isinstance(arg, dict):
                DictEx.fill_from_dic(self, arg)
        if kwargs:
            DictEx.fill_from_dic(self, kwargs)

    def has(self, key: str) -> bool:
        return key in self

    def merge(self, *layers: 'dict') -> 'DictEx':
        """Return a copy overlaid by each layer in turn; None values in a layer are ignored"""

        ret_val = copy.deepcopy(self)
        for layer in layers:
            if layer:
                for k, v in layer.items():
                    if v is not None:
                        ret_val[k] = DictEx.__wrap(v)
        return ret_val

    def reject_unknown(self, known_keys: 'set[str]') -> 'list[str]':
        """Return the sorted keys that are not in known_keys"""

        return sorted(key for key in self.keys() if key not in known_keys)

    @classmethod
    def create(cls, data: dict):
        ret_val = DictEx()
        DictEx.fill_from_dic(ret_val, data)
        return ret_val

    @classmethod
    def fill_from_dic(cls, new, data: dict):
        for k, v in data.items():
            new[k] = DictEx.__wrap(v)

    @classmethod
    def file_from_list(cls, data: list):
        return [DictEx.__wrap(item) for item in data]

    @staticmethod
    def __wrap(value):
        if isinstance(value, DictEx):
            return value
        if isinstance(value, dict):
            return DictEx.create(value)
        if isinstance(value, list):
            return DictEx.file_from_list(value)
        return value

    __getattr__ = dict.get

    def __deepcopy__(self, memo=None):
        return DictEx(copy.deepcopy(dict(self), memo=memo))

    def __copy__(self):
        return DictEx(copy.copy(dict(self)))
