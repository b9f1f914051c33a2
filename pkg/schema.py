import collections
import collections.abc
import math

from errors import ConfigError

__all__ = [
    'TObject', 'TDict', 'TList', 'TUnion', 'TInt', 'TFloat', 'TString',
]


class T:
    """Field type; calling it validates a raw JSON value"""
    __slots__ = []

    def __call__(self, value=None):
        raise NotImplementedError()


class TDict(T):
    def __init__(self, dtype):
        self.dtype = dtype

    def __call__(self, value=None):
        if value is None:
            value = {}
        if not isinstance(value, collections.abc.Mapping):
            raise ConfigError("Expected an object, got {!r}".format(value))
        return MDict(self.dtype, value)


class TList(T):
    def __init__(self, dtype, default=None, min_length=0):
        self.dtype = dtype
        self.default = list(default) if default is not None else []
        self.min_length = min_length

    def __call__(self, value=None):
        if value is None:
            value = self.default
        if isinstance(value, (str, bytes)) or not isinstance(value, collections.abc.Iterable):
            raise ConfigError("Expected a list, got {!r}".format(value))
        result = MList(self.dtype, value)
        if len(result) < self.min_length:
            raise ConfigError("List needs at least {} item(s)".format(self.min_length))
        return result


class TUnion(T):
    """Builds the TObject registered under the value of `key`"""

    def __init__(self, dtypes, key="type"):
        self.dtypes = dtypes
        self.key = key

    def __call__(self, value=None):
        if not isinstance(value, collections.abc.Mapping) or self.key not in value:
            raise ConfigError("Missing '{}' key".format(self.key))
        name = value[self.key]
        if name not in self.dtypes:
            raise ConfigError("Unknown {} '{}'".format(self.key, name))
        return self.dtypes[name](value)


class TInt(T):
    def __init__(self, default=0, minimum=None, maximum=None):
        self.default = default
        self.minimum = minimum
        self.maximum = maximum

    def __call__(self, value=None):
        if value is None:
            value = self.default
        try:
            whole = int(value)
        except (TypeError, ValueError, OverflowError):
            whole = None
        if isinstance(value, bool) or whole is None or whole != value:
            raise ConfigError("Expected an integer, got {!r}".format(value))
        if self.minimum is not None and whole < self.minimum:
            raise ConfigError("Value {} below minimum {}".format(whole, self.minimum))
        if self.maximum is not None and whole > self.maximum:
            raise ConfigError("Value {} above maximum {}".format(whole, self.maximum))
        return MInt(whole)


class TFloat(T):
    def __init__(self, default=0.0, minimum=-math.inf, maximum=math.inf,
                 allow_none=False):
        self.default = default
        self.minimum = minimum
        self.maximum = maximum
        self.allow_none = allow_none

    def __call__(self, value=None):
        if value is None:
            value = self.default
        if value is None:
            if self.allow_none:
                return None
            raise ConfigError("Value required")
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ConfigError("Expected a number, got {!r}".format(value))
        if math.isnan(value) or not self.minimum <= value <= self.maximum:
            raise ConfigError("Value {} out of range [{}, {}]".format(
                value, self.minimum, self.maximum))
        return MFloat(value)


class TString(T):
    def __init__(self, default="", choices=None):
        self.default = default
        self.choices = choices

    def __call__(self, value=None):
        if value is None:
            value = self.default
        value = str(value)
        if self.choices is not None and value not in self.choices:
            raise ConfigError("'{}' is not one of {}".format(value, ', '.join(self.choices)))
        return MString(value)


class Field:
    """Validating attribute for one declared TObject field"""
    __slots__ = ['attr']

    def __init__(self, attr):
        self.attr = attr

    def __get__(self, instance, owner=None):
        if instance is None:
            return self
        return instance._values[self.attr]

    def __set__(self, instance, value):
        instance._values[self.attr] = instance.dtypes[self.attr](value)


class TObjectMeta(type):
    def __new__(cls, name, bases, dct):
        dtypes = collections.OrderedDict()
        for base in bases:
            dtypes.update(getattr(base, 'dtypes', {}))
        for attr, value in dct.items():
            if isinstance(value, T):
                dtypes[attr] = value
        for attr in dtypes:
            dct[attr] = Field(attr)
        dct['dtypes'] = dtypes
        return super().__new__(cls, name, bases, dct)


def json_key(attr):
    # type_ is stored as "type"
    return attr.rstrip('_')


class TObject(metaclass=TObjectMeta):
    """
    A JSON object with declared fields. Keys that no field claims are kept
    as extras and written back by serialize().
    """

    def __init__(self, data=None):
        if isinstance(data, TObject):
            data = data.serialize()
        data = dict(data or {})
        self._values = collections.OrderedDict()
        for attr, dtype in self.dtypes.items():
            self._values[attr] = dtype(data.pop(json_key(attr), None))
        self._extras = data

    def serialize(self):
        data = dict(self._extras)
        for attr, value in self._values.items():
            data[json_key(attr)] = value.serialize() if value is not None else None
        return data

    def clone(self):
        return type(self)(self)

    def updated(self, **changes):
        """Return a copy with some fields replaced; None values are ignored"""
        data = self.serialize()
        for key, value in changes.items():
            if value is not None:
                data[json_key(key)] = value
        return type(self)(data)


class MDict(collections.abc.Mapping):
    def __init__(self, dtype, items):
        self.dtype = dtype
        self._items = collections.OrderedDict((str(k), dtype(v)) for k, v in items.items())

    def __getitem__(self, key):
        return self._items[key]

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def serialize(self):
        return {key: value.serialize() for key, value in self._items.items()}


class MList(collections.abc.Sequence):
    def __init__(self, dtype, items):
        self.dtype = dtype
        self._items = [dtype(item) for item in items]

    def __getitem__(self, index):
        return self._items[index]

    def __len__(self):
        return len(self._items)

    def serialize(self):
        return [item.serialize() for item in self._items]


class MInt(int):
    def serialize(self):
        return int(self)


class MFloat(float):
    def __repr__(self):
        return repr(float(self))

    def serialize(self):
        return float(self)


class MString(str):
    def serialize(self):
        return str(self)
