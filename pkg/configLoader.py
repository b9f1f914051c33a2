import json

from errors import ConfigError
from schema import TUnion


class ConfigLoader():
    """Reads and writes run configurations; the "type" key selects the registered schema"""

    def __init__(self):
        self.schema = TUnion({})

    def registerType(self, dtype):
        self.schema.dtypes[dtype.dtypes['type_'].default] = dtype

    def loadFile(self, fp, default_type=None):
        try:
            data = json.load(fp)
        except ValueError as e:
            raise ConfigError("Invalid JSON in configuration: {}".format(e))
        return self.loadData(data, default_type)

    def loadString(self, value, default_type=None):
        try:
            data = json.loads(value)
        except ValueError as e:
            raise ConfigError("Invalid JSON in configuration: {}".format(e))
        return self.loadData(data, default_type)

    def loadData(self, value, default_type=None):
        if not isinstance(value, dict):
            raise ConfigError("Configuration must be a JSON object")
        if default_type is not None and self.schema.key not in value:
            value = dict(value)
            value[self.schema.key] = default_type
        return self.schema(value)

    def saveFile(self, fp, data):
        json.dump(data.serialize(), fp, indent=4, separators=(',', ': '))

    def saveString(self, data):
        return json.dumps(data.serialize(), indent=4, separators=(',', ': '))
