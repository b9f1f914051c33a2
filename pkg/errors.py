class BoundsError(Exception):
    """Root of all errors raised by the library. `code` is machine readable."""
    code = "error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def to_record(self):
        return {"error": self.code, "message": str(self)}


class DomainError(BoundsError, ValueError):
    code = "out_of_range"


class StateError(BoundsError, ValueError):
    code = "invalid_state"


class ConfigError(BoundsError, ValueError):
    code = "invalid_config"
