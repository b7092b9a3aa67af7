class PDSyntaxError(Exception):
    """Indicates malformed PD text, with the offending character offset."""

    def __init__(self, position: int, message: str):
        super().__init__('{} (at offset {})'.format(message, position))
        self.position = position


class PDArityError(Exception):
    """Indicates a crossing tuple that does not have exactly four entries."""


class InvalidLabelError(Exception):
    """Indicates a non-positive or non-integer arc label."""


class ValidationError(Exception):
    """Indicates a PD code that does not describe a valid oriented diagram."""


class InvalidValueError(Exception):
    """Indicates incorrect value given for an argument or setting."""


class ConsistencyError(Exception):
    """Indicates a failed internal-consistency check."""


class FixtureError(Exception):
    """Indicates an error in a fixture file's format."""
