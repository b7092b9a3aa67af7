import enum
from vkh.exceptions import InvalidValueError


class ParityScheme(enum.Enum):
    MULTICORE = 'multicore'
    FIRSTCORE = 'firstcore'
    ALLONE = 'allone'
    NONE = 'none'

    @classmethod
    def from_name(cls, name: str) -> 'ParityScheme':
        try:
            return cls(name.lower())
        except ValueError as e:
            raise InvalidValueError('Unknown parity scheme "{}", expected one of {}.'.format(name, ', '.join(s.value for s in cls))) from e
