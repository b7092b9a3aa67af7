import dataclasses
from typing import Optional, Any, Dict
from vkh.exceptions import InvalidValueError

SUBCOMMANDS = ('bracket', 'jones', 'ujones', 'kh', 'ukh', 'lee', 'decompose', 'invariants', 'selftest', 'fixtures')
FORMATS = ('text', 'json')


def _int_option(value: Any, name: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise InvalidValueError('Option {} expects an integer, got "{}".'.format(name, value)) from e


@dataclasses.dataclass(frozen=True)
class Request:
    subcommand: str
    input: Optional[str] = None
    path: Optional[str] = None
    fixture: Optional[str] = None
    ring: str = 'z'
    scheme: str = 'multicore'
    format: str = 'text'
    incorporate_sign: bool = False
    debug_dump: bool = False
    jobs: Optional[int] = None
    random_count: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidValueError('Unknown subcommand "{}".'.format(self.subcommand))
        if self.format not in FORMATS:
            raise InvalidValueError('Unknown output format "{}", expected text or json.'.format(self.format))
        if self.random_count < 0:
            raise InvalidValueError('Random diagram count must not be negative.')

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> 'Request':
        subcommand = next((name for name in SUBCOMMANDS if options.get(name)), None)
        if subcommand is None:
            raise InvalidValueError('No subcommand given.')
        jobs = options.get('--jobs')
        return cls(
            subcommand=subcommand,
            input=options.get('--input'),
            path=options.get('<path>'),
            fixture=options.get('--fixture'),
            ring=(options.get('--ring') or 'z').lower(),
            scheme=(options.get('--scheme') or 'multicore').lower(),
            format=(options.get('--format') or 'text').lower(),
            incorporate_sign=bool(options.get('--incorporate-sign')),
            debug_dump=bool(options.get('--debug-dump')),
            jobs=_int_option(jobs, '--jobs') if jobs is not None else None,
            random_count=_int_option(options.get('--random') or 0, '--random'),
            seed=_int_option(options.get('--seed') or 0, '--seed')
        )
