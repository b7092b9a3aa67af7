import os
import dataclasses
from typing import Optional, Union
from vkh.exceptions import InvalidValueError

LOCAL_ORDERS = ('standard', 'transposed')


def _parse_jobs(value: Union[str, int]) -> int:
    try:
        jobs = int(value)
    except (TypeError, ValueError) as e:
        raise InvalidValueError('Invalid job count "{}".'.format(value)) from e
    if jobs < 1:
        raise InvalidValueError('Job count must be at least 1, got {}.'.format(jobs))
    return jobs


@dataclasses.dataclass(frozen=True)
class Settings:
    jobs: int = 1
    debug_checks: bool = False
    local_order: str = 'standard'
    parallel_threshold: int = 14

    def __post_init__(self) -> None:
        if self.local_order not in LOCAL_ORDERS:
            raise InvalidValueError('Unknown local order "{}", expected one of {}.'.format(self.local_order, ', '.join(LOCAL_ORDERS)))
        if self.jobs < 1:
            raise InvalidValueError('Job count must be at least 1, got {}.'.format(self.jobs))

    @classmethod
    def from_env(cls, jobs: Optional[Union[str, int]] = None, debug_checks: Optional[bool] = None) -> 'Settings':
        """Explicit arguments win over VKH_JOBS / VKH_DEBUG / VKH_LOCAL_ORDER."""
        if jobs is None:
            jobs = os.getenv('VKH_JOBS', '1')
        if debug_checks is None:
            debug_checks = os.getenv('VKH_DEBUG', '0') == '1'

        return cls(
            jobs=_parse_jobs(jobs),
            debug_checks=debug_checks,
            local_order=os.getenv('VKH_LOCAL_ORDER', 'standard')
        )

    def use_workers(self, crossings: int) -> bool:
        return self.jobs > 1 and crossings >= self.parallel_threshold
