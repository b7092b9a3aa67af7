import logging
import dataclasses
from typing import Tuple, FrozenSet, List
from vkh.Diagram import Diagram, delete_components
from vkh.exceptions import InvalidValueError
from vkh.invariants.ParityData import parities
from vkh.invariants.ParityScheme import ParityScheme


@dataclasses.dataclass(frozen=True)
class MultiCoreDecomposition:
    cores: Tuple[FrozenSet[int], ...]
    final_mantle: FrozenSet[int]

    def core_of(self, component: int) -> int:
        """Index of the core holding the component, -1 for the mantle."""
        for index, core in enumerate(self.cores):
            if component in core:
                return index
        return -1

    def to_dict(self) -> dict:
        return {
            'cores': [sorted(core) for core in self.cores],
            'mantle': sorted(self.final_mantle)
        }


def even_core(diagram: Diagram) -> List[int]:
    """Components left after repeatedly deleting every odd component."""
    remaining = list(range(diagram.component_count))
    current = diagram
    while remaining:
        odd = parities(current).odd_components
        if not odd:
            break
        remaining = [component for index, component in enumerate(remaining) if index not in odd]
        current = delete_components(current, odd)
    return remaining


def multi_core(diagram: Diagram) -> MultiCoreDecomposition:
    cores = []
    mantle = list(range(diagram.component_count))
    current = diagram
    while mantle:
        core = even_core(current)
        if not core:
            break
        cores.append(frozenset(mantle[index] for index in core))
        mantle = [component for index, component in enumerate(mantle) if index not in core]
        current = delete_components(current, core)
        logging.debug('Core %s split off, mantle %s', sorted(cores[-1]), mantle)
    return MultiCoreDecomposition(tuple(cores), frozenset(mantle))


def parity_fn(decomposition: MultiCoreDecomposition, scheme: ParityScheme, i: int, j: int) -> int:
    if i == j:
        raise InvalidValueError('Parity function needs two distinct components, got {} twice.'.format(i))
    if scheme is ParityScheme.ALLONE:
        return 1
    if scheme is ParityScheme.FIRSTCORE:
        first = decomposition.cores[0] if decomposition.cores else frozenset()
        return 0 if i in first and j in first else 1
    if scheme is ParityScheme.MULTICORE:
        core = decomposition.core_of(i)
        return 0 if core >= 0 and core == decomposition.core_of(j) else 1
    raise InvalidValueError('Scheme {} defines no parity function.'.format(scheme.value))
