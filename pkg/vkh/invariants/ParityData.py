import dataclasses
from typing import Tuple, List
from vkh.Diagram import Diagram


@dataclasses.dataclass(frozen=True)
class ParityData:
    mixed_counts: Tuple[Tuple[int, ...], ...]

    @property
    def pair_parity(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(count % 2 for count in row) for row in self.mixed_counts)

    @property
    def component_parity(self) -> Tuple[int, ...]:
        return tuple(sum(row) % 2 for row in self.mixed_counts)

    @property
    def link_parity(self) -> int:
        return 1 if any(self.component_parity) else 0

    @property
    def odd_components(self) -> List[int]:
        return [index for index, parity in enumerate(self.component_parity) if parity]

    def to_dict(self) -> dict:
        return {
            'pair_parity': [list(row) for row in self.pair_parity],
            'component_parity': list(self.component_parity),
            'link_parity': self.link_parity
        }


def parities(diagram: Diagram) -> ParityData:
    size = diagram.component_count
    counts = [[0] * size for _ in range(size)]
    for info in diagram.crossing_info:
        if info.is_mixed:
            counts[info.under_component][info.over_component] += 1
            counts[info.over_component][info.under_component] += 1
    return ParityData(tuple(tuple(row) for row in counts))
