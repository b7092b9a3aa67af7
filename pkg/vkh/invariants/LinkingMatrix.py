import dataclasses
from fractions import Fraction
from typing import Tuple
from vkh.Diagram import Diagram


@dataclasses.dataclass(frozen=True)
class LinkingMatrix:
    """Linking numbers stored doubled: doubled[i][j] is the signed count of mixed crossings between i and j."""

    doubled: Tuple[Tuple[int, ...], ...]

    def lk(self, i: int, j: int) -> Fraction:
        return Fraction(self.doubled[i][j], 2)

    @property
    def lambda_doubled(self) -> int:
        return sum(self.doubled[i][j] for i in range(len(self.doubled)) for j in range(i + 1, len(self.doubled)))

    def to_dict(self) -> dict:
        return {'doubled': [list(row) for row in self.doubled]}


def linking_matrix(diagram: Diagram) -> LinkingMatrix:
    size = diagram.component_count
    doubled = [[0] * size for _ in range(size)]
    for info in diagram.crossing_info:
        if info.is_mixed:
            doubled[info.under_component][info.over_component] += info.sign
            doubled[info.over_component][info.under_component] += info.sign
    return LinkingMatrix(tuple(tuple(row) for row in doubled))
