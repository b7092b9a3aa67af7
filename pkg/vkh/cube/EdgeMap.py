import dataclasses
from typing import Dict, Tuple, List, Optional
from vkh.Diagram import Diagram
from vkh.cube.FrobeniusStructure import FrobeniusStructure
from vkh.cube.ResolvedState import ResolvedState, resolve
from vkh.exceptions import InvalidValueError

Table = Dict[int, Tuple[Tuple[int, int], ...]]


@dataclasses.dataclass(frozen=True)
class EdgeMap:
    """Signed map between enhanced states of one hypercube edge, keyed by label mask (bit set = x)."""

    source: int
    target: int
    crossing: int
    kind: str
    table: Table

    def apply(self, mask: int) -> Tuple[Tuple[int, int], ...]:
        return self.table.get(mask, ())

    def to_lines(self) -> List[str]:
        lines = ['edge {} -> {} at {} ({})'.format(self.source, self.target, self.crossing, self.kind)]
        for mask in sorted(self.table):
            image = ' '.join('{:+d}*{}'.format(coefficient, out_mask) for out_mask, coefficient in self.table[mask])
            lines.append('  {} -> {}'.format(mask, image or '0'))
        return lines


def _label(mask: int, index: int) -> int:
    return (mask >> index) & 1


def _smaller(indices: List[int], bound: int) -> int:
    return sum(1 for index in indices if index < bound)


def edge_map(diagram: Diagram, source: ResolvedState, crossing: int, algebra: FrobeniusStructure,
             local_order: str = 'standard', target: Optional[ResolvedState] = None) -> EdgeMap:
    """Re-smooth `crossing` from A to B and return the signed merge, split or zero map."""
    if (source.state >> crossing) & 1:
        raise InvalidValueError('Crossing {} is already B-smoothed in state {}.'.format(crossing, source.state))
    if target is None:
        target = resolve(diagram, source.state | 1 << crossing)

    first = source.circle_index((crossing, 0))
    second = source.circle_index((crossing, 2))
    rest = [index for index in range(len(source.circles)) if index not in (first, second)]
    moved = {index: target.circle_index(source.circles[index].trace[0]) for index in rest}
    table: Table = {}

    if first != second:
        merged = target.circle_index((crossing, 0))
        order_sign = _smaller(rest, first) + _smaller(rest, second) + (second < first) + _smaller(list(moved.values()), merged)
        parity_first = source.site_parity((crossing, 0))
        parity_second = source.site_parity((crossing, 2))
        parity_merged = target.site_parity((crossing, 0))
        for mask in range(1 << len(source.circles)):
            left, right = _label(mask, first), _label(mask, second)
            base_mask = sum(_label(mask, index) << moved[index] for index in rest)
            sign = order_sign + parity_first * left + parity_second * right
            image = []
            for coefficient, label in algebra.multiply(left, right):
                total = sign + parity_merged * label
                image.append((base_mask | label << merged, coefficient * (-1) ** total))
            if image:
                table[mask] = tuple(image)
        return EdgeMap(source.state, target.state, crossing, 'merge', table)

    outer = target.circle_index((crossing, 0))
    inner = target.circle_index((crossing, 1))
    if outer == inner:
        return EdgeMap(source.state, target.state, crossing, 'eta', table)

    rest = [index for index in range(len(source.circles)) if index != first]
    moved = {index: target.circle_index(source.circles[index].trace[0]) for index in rest}
    parities = {outer: target.site_parity((crossing, 0)), inner: target.site_parity((crossing, 1))}
    head, tail = (outer, inner) if local_order == 'standard' else (inner, outer)
    targets = list(moved.values())
    order_sign = _smaller(rest, first) + _smaller(targets, head) + _smaller(targets, tail) + (tail < head)
    parity_source = source.site_parity((crossing, 0))
    for mask in range(1 << len(source.circles)):
        label = _label(mask, first)
        base_mask = sum(_label(mask, index) << moved[index] for index in rest)
        sign = order_sign + parity_source * label
        image = []
        for coefficient, (head_label, tail_label) in algebra.comultiply(label):
            total = sign + parities[head] * head_label + parities[tail] * tail_label
            image.append((base_mask | head_label << head | tail_label << tail, coefficient * (-1) ** total))
        table[mask] = tuple(image)
    return EdgeMap(source.state, target.state, crossing, 'split', table)
