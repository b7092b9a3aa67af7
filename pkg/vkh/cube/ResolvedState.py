import logging
import dataclasses
from typing import Dict, List, Tuple, Optional
from vkh.Diagram import Diagram, Slot
from vkh.StateSum import SMOOTHINGS
from vkh.exceptions import ConsistencyError, InvalidValueError

SLOT_NAMES = 'abcd'


@dataclasses.dataclass(frozen=True)
class Circle:
    """One circle of a smoothing, traced as [s0, t0, s1, t1, ...].

    t_i is the far end of the arc entered at s_i, and s_{i+1} is joined to t_i by the smoothing.
    The base point sits halfway along the arc (s_b, t_b) with the smallest label.
    """

    label: int
    trace: Tuple[Slot, ...]
    arcs: Tuple[int, ...]
    cuts: Tuple[bool, ...]
    base: int

    def index(self, slot: Slot) -> int:
        try:
            return self.trace.index(slot)
        except ValueError as e:
            raise InvalidValueError('Slot {} is not on circle {}.'.format(slot, self.label)) from e

    @property
    def loop_parity(self) -> int:
        return sum(self.cuts) % 2

    def _cyclic_count(self, start: int, end: int) -> int:
        size = len(self.trace)
        return sum(self.cuts[(start + step) % size] for step in range((end - start) % size + 1))

    def site_parity(self, slot: Slot) -> int:
        """Cut points passed going forward from the base point to the smoothing site next to `slot`, mod 2."""
        position = self.index(slot)
        start = 2 * self.base + 1
        end = position if position % 2 else position - 1
        return self._cyclic_count(start, end) % 2

    def transport_parity(self, start: Optional[Slot], end: Optional[Slot]) -> int:
        """Cut points passed between two smoothing sites on the circle, mod 2; None stands for the base point."""
        first = 0 if start is None else self.site_parity(start)
        second = 0 if end is None else self.site_parity(end)
        return (first + second) % 2

    def tokens(self) -> List[str]:
        result = []
        for step in range(len(self.arcs)):
            head, tail = self.trace[2 * step], self.trace[2 * step + 1]
            result.append(_slot_token(head, self.cuts[2 * step]))
            result.append('arc{}{}'.format(self.arcs[step], '@' if step == self.base else ''))
            result.append(_slot_token(tail, self.cuts[2 * step + 1]))
        return result


def _slot_token(slot: Slot, cut: bool) -> str:
    return '{}{}{}'.format(slot[0], SLOT_NAMES[slot[1]], '|' if cut else '')


@dataclasses.dataclass(frozen=True)
class ResolvedState:
    state: int
    width: int
    circles: Tuple[Circle, ...]
    circle_of: Dict[Slot, int] = dataclasses.field(compare=False, hash=False, repr=False)

    @property
    def n_b(self) -> int:
        return bin(self.state).count('1')

    @property
    def smoothing(self) -> str:
        return ''.join('B' if (self.state >> bit) & 1 else 'A' for bit in range(self.width))

    def circle_index(self, slot: Slot) -> int:
        return self.circle_of[slot]

    def site_parity(self, slot: Slot) -> int:
        return self.circles[self.circle_of[slot]].transport_parity(None, slot)


def resolve(diagram: Diagram, state: int, debug_checks: bool = False) -> ResolvedState:
    """Trace the circles of the smoothing `state` (bit k set means B at crossing k)."""
    width = diagram.crossing_count
    if not 0 <= state < 1 << width:
        raise InvalidValueError('State {} out of range for {} crossings.'.format(state, width))

    traced = []
    visited = set()
    for crossing in range(width):
        for position in range(4):
            first = (crossing, position)
            if first in visited:
                continue
            trace: List[Slot] = []
            arcs: List[int] = []
            head = first
            while True:
                tail = diagram.partner(head)
                trace.extend((head, tail))
                arcs.append(diagram.entry(head))
                visited.update((head, tail))
                pairs = SMOOTHINGS[(state >> tail[0]) & 1]
                head = (tail[0], pairs[tail[1]])
                if head == first:
                    break
            base = arcs.index(min(arcs))
            cuts = tuple(diagram.is_cut(slot) for slot in trace)
            traced.append(Circle(min(arcs), tuple(trace), tuple(arcs), cuts, base))

    traced.sort(key=lambda circle: circle.label)
    circle_of = {slot: index for index, circle in enumerate(traced) for slot in circle.trace}
    if debug_checks:
        for circle in traced:
            if circle.loop_parity:
                logging.error('Odd cut parity on circle %s of state %s', circle.label, state)
                raise ConsistencyError('Circle {} of state {} passes an odd number of cut points.'.format(circle.label, state))
    return ResolvedState(state, width, tuple(traced), circle_of)
