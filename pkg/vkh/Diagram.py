import dataclasses
from collections import Counter
from typing import Dict, List, Tuple, Iterator, Iterable, Set, NamedTuple
from vkh.PDCode import PDCode, Crossing
from vkh.exceptions import ValidationError, InvalidValueError

Slot = Tuple[int, int]


class CrossingCounts(NamedTuple):
    s_plus: int
    s_minus: int
    m: int
    n_plus: int
    n_minus: int


@dataclasses.dataclass(frozen=True)
class CrossingInfo:
    sign: int
    kind: str
    under_component: int
    over_component: int

    @property
    def is_mixed(self) -> bool:
        return self.kind == 'mixed'

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _find(parent: Dict[int, int], item: int) -> int:
    while parent[item] != item:
        parent[item] = parent[parent[item]]
        item = parent[item]
    return item


@dataclasses.dataclass(frozen=True)
class Diagram:
    """Validated PD code: components, arc successors and per-crossing sign/kind."""

    pd: PDCode
    components: Tuple[Tuple[int, ...], ...]
    crossing_info: Tuple[CrossingInfo, ...]
    successor: Dict[int, int] = dataclasses.field(compare=False, hash=False, repr=False)
    component_of: Dict[int, int] = dataclasses.field(compare=False, hash=False, repr=False)
    arc_slots: Dict[int, Tuple[Slot, Slot]] = dataclasses.field(compare=False, hash=False, repr=False)

    @classmethod
    def from_pd(cls, pd: PDCode) -> 'Diagram':
        occurrences = Counter(label for crossing in pd for label in crossing)
        for label, count in sorted(occurrences.items()):
            if count != 2:
                raise ValidationError('Arc {} appears {} times, expected exactly twice.'.format(label, count))

        parent = {label: label for label in occurrences}
        for a, b, c, d in pd:
            parent[_find(parent, a)] = _find(parent, c)
            parent[_find(parent, b)] = _find(parent, d)

        groups: Dict[int, List[int]] = {}
        for label in occurrences:
            groups.setdefault(_find(parent, label), []).append(label)

        components = []
        for labels in sorted(groups.values(), key=min):
            labels.sort()
            if labels[-1] - labels[0] + 1 != len(labels):
                raise ValidationError('Component with arcs {} does not form a contiguous block.'.format(labels))
            if len(labels) < 3:
                raise ValidationError('Component with arcs {} has fewer than 3 arcs, stabilize it first.'.format(labels))
            components.append(tuple(labels))

        successor: Dict[int, int] = {}
        component_of: Dict[int, int] = {}
        for index, labels in enumerate(components):
            for position, label in enumerate(labels):
                successor[label] = labels[(position + 1) % len(labels)]
                component_of[label] = index

        infos = []
        incoming: Dict[int, Slot] = {}
        outgoing: Dict[int, Slot] = {}
        for index, (a, b, c, d) in enumerate(pd):
            if successor[a] != c:
                raise ValidationError('Crossing #{} {}: under-strand does not run {} -> {}.'.format(index, (a, b, c, d), a, c))
            if successor[d] == b:
                sign = 1
            elif successor[b] == d:
                sign = -1
            else:
                raise ValidationError('Crossing #{} {}: over-strand arcs {} and {} are not consecutive.'.format(index, (a, b, c, d), b, d))
            in_over, out_over = (3, 1) if sign > 0 else (1, 3)
            for label, position, table in ((a, 0, incoming), (c, 2, outgoing), ((a, b, c, d)[in_over], in_over, incoming),
                                           ((a, b, c, d)[out_over], out_over, outgoing)):
                if label in table:
                    raise ValidationError('Arc {} enters or leaves more than one crossing.'.format(label))
                table[label] = (index, position)
            under_component = component_of[a]
            over_component = component_of[b]
            infos.append(CrossingInfo(
                sign=sign,
                kind='self' if under_component == over_component else 'mixed',
                under_component=under_component,
                over_component=over_component
            ))

        arc_slots = {label: (outgoing[label], incoming[label]) for label in occurrences}
        return cls(pd, tuple(components), tuple(infos), successor, component_of, arc_slots)

    @property
    def crossing_count(self) -> int:
        return len(self.pd)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def entry(self, slot: Slot) -> int:
        crossing, position = slot
        return self.pd.crossings[crossing][position]

    def is_incoming(self, slot: Slot) -> bool:
        crossing, position = slot
        if position in (0, 2):
            return position == 0
        return (position == 3) == (self.crossing_info[crossing].sign > 0)

    def is_cut(self, slot: Slot) -> bool:
        """Cut points sit on the outgoing under end and the incoming over end of every crossing."""
        crossing, position = slot
        if position == 2:
            return True
        if position == 0:
            return False
        return self.is_incoming((crossing, position))

    def partner(self, slot: Slot) -> Slot:
        """The slot at the other end of the arc through `slot`."""
        tail, head = self.arc_slots[self.entry(slot)]
        return head if slot == tail else tail

    def block(self, component: int) -> Tuple[int, int]:
        labels = self.components[component]
        return labels[0], labels[-1]

    def check_component(self, component: int) -> None:
        if not 0 <= component < len(self.components):
            raise InvalidValueError('Component index {} out of range 0..{}.'.format(component, len(self.components) - 1))

    def to_dict(self) -> dict:
        return {
            'pd': self.pd.to_list(),
            'components': [list(labels) for labels in self.components],
            'crossings': [info.to_dict() for info in self.crossing_info]
        }


def validate(pd: PDCode) -> Diagram:
    return Diagram.from_pd(pd)


def crossing_counts(diagram: Diagram) -> CrossingCounts:
    s_plus = s_minus = m = n_plus = n_minus = 0
    for info in diagram.crossing_info:
        if info.sign > 0:
            n_plus += 1
        else:
            n_minus += 1
        if info.is_mixed:
            m += 1
        elif info.sign > 0:
            s_plus += 1
        else:
            s_minus += 1
    return CrossingCounts(s_plus, s_minus, m, n_plus, n_minus)


def _relabel(diagram: Diagram, mapping: Dict[int, int], rotate_reversed: Set[int]) -> Diagram:
    crossings: List[Crossing] = []
    for index, (a, b, c, d) in enumerate(diagram.pd):
        a, b, c, d = (mapping.get(label, label) for label in (a, b, c, d))
        if diagram.crossing_info[index].under_component in rotate_reversed:
            crossings.append((c, d, a, b))
        else:
            crossings.append((a, b, c, d))
    return Diagram.from_pd(PDCode(tuple(crossings)))


def reverse_component(diagram: Diagram, component: int) -> Diagram:
    diagram.check_component(component)
    lo, hi = diagram.block(component)
    mapping = {label: lo + hi - label for label in diagram.components[component]}
    return _relabel(diagram, mapping, {component})


def rotate_labels(diagram: Diagram, component: int, offset: int) -> Diagram:
    diagram.check_component(component)
    lo, _ = diagram.block(component)
    size = len(diagram.components[component])
    mapping = {label: lo + (label - lo + offset) % size for label in diagram.components[component]}
    return _relabel(diagram, mapping, set())


def orientations(diagram: Diagram) -> Iterator[Diagram]:
    for mask in range(1 << diagram.component_count):
        result = diagram
        for component in range(diagram.component_count):
            if mask >> component & 1:
                result = reverse_component(result, component)
        yield result


def flip_crossing(diagram: Diagram, index: int) -> Diagram:
    if not 0 <= index < diagram.crossing_count:
        raise InvalidValueError('Crossing index {} out of range.'.format(index))
    a, b, c, d = diagram.pd.crossings[index]
    flipped = (d, a, b, c) if diagram.crossing_info[index].sign > 0 else (b, c, d, a)
    crossings = list(diagram.pd.crossings)
    crossings[index] = flipped
    return Diagram.from_pd(PDCode(tuple(crossings)))


def r1_stabilize(diagram: Diagram, arc: int, sign: int) -> Diagram:
    """Insert an under-first kink of the given sign in the middle of `arc`."""
    if arc not in diagram.successor:
        raise InvalidValueError('Arc {} does not exist.'.format(arc))
    if sign not in (1, -1):
        raise InvalidValueError('Kink sign must be +1 or -1, got {}.'.format(sign))

    head_crossing, head_position = diagram.arc_slots[arc][1]
    crossings = []
    for index, crossing in enumerate(diagram.pd):
        shifted = [label + 2 if label > arc else label for label in crossing]
        if index == head_crossing:
            shifted[head_position] = arc + 2
        crossings.append((shifted[0], shifted[1], shifted[2], shifted[3]))
    if sign > 0:
        crossings.append((arc, arc + 2, arc + 1, arc + 1))
    else:
        crossings.append((arc, arc + 1, arc + 1, arc + 2))
    return Diagram.from_pd(PDCode(tuple(crossings)))


def _surviving_passages(diagram: Diagram, drop: Set[int]) -> Dict[int, int]:
    passages = {component: 0 for component in range(diagram.component_count) if component not in drop}
    for info in diagram.crossing_info:
        if info.under_component in drop or info.over_component in drop:
            continue
        passages[info.under_component] += 1
        passages[info.over_component] += 1
    return passages


def delete_components(diagram: Diagram, drop: Iterable[int]) -> Diagram:
    """Remove the given components, splice the survivors and re-stabilize short components."""
    drop = set(drop)
    for component in drop:
        diagram.check_component(component)
    if not drop:
        return diagram

    for component, count in _surviving_passages(diagram, drop).items():
        if count < 3:
            diagram = r1_stabilize(diagram, diagram.components[component][0], 1)
        if count == 0:
            diagram = r1_stabilize(diagram, diagram.components[component][0], -1)

    removed = {index for index, info in enumerate(diagram.crossing_info) if info.under_component in drop or info.over_component in drop}

    def head_removed(label: int) -> bool:
        return diagram.arc_slots[label][1][0] in removed

    mapping: Dict[int, int] = {}
    base = 1
    for component, labels in enumerate(diagram.components):
        if component in drop:
            continue
        start = 0
        while head_removed(labels[start - 1]):
            start -= 1
        group = 0
        for step in range(len(labels)):
            label = labels[(start + step) % len(labels)]
            mapping[label] = base + group
            if not head_removed(label):
                group += 1
        base += group

    crossings = [tuple(mapping[label] for label in crossing) for index, crossing in enumerate(diagram.pd) if index not in removed]
    return Diagram.from_pd(PDCode.from_tuples(crossings))
