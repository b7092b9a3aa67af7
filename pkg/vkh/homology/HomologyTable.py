import dataclasses
from fractions import Fraction
from typing import Dict, Tuple, Optional
from vkh.GaussInt import GaussInt
from vkh.LaurentPoly import LaurentPoly

Bidegree = Tuple[int, int]
Filtration = Tuple[Tuple[int, int], ...]


@dataclasses.dataclass(frozen=True)
class HomologyGroup:
    free: int = 0
    torsion: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.free or self.torsion)

    def to_text(self) -> str:
        parts = ['Z^{}'.format(self.free) if self.free > 1 else 'Z'] if self.free else []
        parts.extend('Z/{}'.format(order) for order in self.torsion)
        return '+'.join(parts) or '0'


def _half(doubled: int) -> str:
    value = Fraction(doubled, 2)
    return str(value.numerator) if value.denominator == 1 else '{}/{}'.format(value.numerator, value.denominator)


@dataclasses.dataclass(frozen=True)
class HomologyTable:
    """Homology per doubled bidegree (2i, 2j).

    Filtered theories keep one group per doubled homological degree in `ungraded` and the
    multiplicities per filtration level in `filtration`; `entries` then stays empty.
    """

    theory: str
    ring: str
    entries: Dict[Bidegree, HomologyGroup] = dataclasses.field(default_factory=dict)
    shift: Tuple[int, int] = (0, 0)
    ungraded: Dict[int, HomologyGroup] = dataclasses.field(default_factory=dict)
    filtration: Dict[int, Filtration] = dataclasses.field(default_factory=dict)

    @classmethod
    def build(cls, theory: str, ring: str, entries: Dict[Bidegree, HomologyGroup], shift: Tuple[int, int] = (0, 0),
              ungraded: Optional[Dict[int, HomologyGroup]] = None, filtration: Optional[Dict[int, Filtration]] = None) -> 'HomologyTable':
        return cls(
            theory=theory,
            ring=ring,
            entries={key: group for key, group in entries.items() if group},
            shift=shift,
            ungraded={key: group for key, group in (ungraded or {}).items() if group},
            filtration=dict(filtration or {})
        )

    def group(self, doubled_i: int, doubled_j: int) -> HomologyGroup:
        return self.entries.get((doubled_i, doubled_j), HomologyGroup())

    @property
    def isomorphism_type(self) -> Tuple:
        return tuple(sorted(self.entries.items())), tuple(sorted(self.ungraded.items()))

    def to_dict(self) -> dict:
        result = {
            'theory': self.theory,
            'ring': self.ring,
            'shift': list(self.shift),
            'entries': [[i, j, group.free, list(group.torsion)] for (i, j), group in sorted(self.entries.items())],
            'euler': graded_euler(self).to_list()
        }
        if self.ungraded or self.filtration:
            result['degrees'] = [[i, group.free, list(group.torsion)] for i, group in sorted(self.ungraded.items())]
            result['filtration'] = [[i, [list(level) for level in levels]] for i, levels in sorted(self.filtration.items())]
        return result

    def to_text(self) -> str:
        lines = ['{} homology over {}, shift [{}]{{{}}}'.format(self.theory, self.ring.upper(), _half(self.shift[0]), _half(self.shift[1]))]
        if self.entries:
            degrees = sorted({i for i, _ in self.entries})
            gradings = sorted({j for _, j in self.entries}, reverse=True)
            cells = [['j\\i'] + [_half(i) for i in degrees]]
            for j in gradings:
                cells.append([_half(j)] + [self.group(i, j).to_text() if self.group(i, j) else '.' for i in degrees])
            widths = [max(len(row[column]) for row in cells) for column in range(len(cells[0]))]
            for row in cells:
                lines.append('  '.join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
        for i, group in sorted(self.ungraded.items()):
            levels = ', '.join('{}:{}'.format(_half(level), count) for level, count in self.filtration.get(i, ()))
            lines.append('i={}: {}{}'.format(_half(i), group.to_text(), '  filtration ' + levels if levels else ''))
        if not self.entries and not self.ungraded:
            lines.append('0')
        return '\n'.join(lines)


def shift_table(table: HomologyTable, homological: int, quantum: int) -> HomologyTable:
    """Move every (2i, 2j) entry to (2i + homological, 2j + quantum)."""
    return HomologyTable(
        theory=table.theory,
        ring=table.ring,
        entries={(i + homological, j + quantum): group for (i, j), group in table.entries.items()},
        shift=(table.shift[0] + homological, table.shift[1] + quantum),
        ungraded={i + homological: group for i, group in table.ungraded.items()},
        filtration={i + homological: tuple((level + quantum, count) for level, count in levels) for i, levels in table.filtration.items()}
    )


def graded_euler(table: HomologyTable) -> LaurentPoly:
    """Sum of (-1)^i q^j rank, with (-1)^(1/2) = i; filtered tables use their filtration levels as j."""
    coefficients: Dict[int, GaussInt] = {}
    for (i, j), group in table.entries.items():
        coefficients[j] = coefficients.get(j, GaussInt()) + GaussInt.i_power(i) * group.free
    for i, levels in table.filtration.items():
        for level, count in levels:
            coefficients[level] = coefficients.get(level, GaussInt()) + GaussInt.i_power(i) * count
    return LaurentPoly.from_dict(coefficients)


def total_rank(table: HomologyTable) -> int:
    if table.entries:
        return sum(group.free for group in table.entries.values())
    return sum(group.free for group in table.ungraded.values())


def align_shift(reference: HomologyTable, other: HomologyTable) -> Optional[Tuple[int, int]]:
    """The doubled shift moving `other` onto `reference`, or None when the tables differ by more than a shift."""
    if not reference.entries and not other.entries:
        return (0, 0)
    if not reference.entries or not other.entries:
        return None
    first = min(reference.entries)
    second = min(other.entries)
    offset = (first[0] - second[0], first[1] - second[1])
    moved = {(i + offset[0], j + offset[1]): group for (i, j), group in other.entries.items()}
    return offset if moved == reference.entries else None
