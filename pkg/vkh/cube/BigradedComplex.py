import logging
import dataclasses
import multiprocessing
from typing import Dict, List, Tuple, Optional
from vkh.Diagram import Diagram
from vkh.PDCode import PDCode
from vkh.Settings import Settings
from vkh.cube.EdgeMap import EdgeMap, edge_map
from vkh.cube.FrobeniusStructure import FrobeniusStructure
from vkh.cube.ResolvedState import ResolvedState, resolve
from vkh.exceptions import ConsistencyError
from vkh.homology.SparseMatrix import SparseMatrix
from vkh.tools import popcount

Generator = Tuple[int, int]


@dataclasses.dataclass(frozen=True)
class BigradedComplex:
    """Chain groups C^i (i = number of B smoothings) with boundary matrices C^i -> C^{i+1}.

    Generators are (state, label mask) pairs ordered by state then mask; gradings hold 2j.
    `shift` is the doubled (homological, quantum) shift applied on top.
    """

    algebra: FrobeniusStructure
    width: int
    basis: Dict[int, Tuple[Generator, ...]]
    gradings: Dict[int, Tuple[int, ...]]
    boundary: Dict[int, SparseMatrix]
    shift: Tuple[int, int] = (0, 0)
    states: Dict[int, ResolvedState] = dataclasses.field(default_factory=dict, compare=False, repr=False)
    edges: Dict[Tuple[int, int], EdgeMap] = dataclasses.field(default_factory=dict, compare=False, repr=False)

    @property
    def degrees(self) -> List[int]:
        return sorted(self.basis)

    def dimension(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))


def quantum_doubled(state: int, circles: int, mask: int) -> int:
    return 2 * (popcount(state) + circles - 2 * popcount(mask))


def _edges_for(pd: PDCode, algebra_name: str, local_order: str, debug_checks: bool, start: int, stop: int
               ) -> Tuple[Dict[int, ResolvedState], Dict[Tuple[int, int], EdgeMap]]:
    diagram = Diagram.from_pd(pd)
    algebra = FrobeniusStructure.from_name(algebra_name)
    states = {}
    edges = {}
    for state in range(start, stop):
        source = resolve(diagram, state, debug_checks)
        states[state] = source
        for crossing in range(diagram.crossing_count):
            if not (state >> crossing) & 1:
                edges[(state, crossing)] = edge_map(diagram, source, crossing, algebra, local_order)
    return states, edges


def build_complex(diagram: Diagram, algebra: FrobeniusStructure, settings: Optional[Settings] = None) -> BigradedComplex:
    settings = settings or Settings()
    width = diagram.crossing_count
    total = 1 << width
    if settings.use_workers(width):
        chunk = -(-total // settings.jobs)
        tasks = [(diagram.pd, algebra.name, settings.local_order, settings.debug_checks, start, min(start + chunk, total))
                 for start in range(0, total, chunk)]
        logging.debug('Building %s states over %s workers', total, len(tasks))
        states: Dict[int, ResolvedState] = {}
        edges: Dict[Tuple[int, int], EdgeMap] = {}
        mp_context = multiprocessing.get_context('spawn')
        with mp_context.Pool(processes=settings.jobs) as pool:
            for part_states, part_edges in pool.starmap(_edges_for, tasks):
                states.update(part_states)
                edges.update(part_edges)
    else:
        states, edges = _edges_for(diagram.pd, algebra.name, settings.local_order, settings.debug_checks, 0, total)

    basis: Dict[int, List[Generator]] = {degree: [] for degree in range(width + 1)}
    for state in range(total):
        basis[popcount(state)].extend((state, mask) for mask in range(1 << len(states[state].circles)))

    gradings: Dict[int, List[int]] = {}
    for degree, generators in basis.items():
        gradings[degree] = [quantum_doubled(state, len(states[state].circles), mask) for state, mask in generators]
        logging.debug('Degree %s: %s generators', degree, len(generators))

    frozen_basis = {degree: tuple(generators) for degree, generators in basis.items()}
    boundary = {}
    for degree in range(width):
        source_index = {generator: index for index, generator in enumerate(frozen_basis[degree])}
        target_index = {generator: index for index, generator in enumerate(frozen_basis[degree + 1])}
        matrix = SparseMatrix(len(target_index), len(source_index))
        for (state, mask), col in source_index.items():
            for crossing in range(width):
                if (state >> crossing) & 1:
                    continue
                edge = edges[(state, crossing)]
                for out_mask, coefficient in edge.apply(mask):
                    matrix.add(target_index[(edge.target, out_mask)], col, coefficient)
        boundary[degree] = matrix

    result = BigradedComplex(
        algebra=algebra,
        width=width,
        basis=frozen_basis,
        gradings={degree: tuple(values) for degree, values in gradings.items()},
        boundary=boundary,
        states=states,
        edges=edges
    )
    if settings.debug_checks:
        check_d_squared(result)
        check_faces(result)
    return result


def shift_complex(complex_: BigradedComplex, homological: int, quantum: int) -> BigradedComplex:
    """Add a doubled shift (2a, 2b)."""
    return dataclasses.replace(complex_, shift=(complex_.shift[0] + homological, complex_.shift[1] + quantum))


def check_d_squared(complex_: BigradedComplex) -> None:
    for degree in range(complex_.width - 1):
        square = complex_.boundary[degree + 1].compose(complex_.boundary[degree])
        if not square.is_zero:
            row, col, value = next(square.nonzero())
            state, mask = complex_.basis[degree][col]
            logging.error('d o d != 0 on generator %s/%s in degree %s', state, mask, degree)
            raise ConsistencyError('d o d maps generator (state {}, labels {}) in degree {} to {} times generator {}.'.format(
                state, mask, degree, value, complex_.basis[degree + 2][row]))


def _compose(first: EdgeMap, second: EdgeMap, mask: int) -> Dict[int, int]:
    result: Dict[int, int] = {}
    for middle, coefficient in first.apply(mask):
        for out_mask, other in second.apply(middle):
            result[out_mask] = result.get(out_mask, 0) + coefficient * other
    return result


def check_faces(complex_: BigradedComplex) -> None:
    """Every square of the cube must anti-commute."""
    for state, source in complex_.states.items():
        free = [crossing for crossing in range(complex_.width) if not (state >> crossing) & 1]
        for position, first in enumerate(free):
            for second in free[position + 1:]:
                path_one = (complex_.edges[(state, first)], complex_.edges[(state | 1 << first, second)])
                path_two = (complex_.edges[(state, second)], complex_.edges[(state | 1 << second, first)])
                for mask in range(1 << len(source.circles)):
                    total = _compose(*path_one, mask)
                    for out_mask, coefficient in _compose(*path_two, mask).items():
                        total[out_mask] = total.get(out_mask, 0) + coefficient
                    if any(total.values()):
                        logging.error('Face at state %s, crossings %s and %s does not anti-commute on labels %s', state, first, second, mask)
                        raise ConsistencyError('Face (state {}, crossings {} and {}) does not anti-commute on labels {}.'.format(
                            state, first, second, mask))


def dump(complex_: BigradedComplex) -> str:
    lines = ['complex {} crossings={} shift={}'.format(complex_.algebra.name, complex_.width, list(complex_.shift))]
    for state in sorted(complex_.states):
        resolved = complex_.states[state]
        lines.append('state {} {}'.format(state, resolved.smoothing))
        for circle in resolved.circles:
            lines.append('  circle {}: {}'.format(circle.label, ' '.join(circle.tokens())))
    for key in sorted(complex_.edges):
        lines.extend(complex_.edges[key].to_lines())
    return '\n'.join(lines) + '\n'
