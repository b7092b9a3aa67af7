import logging
import multiprocessing
from collections import Counter
from typing import Dict, List, Optional, Tuple, Mapping
from vkh.Diagram import Diagram, crossing_counts
from vkh.GaussInt import GaussInt
from vkh.LaurentPoly import LaurentPoly, poly_scale, eval_at_one
from vkh.Settings import Settings
from vkh.exceptions import ConsistencyError, InvalidValueError
from vkh.invariants.ParityScheme import ParityScheme
from vkh.invariants.modified_linking import unoriented_sign_exponent

# Slot pairings of the two smoothings of (a, b, c, d); the A smoothing is the oriented one at a positive crossing.
A_PAIRS = (1, 0, 3, 2)
B_PAIRS = (3, 2, 1, 0)
SMOOTHINGS = (A_PAIRS, B_PAIRS)

IndexedCrossing = Tuple[int, int, int, int]
Histogram = Dict[Tuple[int, int], int]


def _indexed(diagram: Diagram) -> Tuple[List[IndexedCrossing], int]:
    index = {label: position for position, label in enumerate(sorted(diagram.successor))}
    crossings = [(index[a], index[b], index[c], index[d]) for a, b, c, d in diagram.pd]
    return crossings, len(index)


def count_circles(crossings: List[IndexedCrossing], arcs: int, smoothing: Mapping[int, int]) -> int:
    """Number of circles when crossing k gets smoothing[k] (0 = A, 1 = B)."""
    parent = list(range(arcs))

    def find(item: int) -> int:
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    circles = arcs
    for position, crossing in enumerate(crossings):
        pairs = SMOOTHINGS[smoothing[position]]
        for slot in (0, 2) if pairs is A_PAIRS else (0, 1):
            left, right = find(crossing[slot]), find(crossing[pairs[slot]])
            if left != right:
                parent[left] = right
                circles -= 1
    return circles


def _histogram_chunk(crossings: List[IndexedCrossing], arcs: int, start: int, stop: int) -> Histogram:
    histogram: Counter = Counter()
    width = len(crossings)
    for state in range(start, stop):
        smoothing = [(state >> bit) & 1 for bit in range(width)]
        histogram[(sum(smoothing), count_circles(crossings, arcs, smoothing))] += 1
    return dict(histogram)


def state_circle_counts(diagram: Diagram, settings: Optional[Settings] = None) -> Histogram:
    """Histogram (n_B, circles) -> number of states over all 2^n smoothings."""
    settings = settings or Settings()
    crossings, arcs = _indexed(diagram)
    total = 1 << len(crossings)
    if not settings.use_workers(len(crossings)):
        return _histogram_chunk(crossings, arcs, 0, total)

    chunk = -(-total // settings.jobs)
    tasks = [(crossings, arcs, start, min(start + chunk, total)) for start in range(0, total, chunk)]
    logging.debug('Splitting %s states over %s workers', total, len(tasks))
    histogram: Counter = Counter()
    mp_context = multiprocessing.get_context('spawn')
    with mp_context.Pool(processes=settings.jobs) as pool:
        for part in pool.starmap(_histogram_chunk, tasks):
            histogram.update(part)
    return dict(histogram)


def _from_histogram(histogram: Histogram) -> LaurentPoly:
    loop = LaurentPoly.loop()
    result = LaurentPoly.zero()
    for (n_b, circles), multiplicity in sorted(histogram.items()):
        term = poly_scale(loop ** circles, GaussInt((-1) ** n_b * multiplicity), 2 * n_b)
        result = result + term
    return result


def kauffman_bracket(diagram: Diagram, settings: Optional[Settings] = None) -> LaurentPoly:
    return _from_histogram(state_circle_counts(diagram, settings))


def partial_bracket(diagram: Diagram, fixed: Mapping[int, str]) -> LaurentPoly:
    """State sum over the states that agree with `fixed`, without the (-q)^n_B factor of the fixed crossings."""
    forced = {}
    for index, smoothing in fixed.items():
        if not 0 <= index < diagram.crossing_count or smoothing not in ('A', 'B'):
            raise InvalidValueError('Invalid fixed smoothing {}: {}.'.format(index, smoothing))
        forced[index] = 0 if smoothing == 'A' else 1

    crossings, arcs = _indexed(diagram)
    free = [index for index in range(len(crossings)) if index not in forced]
    histogram: Counter = Counter()
    for state in range(1 << len(free)):
        smoothing = dict(forced)
        for bit, index in enumerate(free):
            smoothing[index] = (state >> bit) & 1
        n_b = sum(smoothing[index] for index in free)
        histogram[(n_b, count_circles(crossings, arcs, smoothing))] += 1
    return _from_histogram(dict(histogram))


def bracket_at_one(diagram: Diagram, settings: Optional[Settings] = None) -> GaussInt:
    return eval_at_one(kauffman_bracket(diagram, settings))


def jones(diagram: Diagram, settings: Optional[Settings] = None) -> LaurentPoly:
    counts = crossing_counts(diagram)
    unit = GaussInt.i_power(2 * counts.n_minus)
    return poly_scale(kauffman_bracket(diagram, settings), unit, 2 * counts.n_plus - 4 * counts.n_minus)


def unoriented_jones(diagram: Diagram, scheme: ParityScheme = ParityScheme.MULTICORE, settings: Optional[Settings] = None) -> LaurentPoly:
    counts = crossing_counts(diagram)
    exponent = unoriented_sign_exponent(diagram, scheme)
    result = poly_scale(kauffman_bracket(diagram, settings), GaussInt.i_power(exponent), 2 * counts.s_plus - 4 * counts.s_minus - counts.m)
    if scheme is not ParityScheme.NONE and not result.is_real:
        logging.error('Imaginary residue in unoriented Jones polynomial: %s', result.to_text())
        raise ConsistencyError('Unoriented Jones polynomial has imaginary coefficients under scheme {}.'.format(scheme.value))
    return result
