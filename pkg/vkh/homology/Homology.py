import logging
import multiprocessing
from typing import Dict, List, Optional, Tuple
from vkh.Diagram import Diagram, crossing_counts
from vkh.Settings import Settings
from vkh.cube.BigradedComplex import BigradedComplex, build_complex, shift_complex
from vkh.cube.FrobeniusStructure import FrobeniusStructure, KHOVANOV, LEE
from vkh.exceptions import InvalidValueError
from vkh.homology.HomologyTable import HomologyTable, HomologyGroup, Filtration, shift_table
from vkh.homology.SmithNormalForm import smith_normal_form, rank_q, rank_f2
from vkh.homology.SparseMatrix import SparseMatrix
from vkh.invariants.ParityScheme import ParityScheme
from vkh.invariants.modified_linking import lambda_tilde_doubled, l_tilde_doubled

RINGS = ('z', 'q', 'f2')


def check_ring(ring: str) -> str:
    ring = ring.lower()
    if ring not in RINGS:
        raise InvalidValueError('Unknown coefficient ring "{}", expected one of {}.'.format(ring, ', '.join(RINGS)))
    return ring


def _rank(matrix: SparseMatrix, ring: str) -> int:
    if ring == 'f2':
        return rank_f2(matrix)
    return rank_q(matrix)


def chain_homology(dimensions: List[int], boundaries: List[SparseMatrix], ring: str) -> Dict[int, HomologyGroup]:
    """Homology of C^0 -> ... -> C^n given dimensions and boundaries[i]: C^i -> C^{i+1}."""
    ranks = []
    torsion: List[Tuple[int, ...]] = []
    for matrix in boundaries:
        if ring == 'z':
            factors = smith_normal_form(matrix)
            ranks.append(len(factors))
            torsion.append(tuple(factor for factor in factors if factor > 1))
        else:
            ranks.append(_rank(matrix, ring))
            torsion.append(())

    result = {}
    for degree, dimension in enumerate(dimensions):
        outgoing = ranks[degree] if degree < len(ranks) else 0
        incoming = ranks[degree - 1] if degree > 0 else 0
        result[degree] = HomologyGroup(dimension - outgoing - incoming, torsion[degree - 1] if degree > 0 else ())
    return result


def _quantum_blocks(complex_: BigradedComplex) -> Dict[int, Tuple[List[int], List[SparseMatrix]]]:
    indices: Dict[int, Dict[int, List[int]]] = {}
    for degree in complex_.degrees:
        for index, grading in enumerate(complex_.gradings[degree]):
            indices.setdefault(grading, {}).setdefault(degree, []).append(index)

    blocks = {}
    for grading, by_degree in indices.items():
        dimensions = [len(by_degree.get(degree, [])) for degree in complex_.degrees]
        matrices = [complex_.boundary[degree].submatrix(by_degree.get(degree + 1, []), by_degree.get(degree, []))
                    for degree in complex_.degrees[:-1]]
        blocks[grading] = (dimensions, matrices)
    return blocks


def _block_task(grading: int, dimensions: List[int], matrices: List[SparseMatrix], ring: str) -> Tuple[int, Dict[int, HomologyGroup]]:
    return grading, chain_homology(dimensions, matrices, ring)


def homology_of(complex_: BigradedComplex, ring: str = 'z', theory: str = 'bracket', settings: Optional[Settings] = None) -> HomologyTable:
    """Homology of the complex with the complex's own shift applied."""
    ring = check_ring(ring)
    settings = settings or Settings()
    if not complex_.algebra.preserves_grading:
        dimensions = [complex_.dimension(degree) for degree in complex_.degrees]
        matrices = [complex_.boundary[degree] for degree in complex_.degrees[:-1]]
        ungraded = {2 * degree: group for degree, group in chain_homology(dimensions, matrices, ring).items()}
        filtration = lee_filtration(complex_) if ring != 'f2' else {}
        table = HomologyTable.build(theory, ring, {}, ungraded=ungraded, filtration=filtration)
        return shift_table(table, *complex_.shift)

    blocks = _quantum_blocks(complex_)
    tasks = [(grading, dimensions, matrices, ring) for grading, (dimensions, matrices) in sorted(blocks.items())]
    if settings.use_workers(complex_.width) and len(tasks) > 1:
        logging.debug('Computing %s quantum blocks over %s workers', len(tasks), settings.jobs)
        mp_context = multiprocessing.get_context('spawn')
        with mp_context.Pool(processes=settings.jobs) as pool:
            results = pool.starmap(_block_task, tasks)
    else:
        results = [_block_task(*task) for task in tasks]

    entries = {}
    for grading, groups in results:
        for degree, group in groups.items():
            entries[(2 * degree, grading)] = group
    return shift_table(HomologyTable.build(theory, ring, entries), *complex_.shift)


def lee_filtration(complex_: BigradedComplex) -> Dict[int, Filtration]:
    """Per doubled degree, (2j, multiplicity) of homology classes whose filtration level is exactly 2j, over Q."""
    result = {}
    for degree in complex_.degrees:
        gradings = complex_.gradings[degree]
        outgoing = complex_.boundary.get(degree)
        incoming = complex_.boundary.get(degree - 1)
        incoming_rank = rank_q(incoming) if incoming is not None else 0
        levels = sorted(set(gradings), reverse=True)
        previous = 0
        counts = []
        for level in levels:
            kept = [index for index, grading in enumerate(gradings) if grading >= level]
            dropped = [index for index, grading in enumerate(gradings) if grading < level]
            dimension = len(kept)
            if outgoing is not None:
                dimension -= rank_q(outgoing.submatrix(list(range(outgoing.rows)), kept))
            if incoming is not None:
                dimension += rank_q(incoming.submatrix(dropped, list(range(incoming.cols)))) - incoming_rank
            if dimension > previous:
                counts.append((level, dimension - previous))
            previous = dimension
        result[2 * degree] = tuple(sorted(counts))
    return result


def bracket_complex(diagram: Diagram, algebra: FrobeniusStructure = KHOVANOV, settings: Optional[Settings] = None) -> BigradedComplex:
    return build_complex(diagram, algebra, settings)


def oriented_shift(diagram: Diagram) -> Tuple[int, int]:
    counts = crossing_counts(diagram)
    return -2 * counts.n_minus, 2 * counts.n_plus - 4 * counts.n_minus


def unoriented_shift(diagram: Diagram, incorporate_sign: bool = False, scheme: ParityScheme = ParityScheme.MULTICORE) -> Tuple[int, int]:
    counts = crossing_counts(diagram)
    homological = -2 * counts.s_minus - counts.m
    if incorporate_sign:
        homological += l_tilde_doubled(lambda_tilde_doubled(diagram, scheme))
    return homological, 2 * counts.s_plus - 4 * counts.s_minus - counts.m


def kh_bracket(diagram: Diagram, ring: str = 'z', settings: Optional[Settings] = None) -> HomologyTable:
    return homology_of(bracket_complex(diagram, KHOVANOV, settings), ring, 'bracket', settings)


def kh_oriented(diagram: Diagram, ring: str = 'z', settings: Optional[Settings] = None) -> HomologyTable:
    complex_ = shift_complex(bracket_complex(diagram, KHOVANOV, settings), *oriented_shift(diagram))
    return homology_of(complex_, ring, 'khovanov', settings)


def kh_unoriented(diagram: Diagram, ring: str = 'z', incorporate_sign: bool = False, scheme: ParityScheme = ParityScheme.MULTICORE,
                  settings: Optional[Settings] = None) -> HomologyTable:
    complex_ = shift_complex(bracket_complex(diagram, KHOVANOV, settings), *unoriented_shift(diagram, incorporate_sign, scheme))
    return homology_of(complex_, ring, 'unoriented khovanov', settings)


def lee_unoriented(diagram: Diagram, ring: str = 'q', settings: Optional[Settings] = None) -> HomologyTable:
    complex_ = shift_complex(bracket_complex(diagram, LEE, settings), *unoriented_shift(diagram))
    return homology_of(complex_, ring, 'lee', settings)
