from typing import Dict
import pytest

from vkh.Diagram import Diagram
from vkh.FixtureReader import FixtureReader
from vkh.SelfTest import SelfTest
from vkh.Settings import Settings
from vkh.cube.BigradedComplex import build_complex, shift_complex, check_d_squared, check_faces, dump, quantum_doubled
from vkh.cube.EdgeMap import edge_map
from vkh.cube.FrobeniusStructure import FrobeniusStructure, KHOVANOV, LEE, ONE, X
from vkh.cube.ResolvedState import resolve
from vkh.exceptions import InvalidValueError
from vkh.homology.Homology import homology_of

DEBUG = Settings(debug_checks=True)


def test_algebras() -> None:
    assert KHOVANOV.multiply(X, X) == ()
    assert LEE.multiply(X, X) == ((1, ONE),)
    assert KHOVANOV.comultiply(ONE) == ((1, (ONE, X)), (1, (X, ONE)))
    assert FrobeniusStructure.from_name('lee') is LEE
    assert not LEE.preserves_grading
    with pytest.raises(InvalidValueError):
        FrobeniusStructure.from_name('bar-natan')


def test_resolve_trefoil(trefoil: Diagram) -> None:
    all_a = resolve(trefoil, 0, debug_checks=True)
    all_b = resolve(trefoil, 7, debug_checks=True)
    assert len(all_a.circles) == 3
    assert len(all_b.circles) == 2
    assert all_b.smoothing == 'BBB'
    assert all_b.n_b == 3
    assert all(circle.loop_parity == 0 for circle in all_a.circles + all_b.circles)
    with pytest.raises(InvalidValueError):
        resolve(trefoil, 8)


def test_circle_labels(trefoil: Diagram) -> None:
    state = resolve(trefoil, 0)
    assert [circle.label for circle in state.circles] == sorted(circle.label for circle in state.circles)
    for circle in state.circles:
        assert circle.arcs[circle.base] == circle.label
        assert len(circle.trace) == 2 * len(circle.arcs)


def test_transport_parity(trefoil: Diagram) -> None:
    for state in (resolve(trefoil, 0), resolve(trefoil, 5)):
        for circle in state.circles:
            sites = circle.trace[::2]
            assert circle.transport_parity(None, None) == 0
            for site in sites:
                assert circle.transport_parity(site, site) == 0
                assert circle.transport_parity(None, site) == circle.site_parity(site)
                assert circle.transport_parity(site, None) == circle.site_parity(site)
            assert circle.transport_parity(sites[0], sites[-1]) == circle.transport_parity(sites[-1], sites[0])
    with pytest.raises(InvalidValueError):
        resolve(trefoil, 0).circles[0].transport_parity(None, (9, 0))


def test_virtual_single_cycle(virtual_trefoil: Diagram) -> None:
    source = resolve(virtual_trefoil, 0)
    kinds = {edge_map(virtual_trefoil, source, crossing, KHOVANOV).kind for crossing in range(2)}
    assert kinds <= {'merge', 'split', 'eta'}
    complex_ = build_complex(virtual_trefoil, KHOVANOV, DEBUG)
    assert complex_.dimension(0) + complex_.dimension(1) + complex_.dimension(2) == sum(
        1 << len(state.circles) for state in complex_.states.values())


def test_edge_map_rejects_b_crossing(trefoil: Diagram) -> None:
    with pytest.raises(InvalidValueError):
        edge_map(trefoil, resolve(trefoil, 1), 0, KHOVANOV)


def test_merge_and_split_are_signed_units(trefoil: Diagram) -> None:
    complex_ = build_complex(trefoil, KHOVANOV)
    for edge in complex_.edges.values():
        assert edge.kind in ('merge', 'split')
        for image in edge.table.values():
            assert all(abs(coefficient) == 1 for _, coefficient in image)


def test_quantum_grading() -> None:
    assert quantum_doubled(0, 1, 0) == 2
    assert quantum_doubled(0, 1, 1) == -2
    assert quantum_doubled(0b101, 2, 0b01) == 4


def test_differential_squares_to_zero(fixture_reader: FixtureReader) -> None:
    for name in ('figure_eight', 'virtual_hopf', 'even_virtual_borromean', 'core_chain'):
        diagram = fixture_reader.get_fixture(name).diagram
        for algebra in (KHOVANOV, LEE):
            complex_ = build_complex(diagram, algebra)
            check_d_squared(complex_)
            check_faces(complex_)


def test_transposed_local_order(virtual_hopf: Diagram) -> None:
    transposed = build_complex(virtual_hopf, KHOVANOV, Settings(local_order='transposed'))
    standard = build_complex(virtual_hopf, KHOVANOV)
    assert transposed.basis == standard.basis
    # the local order only moves signs, so mod 2 the complexes agree
    assert homology_of(transposed, 'f2') == homology_of(standard, 'f2')


def test_random_faces_anticommute() -> None:
    for _, diagram in SelfTest.random_diagrams(100, seed=5, max_crossings=6):
        build_complex(diagram, KHOVANOV, DEBUG)
        build_complex(diagram, LEE, DEBUG)


def test_workers_match_serial(trefoil: Diagram) -> None:
    parallel = build_complex(trefoil, KHOVANOV, Settings(jobs=2, parallel_threshold=1))
    serial = build_complex(trefoil, KHOVANOV)
    assert parallel.basis == serial.basis
    assert all(parallel.boundary[degree].entries == serial.boundary[degree].entries for degree in serial.boundary)


def test_shift_and_dump(virtual_trefoil: Diagram) -> None:
    complex_ = shift_complex(build_complex(virtual_trefoil, KHOVANOV), -2, 4)
    assert complex_.shift == (-2, 4)
    text = dump(complex_)
    assert text.startswith('complex khovanov crossings=2 shift=[-2, 4]')
    assert 'state 3 BB' in text
    assert 'edge 0 -> 1 at 0' in text


def test_virtual_unknot_square(fixture_reader: FixtureReader) -> None:
    complex_ = build_complex(fixture_reader.get_fixture('virtual_unknot_2').diagram, KHOVANOV)
    assert {state: len(resolved.circles) for state, resolved in complex_.states.items()} == {0: 1, 1: 1, 2: 2, 3: 1}
    split, merge = complex_.edges[(0, 1)], complex_.edges[(2, 0)]
    assert (split.kind, merge.kind) == ('split', 'merge')
    assert complex_.edges[(0, 0)].kind == complex_.edges[(1, 1)].kind == 'eta'
    assert len(split.apply(0)) == 2
    for mask in (0, 1):
        composite: Dict[int, int] = {}
        for middle, coefficient in split.apply(mask):
            for out_mask, other in merge.apply(middle):
                composite[out_mask] = composite.get(out_mask, 0) + coefficient * other
        # transport through the cut points makes m o delta vanish
        assert not any(composite.values())
    check_faces(complex_)
