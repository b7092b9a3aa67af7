from fractions import Fraction
import pytest

from vkh.Diagram import Diagram, crossing_counts, delete_components, reverse_component
from vkh.FixtureReader import FixtureReader
from vkh.SelfTest import SelfTest
from vkh.StateSum import jones
from vkh.exceptions import InvalidValueError
from vkh.invariants.LinkingMatrix import linking_matrix
from vkh.invariants.MultiCoreDecomposition import even_core, multi_core, parity_fn
from vkh.invariants.ParityData import parities
from vkh.invariants.ParityScheme import ParityScheme
from vkh.invariants.modified_linking import (lambda_tilde_doubled, lambda_tilde, l_tilde, l_tilde_doubled, classical_sign_exponent,
                                             unoriented_sign_exponent)
from vkh.invariants.report import invariants_report


def test_scheme_names() -> None:
    assert ParityScheme.from_name('FirstCore') is ParityScheme.FIRSTCORE
    with pytest.raises(InvalidValueError):
        ParityScheme.from_name('second')


def test_hopf_linking(hopf: Diagram) -> None:
    matrix = linking_matrix(hopf)
    assert matrix.lk(0, 1) == 1
    assert matrix.lambda_doubled == 2
    assert parities(hopf).component_parity == (0, 0)
    assert lambda_tilde_doubled(hopf) == 2
    assert lambda_tilde_doubled(reverse_component(hopf, 1)) == -2


def test_virtual_hopf_parity(virtual_hopf: Diagram) -> None:
    data = parities(virtual_hopf)
    assert data.pair_parity == ((0, 1), (1, 0))
    assert data.odd_components == [0, 1]
    assert data.link_parity == 1
    assert linking_matrix(virtual_hopf).lk(0, 1) == Fraction(1, 2)


def test_virtual_hopf_modified_linking(virtual_hopf: Diagram, fixture_reader: FixtureReader) -> None:
    reversed_ = fixture_reader.get_fixture('virtual_hopf_reversed').diagram
    for diagram in (virtual_hopf, reversed_):
        assert lambda_tilde(diagram) == Fraction(-1, 2)
        assert l_tilde_doubled(lambda_tilde_doubled(diagram)) == 3
    assert classical_sign_exponent(virtual_hopf) == 0
    assert classical_sign_exponent(reversed_) == -2
    assert unoriented_sign_exponent(virtual_hopf) == -2
    assert unoriented_sign_exponent(virtual_hopf, ParityScheme.NONE) == -1


def test_l_tilde() -> None:
    assert l_tilde(Fraction(-1, 2)) == Fraction(3, 2)
    assert l_tilde(Fraction(5, 1)) == Fraction(1, 1)
    with pytest.raises(InvalidValueError):
        l_tilde(Fraction(1, 3))


def test_none_scheme_has_no_modified_linking(hopf: Diagram) -> None:
    with pytest.raises(InvalidValueError):
        lambda_tilde_doubled(hopf, ParityScheme.NONE)


def test_single_core(fixture_reader: FixtureReader) -> None:
    diagram = fixture_reader.get_fixture('even_virtual_borromean').diagram
    assert parities(diagram).component_parity == (0, 0, 0)
    decomposition = multi_core(diagram)
    assert decomposition.cores == (frozenset({0, 1, 2}),)
    assert decomposition.final_mantle == frozenset()


def test_core_chain(fixture_reader: FixtureReader) -> None:
    diagram = fixture_reader.get_fixture('core_chain').diagram
    assert even_core(diagram) == [4]
    decomposition = multi_core(diagram)
    assert decomposition.to_dict() == {'cores': [[4]], 'mantle': [0, 1, 2, 3]}
    assert decomposition.core_of(4) == 0
    assert decomposition.core_of(2) == -1


def test_all_odd_components(virtual_hopf: Diagram) -> None:
    decomposition = multi_core(virtual_hopf)
    assert decomposition.cores == ()
    assert decomposition.final_mantle == frozenset({0, 1})


def test_parity_functions(fixture_reader: FixtureReader) -> None:
    decomposition = multi_core(fixture_reader.get_fixture('core_chain').diagram)
    assert parity_fn(decomposition, ParityScheme.MULTICORE, 0, 1) == 1
    assert parity_fn(decomposition, ParityScheme.ALLONE, 0, 1) == 1
    assert parity_fn(decomposition, ParityScheme.FIRSTCORE, 2, 4) == 1
    with pytest.raises(InvalidValueError):
        parity_fn(decomposition, ParityScheme.MULTICORE, 1, 1)
    with pytest.raises(InvalidValueError):
        parity_fn(decomposition, ParityScheme.NONE, 0, 1)

    borromean = multi_core(fixture_reader.get_fixture('even_virtual_borromean').diagram)
    assert parity_fn(borromean, ParityScheme.MULTICORE, 0, 2) == 0
    assert parity_fn(borromean, ParityScheme.FIRSTCORE, 1, 2) == 0


def test_report(virtual_hopf: Diagram) -> None:
    report = invariants_report(virtual_hopf)
    assert report['scheme'] == 'multicore'
    assert report['lambda_tilde'] == -1
    assert report['l_tilde'] == 3
    assert report['crossing_counts'] == {'s_plus': 2, 's_minus': 0, 'm': 1, 'n_plus': 3, 'n_minus': 0}
    assert report['jones_at_one'] == [0, 0]
    assert report['unoriented_jones_at_one'] == [0, 0]
    assert report['cores'] == []
    assert report['mantle'] == [0, 1]

    plain = invariants_report(virtual_hopf, ParityScheme.NONE)
    assert plain['lambda_tilde'] is None
    assert plain['unoriented_sign_exponent'] == -1


def test_random_identities() -> None:
    for label, diagram in SelfTest.random_diagrams(1000, seed=17, max_crossings=8):
        counts = crossing_counts(diagram)
        assert 2 * counts.n_minus == -linking_matrix(diagram).lambda_doubled + 2 * counts.s_minus + counts.m, label
        for scheme in (ParityScheme.MULTICORE, ParityScheme.FIRSTCORE, ParityScheme.ALLONE):
            assert (lambda_tilde_doubled(diagram, scheme) - counts.m) % 2 == 0, label
        SelfTest.check_n_minus(diagram)
        SelfTest.check_integrality(diagram)


def test_delete_order_independent(fixture_reader: FixtureReader) -> None:
    for name in ('core_chain', 'even_virtual_borromean'):
        diagram = fixture_reader.get_fixture(name).diagram
        for first in range(diagram.component_count):
            for second in range(first + 1, diagram.component_count):
                at_once = delete_components(diagram, [first, second])
                low_first = delete_components(delete_components(diagram, [first]), [second - 1])
                high_first = delete_components(delete_components(diagram, [second]), [first])
                for variant in (low_first, high_first):
                    assert variant.component_count == at_once.component_count, name
                    assert parities(variant).to_dict() == parities(at_once).to_dict(), name
                    assert jones(variant) == jones(at_once), name
        assert delete_components(diagram, []) == diagram


def test_multi_core_idempotent(fixture_reader: FixtureReader) -> None:
    for name in fixture_reader.names():
        diagram = fixture_reader.get_fixture(name).diagram
        decomposition = multi_core(diagram)
        if not decomposition.cores:
            continue
        kept = sorted(component for core in decomposition.cores for component in core)
        renumber = {component: index for index, component in enumerate(kept)}
        again = multi_core(delete_components(diagram, sorted(decomposition.final_mantle)))
        assert again.cores == tuple(frozenset(renumber[component] for component in core) for core in decomposition.cores), name
        assert not again.final_mantle, name
