import random
import pytest

from vkh.Diagram import (Diagram, validate, crossing_counts, reverse_component, rotate_labels, orientations, flip_crossing,
                         r1_stabilize, delete_components)
from vkh.FixtureReader import FixtureReader
from vkh.PDCode import PDCode
from vkh.exceptions import ValidationError, InvalidValueError
from vkh.tools import random_pd


def pd(*crossings: tuple) -> PDCode:
    return PDCode.from_tuples(crossings)


def test_components(hopf: Diagram) -> None:
    assert hopf.components == ((1, 2, 3, 4), (5, 6, 7, 8))
    assert hopf.successor[4] == 1
    assert hopf.successor[8] == 5
    assert hopf.component_of[6] == 1


def test_signs_and_kinds(hopf: Diagram) -> None:
    assert [info.sign for info in hopf.crossing_info] == [1, 1, 1, 1]
    assert [info.kind for info in hopf.crossing_info] == ['mixed', 'mixed', 'self', 'self']
    assert crossing_counts(hopf) == (2, 0, 2, 4, 0)


def test_trefoil_counts(trefoil: Diagram) -> None:
    assert crossing_counts(trefoil) == (0, 3, 0, 0, 3)


def test_label_appears_once() -> None:
    with pytest.raises(ValidationError):
        validate(pd((1, 2, 3, 4)))


def test_short_component() -> None:
    with pytest.raises(ValidationError):
        validate(pd((1, 2, 2, 1)))


def test_non_contiguous_component() -> None:
    with pytest.raises(ValidationError):
        validate(pd((1, 3, 2, 2), (3, 1, 5, 5)))


def test_under_strand_direction() -> None:
    with pytest.raises(ValidationError):
        validate(pd((2, 3, 1, 1), (3, 2, 4, 4)))


def test_arc_slots(trefoil: Diagram) -> None:
    # Arc 4 leaves crossing 1 through c and enters crossing 0 through b.
    assert trefoil.arc_slots[4] == ((1, 2), (0, 1))
    assert trefoil.partner((1, 2)) == (0, 1)
    assert trefoil.is_incoming((0, 1))
    assert trefoil.is_cut((0, 2))
    assert not trefoil.is_cut((0, 0))


def test_reverse_component(hopf: Diagram) -> None:
    reversed_ = reverse_component(hopf, 1)
    assert reversed_.component_count == 2
    counts = crossing_counts(reversed_)
    assert counts.m == 2
    assert [info.sign for info in reversed_.crossing_info if info.is_mixed] == [-1, -1]
    assert reverse_component(reversed_, 1) == hopf


def test_reverse_component_range(hopf: Diagram) -> None:
    with pytest.raises(InvalidValueError):
        reverse_component(hopf, 2)


def test_rotate_labels(trefoil: Diagram) -> None:
    rotated = rotate_labels(trefoil, 0, 2)
    assert crossing_counts(rotated) == crossing_counts(trefoil)
    assert rotate_labels(rotated, 0, 4) == trefoil


def test_orientations(hopf: Diagram) -> None:
    diagrams = list(orientations(hopf))
    assert len(diagrams) == 4
    assert diagrams[0] == hopf
    assert [crossing_counts(diagram).n_minus for diagram in diagrams] == [0, 2, 2, 0]


def test_flip_crossing(trefoil: Diagram) -> None:
    flipped = flip_crossing(trefoil, 1)
    assert [info.sign for info in flipped.crossing_info] == [-1, 1, -1]
    assert flip_crossing(flipped, 1).crossing_info == trefoil.crossing_info


def test_r1_stabilize(trefoil: Diagram) -> None:
    stabilized = r1_stabilize(trefoil, 3, -1)
    assert stabilized.crossing_count == 4
    assert stabilized.components == ((1, 2, 3, 4, 5, 6, 7, 8),)
    assert crossing_counts(stabilized).s_minus == 4
    with pytest.raises(InvalidValueError):
        r1_stabilize(trefoil, 3, 0)


def test_delete_components(hopf: Diagram) -> None:
    remaining = delete_components(hopf, [1])
    assert remaining.component_count == 1
    assert all(not info.is_mixed for info in remaining.crossing_info)
    assert remaining.crossing_count >= 2


def test_delete_from_chain(fixture_reader: FixtureReader) -> None:
    chain = fixture_reader.get_fixture('core_chain').diagram
    remaining = delete_components(chain, [0, 4])
    assert remaining.component_count == 3
    assert sum(1 for info in remaining.crossing_info if info.is_mixed) == 2


def test_random_diagrams_validate() -> None:
    rng = random.Random(7)
    for _ in range(50):
        diagram = Diagram.from_pd(random_pd(rng, 6, 3))
        assert all(len(labels) >= 3 for labels in diagram.components)
