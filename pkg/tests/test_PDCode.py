import pytest

from vkh.PDCode import PDCode, parse_pd, render
from vkh.exceptions import PDSyntaxError, PDArityError, InvalidLabelError


def test_parse_bracket_syntax() -> None:
    pd = parse_pd('PD[X[1, 4, 2, 5], X[3,6,4,1],\n X[5,2,6,3]]')
    assert pd.crossings == ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
    assert len(pd) == 3
    assert pd.labels == [1, 2, 3, 4, 5, 6]


def test_parse_json() -> None:
    assert parse_pd('[[4,3,1,2],[1,4,2,3]]').crossings == ((4, 3, 1, 2), (1, 4, 2, 3))


def test_parse_empty_diagram() -> None:
    assert len(parse_pd('PD[]')) == 0
    assert len(parse_pd('[]')) == 0


def test_render() -> None:
    pd = PDCode(((4, 3, 1, 2), (1, 4, 2, 3)))
    assert render(pd) == 'PD[X[4,3,1,2],X[1,4,2,3]]'
    assert render(pd, 'json') == '[[4,3,1,2],[1,4,2,3]]'
    assert parse_pd(render(pd)) == pd


def test_empty_input() -> None:
    with pytest.raises(PDSyntaxError) as e:
        parse_pd('   ')
    assert e.value.position == 0


def test_syntax_error_position() -> None:
    with pytest.raises(PDSyntaxError) as e:
        parse_pd('PD[X[1,2,3,4] X[1,2,3,4]]')
    assert e.value.position == 14


def test_trailing_garbage() -> None:
    with pytest.raises(PDSyntaxError):
        parse_pd('PD[X[1,2,3,4]] extra')


def test_invalid_json() -> None:
    with pytest.raises(PDSyntaxError):
        parse_pd('[[1,2,3,4],')


def test_arity() -> None:
    with pytest.raises(PDArityError):
        parse_pd('PD[X[1,2,3]]')
    with pytest.raises(PDArityError):
        PDCode.from_tuples([(1, 2, 3, 4, 5)])


def test_labels() -> None:
    with pytest.raises(InvalidLabelError):
        PDCode.from_tuples([(0, 1, 2, 3)])
    with pytest.raises(InvalidLabelError):
        PDCode.from_tuples([(1, 2, 3, True)])
    with pytest.raises(InvalidLabelError):
        parse_pd('[[1, 2, 3, "4"]]')
