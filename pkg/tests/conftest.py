import os
from pathlib import Path
import pytest
from vkh.Diagram import Diagram
from vkh.FixtureReader import FixtureReader
from vkh.PDCode import PDCode


@pytest.fixture(scope="module")  # type: ignore
def fixture_dir() -> Path:
    this_dir = Path(os.path.dirname(os.path.realpath(__file__)))
    return this_dir.parent.joinpath('usr', 'share', 'vkh', 'fixtures.d')


@pytest.fixture(scope="module")  # type: ignore
def fixture_reader(fixture_dir: Path) -> FixtureReader:
    return FixtureReader(fixture_dir)


@pytest.fixture(scope="module")  # type: ignore
def trefoil(fixture_reader: FixtureReader) -> Diagram:
    return fixture_reader.get_fixture('trefoil_left').diagram


@pytest.fixture(scope="module")  # type: ignore
def hopf(fixture_reader: FixtureReader) -> Diagram:
    return fixture_reader.get_fixture('hopf_positive').diagram


@pytest.fixture(scope="module")  # type: ignore
def virtual_hopf(fixture_reader: FixtureReader) -> Diagram:
    return fixture_reader.get_fixture('virtual_hopf').diagram


@pytest.fixture(scope="module")  # type: ignore
def virtual_trefoil() -> Diagram:
    return Diagram.from_pd(PDCode.from_text('PD[X[4,3,1,2],X[1,4,2,3]]'))
