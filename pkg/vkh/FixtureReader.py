import os
import logging
import dataclasses
from pathlib import Path
from typing import Dict, List, Optional
import yaml
from vkh.PDCode import PDCode
from vkh.Diagram import Diagram
from vkh.exceptions import FixtureError, PDArityError, InvalidLabelError, ValidationError
import vkh as app_root

APP_ROOT_FOLDER = os.path.abspath(os.path.dirname(app_root.__file__))


@dataclasses.dataclass(frozen=True)
class Fixture:
    name: str
    pd: PDCode
    provenance: str
    components: int
    description: str = ''
    classical: bool = False

    @property
    def diagram(self) -> Diagram:
        return Diagram.from_pd(self.pd)

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'pd': self.pd.to_list(),
            'provenance': self.provenance,
            'components': self.components,
            'crossings': len(self.pd),
            'description': self.description,
            'classical': self.classical
        }


class FixtureReader:
    """Reads the *.yml fixture corpus; files with format errors are logged and skipped."""

    required_keys = ('name', 'pd', 'provenance')

    def __init__(self, directory: Path):
        if not directory.is_dir():
            raise FileNotFoundError('Fixture directory {} does not exist.'.format(directory))
        self.fixtures: Dict[str, Fixture] = {}
        for file_path in sorted(directory.glob('*.yml')):
            try:
                fixture = self.parse_file(file_path)
                self.fixtures[fixture.name] = fixture
            except FixtureError as e:
                logging.error('Parsing of fixture file %s failed, ignoring it...', file_path.name, exc_info=e)

    @classmethod
    def parse_file(cls, file_path: Path) -> Fixture:
        with file_path.open('r', encoding='UTF-8') as file:
            try:
                data = yaml.safe_load(file)
            except yaml.YAMLError as e:
                raise FixtureError('Invalid YAML in {}.'.format(file_path.name)) from e
        if not isinstance(data, dict):
            raise FixtureError('Fixture {} is not a mapping.'.format(file_path.name))
        missing = [key for key in cls.required_keys if key not in data]
        if missing:
            raise FixtureError('Fixture {} lacks {}.'.format(file_path.name, ', '.join(missing)))
        try:
            pd = PDCode.from_tuples(data['pd'] or [])
            diagram = Diagram.from_pd(pd)
        except (TypeError, PDArityError, InvalidLabelError, ValidationError) as e:
            raise FixtureError('Fixture {} has an invalid PD code: {}'.format(file_path.name, e)) from e
        components = data.get('components', diagram.component_count)
        if components != diagram.component_count:
            raise FixtureError('Fixture {} declares {} components, PD code has {}.'.format(file_path.name, components, diagram.component_count))
        return Fixture(
            name=str(data['name']),
            pd=pd,
            provenance=str(data['provenance']),
            components=components,
            description=str(data.get('description', '')),
            classical=bool(data.get('classical', False))
        )

    def get_fixture(self, name: str) -> Fixture:
        try:
            return self.fixtures[name]
        except KeyError as e:
            raise FixtureError('Unknown fixture "{}".'.format(name)) from e

    def names(self) -> List[str]:
        return sorted(self.fixtures)


def find_fixture_dir(extra: Optional[str] = None) -> Path:
    path_list = [
        os.path.abspath(os.path.join(APP_ROOT_FOLDER, '..', 'usr', 'share', 'vkh', 'fixtures.d')),
        os.path.join('/', 'usr', 'share', 'vkh', 'fixtures.d')
    ]
    if extra:
        path_list.insert(0, extra)

    if os.name == 'nt':
        local_app_data = os.getenv('LOCALAPPDATA')
        if local_app_data:
            path_list.append(os.path.abspath(os.path.join(local_app_data, 'vkh', 'fixtures.d')))

    found = [path for path in path_list if os.path.isdir(path)]
    if not found:
        raise FixtureError("Fixture directory 'fixtures.d' was not found in any search path.")
    return Path(found[0])
