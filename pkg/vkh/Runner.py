import json
import logging
import dataclasses
from pathlib import Path
from typing import Optional, Callable, Dict, Any, List
from vkh.Diagram import Diagram
from vkh.FixtureReader import FixtureReader, find_fixture_dir
from vkh.LaurentPoly import LaurentPoly
from vkh.PDCode import PDCode
from vkh.Request import Request
from vkh.SelfTest import SelfTest
from vkh.Settings import Settings
from vkh.StateSum import kauffman_bracket, jones, unoriented_jones
from vkh.cube.BigradedComplex import BigradedComplex, build_complex, shift_complex, dump
from vkh.cube.FrobeniusStructure import KHOVANOV, LEE
from vkh.exceptions import (PDSyntaxError, PDArityError, InvalidLabelError, ValidationError, InvalidValueError,
                            ConsistencyError, FixtureError)
from vkh.homology.Homology import homology_of, oriented_shift, unoriented_shift, check_ring
from vkh.homology.HomologyTable import HomologyTable
from vkh.invariants.MultiCoreDecomposition import multi_core
from vkh.invariants.ParityData import parities
from vkh.invariants.ParityScheme import ParityScheme
from vkh.invariants.report import invariants_report

INPUT_ERRORS = (PDSyntaxError, PDArityError, InvalidLabelError, ValidationError, InvalidValueError, FixtureError, OSError)


@dataclasses.dataclass(frozen=True)
class RunResult:
    exit_code: int
    output: str = ''
    error: str = ''


class Runner:
    """Executes one Request and renders its output."""

    def __init__(self, request: Request, settings: Optional[Settings] = None, fixture_dir: Optional[Path] = None):
        self.request = request
        self.settings = settings or Settings.from_env(jobs=request.jobs, debug_checks=True if request.debug_dump else None)
        self.fixture_dir = fixture_dir
        self._reader: Optional[FixtureReader] = None
        self.handlers: Dict[str, Callable[[], str]] = {
            'bracket': lambda: self.render_poly(kauffman_bracket(self.diagram(), self.settings)),
            'jones': lambda: self.render_poly(jones(self.diagram(), self.settings)),
            'ujones': lambda: self.render_poly(unoriented_jones(self.diagram(), self.scheme, self.settings)),
            'kh': self.homology,
            'ukh': self.homology,
            'lee': self.homology,
            'decompose': self.decompose,
            'invariants': self.invariants,
            'fixtures': self.fixtures,
        }

    @property
    def reader(self) -> FixtureReader:
        if self._reader is None:
            self._reader = FixtureReader(self.fixture_dir or find_fixture_dir())
        return self._reader

    @property
    def scheme(self) -> ParityScheme:
        return ParityScheme.from_name(self.request.scheme)

    def diagram(self) -> Diagram:
        request = self.request
        given = [source for source in (request.input, request.path, request.fixture) if source]
        if len(given) != 1:
            raise InvalidValueError('Give exactly one of --input, a file path or --fixture.')
        if request.fixture:
            return self.reader.get_fixture(request.fixture).diagram
        if request.path:
            with Path(request.path).open('r', encoding='UTF-8') as file:
                text = file.read()
        else:
            text = request.input or ''
        return Diagram.from_pd(PDCode.from_text(text))

    def render(self, data: Any, text: str) -> str:
        if self.request.format == 'json':
            return json.dumps(data)
        return text

    def render_poly(self, poly: LaurentPoly) -> str:
        return self.render({'polynomial': poly.to_list(), 'text': poly.to_text()}, poly.to_text())

    def homology(self) -> str:
        request = self.request
        ring = check_ring(request.ring)
        diagram = self.diagram()
        if request.subcommand == 'kh':
            complex_ = shift_complex(build_complex(diagram, KHOVANOV, self.settings), *oriented_shift(diagram))
            theory = 'khovanov'
        elif request.subcommand == 'ukh':
            complex_ = shift_complex(build_complex(diagram, KHOVANOV, self.settings),
                                     *unoriented_shift(diagram, request.incorporate_sign, self.scheme))
            theory = 'unoriented khovanov'
        else:
            complex_ = shift_complex(build_complex(diagram, LEE, self.settings), *unoriented_shift(diagram))
            theory = 'lee'
        table = homology_of(complex_, ring, theory, self.settings)
        return self.render_table(table, complex_)

    def render_table(self, table: HomologyTable, complex_: BigradedComplex) -> str:
        data = table.to_dict()
        text = table.to_text()
        if self.request.debug_dump:
            data['dump'] = dump(complex_)
            text = '{}\n{}'.format(text, dump(complex_).rstrip())
        return self.render(data, text)

    def decompose(self) -> str:
        diagram = self.diagram()
        data = multi_core(diagram).to_dict()
        data.update(parities(diagram).to_dict())
        lines = ['core {}: {}'.format(index + 1, core) for index, core in enumerate(data['cores'])]
        lines.append('mantle: {}'.format(data['mantle']))
        lines.append('component parity: {}'.format(data['component_parity']))
        return self.render(data, '\n'.join(lines))

    def invariants(self) -> str:
        report = invariants_report(self.diagram(), self.scheme, self.settings)
        return self.render(report, '\n'.join('{}: {}'.format(key, value) for key, value in report.items()))

    def fixtures(self) -> str:
        entries = [self.reader.fixtures[name].to_dict() for name in self.reader.names()]
        lines = ['{name}  components={components} crossings={crossings}  {provenance}'.format(**entry) for entry in entries]
        return self.render(entries, '\n'.join(lines))

    def selftest(self) -> RunResult:
        diagrams = [(name, self.reader.fixtures[name].diagram) for name in self.reader.names()]
        diagrams.extend(SelfTest.random_diagrams(self.request.random_count, self.request.seed))
        results = SelfTest(self.settings).run(diagrams)
        lines: List[str] = [result.to_text() for result in results]
        passed = all(result.passed for result in results)
        return RunResult(0 if passed else 2, self.render([dataclasses.asdict(result) for result in results], '\n'.join(lines)))

    def execute(self) -> RunResult:
        try:
            if self.request.subcommand == 'selftest':
                return self.selftest()
            return RunResult(0, self.handlers[self.request.subcommand]())
        except ConsistencyError as e:
            logging.error('Internal consistency failure', exc_info=e)
            return RunResult(2, error='Internal consistency failure: {}'.format(e))
        except INPUT_ERRORS as e:
            return RunResult(1, error='Error: {}'.format(e))


def run(request: Request, settings: Optional[Settings] = None, fixture_dir: Optional[Path] = None) -> RunResult:
    try:
        runner = Runner(request, settings, fixture_dir)
    except InvalidValueError as e:
        return RunResult(1, error='Error: {}'.format(e))
    return runner.execute()


__all__ = ['RunResult', 'Runner', 'run']
