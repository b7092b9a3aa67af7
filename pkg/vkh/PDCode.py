import re
import json
import dataclasses
from typing import List, Tuple, Iterator, Any
from vkh.exceptions import PDSyntaxError, PDArityError, InvalidLabelError

Crossing = Tuple[int, int, int, int]


@dataclasses.dataclass(frozen=True)
class PDCode:
    """Ordered list of crossing 4-tuples (a, b, c, d), counterclockwise from the incoming under-arc."""

    crossings: Tuple[Crossing, ...] = ()

    token_regexp = re.compile(r'\s*(?:(?P<word>[A-Za-z]+)|(?P<number>[-+]?\d+)|(?P<punct>[\[\],])|(?P<other>\S))')

    def __len__(self) -> int:
        return len(self.crossings)

    def __iter__(self) -> Iterator[Crossing]:
        return iter(self.crossings)

    @property
    def labels(self) -> List[int]:
        return sorted({label for crossing in self.crossings for label in crossing})

    @classmethod
    def from_tuples(cls, crossings: Any) -> 'PDCode':
        result = []
        for index, crossing in enumerate(crossings):
            if len(crossing) != 4:
                raise PDArityError('Crossing #{} has {} entries, expected 4.'.format(index, len(crossing)))
            for label in crossing:
                if isinstance(label, bool) or not isinstance(label, int):
                    raise InvalidLabelError('Crossing #{} has non-integer label {!r}.'.format(index, label))
                if label < 1:
                    raise InvalidLabelError('Crossing #{} has non-positive label {}.'.format(index, label))
            result.append((crossing[0], crossing[1], crossing[2], crossing[3]))
        return cls(tuple(result))

    @classmethod
    def from_text(cls, text: str) -> 'PDCode':
        stripped = text.strip()
        if not stripped:
            raise PDSyntaxError(0, 'Empty PD input')
        if stripped.startswith('['):
            return cls._from_json(text)
        return cls._from_bracket_syntax(text)

    @classmethod
    def _from_json(cls, text: str) -> 'PDCode':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PDSyntaxError(e.pos, 'Invalid JSON: {}'.format(e.msg)) from e
        if not isinstance(data, list) or not all(isinstance(crossing, list) for crossing in data):
            raise PDSyntaxError(0, 'Expected a JSON array of 4-element arrays')
        return cls.from_tuples(data)

    @classmethod
    def _tokens(cls, text: str) -> List[Tuple[str, str, int]]:
        tokens = []
        position = 0
        while position < len(text):
            match = cls.token_regexp.match(text, position)
            if not match or match.end() == position:
                break
            kind = match.lastgroup or 'other'
            tokens.append((kind, match.group(kind), match.start(kind)))
            position = match.end()
        tokens.append(('end', '', len(text)))
        return tokens

    @classmethod
    def _from_bracket_syntax(cls, text: str) -> 'PDCode':
        tokens = cls._tokens(text)
        cursor = 0

        def expect(kind: str, value: str) -> int:
            nonlocal cursor
            token_kind, token_value, token_position = tokens[cursor]
            if token_kind != kind or token_value != value:
                shown = token_value if token_kind != 'end' else 'end of input'
                raise PDSyntaxError(token_position, 'Expected "{}", found "{}"'.format(value, shown))
            cursor += 1
            return token_position

        def peek() -> Tuple[str, str, int]:
            return tokens[cursor]

        expect('word', 'PD')
        expect('punct', '[')
        crossings: List[List[int]] = []
        if peek()[1] != ']':
            while True:
                start = expect('word', 'X')
                expect('punct', '[')
                entries = []
                while True:
                    token_kind, token_value, token_position = peek()
                    if token_kind != 'number':
                        raise PDSyntaxError(token_position, 'Expected an arc label, found "{}"'.format(token_value or 'end of input'))
                    entries.append(int(token_value))
                    cursor += 1
                    if peek()[1] == ',':
                        cursor += 1
                        continue
                    expect('punct', ']')
                    break
                if len(entries) != 4:
                    raise PDArityError('Crossing at offset {} has {} entries, expected 4.'.format(start, len(entries)))
                crossings.append(entries)
                if peek()[1] == ',':
                    cursor += 1
                    continue
                break
        expect('punct', ']')
        token_kind, token_value, token_position = peek()
        if token_kind != 'end':
            raise PDSyntaxError(token_position, 'Unexpected trailing "{}"'.format(token_value))
        return cls.from_tuples(crossings)

    def to_text(self) -> str:
        return 'PD[{}]'.format(','.join('X[{},{},{},{}]'.format(*crossing) for crossing in self.crossings))

    def to_json(self) -> str:
        return json.dumps([list(crossing) for crossing in self.crossings], separators=(',', ':'))

    def to_list(self) -> List[List[int]]:
        return [list(crossing) for crossing in self.crossings]


def parse_pd(text: str) -> PDCode:
    return PDCode.from_text(text)


def render(pd: PDCode, style: str = 'text') -> str:
    if style == 'json':
        return pd.to_json()
    return pd.to_text()
