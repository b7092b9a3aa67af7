import dataclasses
from typing import Dict, List, Iterator, Tuple, Sequence


@dataclasses.dataclass
class SparseMatrix:
    """Integer matrix stored row-wise as {row: {col: value}} without zero entries."""

    rows: int
    cols: int
    entries: Dict[int, Dict[int, int]] = dataclasses.field(default_factory=dict)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> 'SparseMatrix':
        matrix = cls(len(dense), len(dense[0]) if dense else 0)
        for row, values in enumerate(dense):
            for col, value in enumerate(values):
                matrix.add(row, col, value)
        return matrix

    def add(self, row: int, col: int, value: int) -> None:
        if not value:
            return
        line = self.entries.setdefault(row, {})
        total = line.get(col, 0) + value
        if total:
            line[col] = total
        else:
            del line[col]
            if not line:
                del self.entries[row]

    def get(self, row: int, col: int) -> int:
        return self.entries.get(row, {}).get(col, 0)

    def nonzero(self) -> Iterator[Tuple[int, int, int]]:
        for row in sorted(self.entries):
            line = self.entries[row]
            for col in sorted(line):
                yield row, col, line[col]

    def column(self, col: int) -> Dict[int, int]:
        return {row: line[col] for row, line in self.entries.items() if col in line}

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'SparseMatrix':
        row_index = {row: position for position, row in enumerate(rows)}
        col_index = {col: position for position, col in enumerate(cols)}
        result = SparseMatrix(len(rows), len(cols))
        for row, line in self.entries.items():
            if row not in row_index:
                continue
            for col, value in line.items():
                if col in col_index:
                    result.add(row_index[row], col_index[col], value)
        return result

    def compose(self, other: 'SparseMatrix') -> 'SparseMatrix':
        """self @ other."""
        result = SparseMatrix(self.rows, other.cols)
        for row, line in self.entries.items():
            for middle, value in line.items():
                for col, other_value in other.entries.get(middle, {}).items():
                    result.add(row, col, value * other_value)
        return result

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for row, col, value in self.nonzero():
            dense[row][col] = value
        return dense
