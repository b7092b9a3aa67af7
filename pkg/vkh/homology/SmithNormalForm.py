import logging
from typing import Dict, List, Set, Tuple
import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors
from vkh.homology.SparseMatrix import SparseMatrix


def _eliminate_units(matrix: SparseMatrix) -> Tuple[int, Dict[int, Dict[int, int]]]:
    """Pivot on +-1 entries while any remain; returns the pivot count and the leftover rows."""
    rows = {row: dict(line) for row, line in matrix.entries.items()}
    columns: Dict[int, Set[int]] = {}
    for row, line in rows.items():
        for col in line:
            columns.setdefault(col, set()).add(row)

    pivots = 0
    changed = True
    while changed:
        changed = False
        for row in sorted(rows, key=lambda item: len(rows[item])):
            line = rows.get(row)
            if not line:
                continue
            unit_cols = [col for col, value in line.items() if value in (1, -1)]
            if not unit_cols:
                continue
            col = min(unit_cols, key=lambda item: len(columns[item]))
            value = line[col]
            for other in list(columns[col]):
                if other == row:
                    continue
                other_line = rows[other]
                factor = other_line[col] * value
                for pivot_col, pivot_value in line.items():
                    updated = other_line.get(pivot_col, 0) - factor * pivot_value
                    if updated:
                        if pivot_col not in other_line:
                            columns[pivot_col].add(other)
                        other_line[pivot_col] = updated
                    elif pivot_col in other_line:
                        del other_line[pivot_col]
                        columns[pivot_col].discard(other)
                if not other_line:
                    del rows[other]
            for pivot_col in line:
                columns[pivot_col].discard(row)
            del columns[col]
            del rows[row]
            pivots += 1
            changed = True
    return pivots, rows


def smith_normal_form(matrix: SparseMatrix) -> List[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    pivots, rows = _eliminate_units(matrix)
    if not rows:
        return [1] * pivots
    row_ids = sorted(rows)
    col_ids = sorted({col for line in rows.values() for col in line})
    logging.debug('Dense Smith normal form on %sx%s remainder after %s unit pivots', len(row_ids), len(col_ids), pivots)
    dense = DomainMatrix([[ZZ(rows[row].get(col, 0)) for col in col_ids] for row in row_ids], (len(row_ids), len(col_ids)), ZZ)
    remainder = [abs(int(factor)) for factor in invariant_factors(dense) if factor]
    return [1] * pivots + remainder


def rank_q(matrix: SparseMatrix) -> int:
    return len(smith_normal_form(matrix))


def rank_f2(matrix: SparseMatrix) -> int:
    """Rank over GF(2) by XOR elimination on a dense uint8 array."""
    if matrix.is_zero:
        return 0
    reduced = np.zeros((matrix.rows, matrix.cols), dtype=np.uint8)
    for row, col, value in matrix.nonzero():
        reduced[row, col] = value % 2
    rank = 0
    for col in range(matrix.cols):
        found = np.nonzero(reduced[rank:, col])[0]
        if not found.size:
            continue
        pivot = rank + int(found[0])
        if pivot != rank:
            reduced[[rank, pivot]] = reduced[[pivot, rank]]
        below = np.nonzero(reduced[rank + 1:, col])[0] + rank + 1
        reduced[below] ^= reduced[rank]
        rank += 1
        if rank == matrix.rows:
            break
    return rank
