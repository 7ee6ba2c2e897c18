"""Smith normal form of exact integer matrices.

Elimination by extended Euclidean steps on a numpy object array so entries
stay Python ints. Left and right transforms are tracked so that
left @ A @ right = D.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    """Diagonal d_1 | d_2 | ... (nonzero entries only) and unimodular transforms."""
    diagonal: Tuple[int, ...]
    left: np.ndarray
    right: np.ndarray
    shape: Tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def matrix(self) -> np.ndarray:
        d = np.zeros(self.shape, dtype=object)
        for i, value in enumerate(self.diagonal):
            d[i, i] = value
        return d


def as_object_matrix(rows: Sequence[Sequence[int]], columns: Optional[int] = None) -> np.ndarray:
    """Integer matrix with object dtype; `columns` fixes the width for empty input."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return np.zeros((0, columns or 0), dtype=object)
    matrix = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != matrix.shape[1]:
            raise ValueError("Matrix rows have different lengths")
        for j, value in enumerate(row):
            matrix[i, j] = value
    return matrix


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


class SmithNormalForm:
    """Computes the Smith normal form of an integer matrix."""

    def __init__(self, matrix):
        self.original = matrix if isinstance(matrix, np.ndarray) else as_object_matrix(matrix)
        self.work = self.original.astype(object).copy()
        self.left = _identity(self.num_rows)
        self.right = _identity(self.num_columns)

    @property
    def num_rows(self) -> int:
        return self.work.shape[0]

    @property
    def num_columns(self) -> int:
        return self.work.shape[1]

    def compute(self) -> SnfResult:
        s = 0
        while s < min(self.work.shape) and self._settle_pivot(s):
            s += 1
        diagonal = tuple(int(self.work[i, i]) for i in range(s))
        logger.debug(f"SNF of {self.work.shape} matrix: diagonal {diagonal}")
        return SnfResult(diagonal, self.left, self.right, self.work.shape)

    def _settle_pivot(self, s: int) -> bool:
        """Make work[s, s] the next elementary divisor; False when the rest is zero."""
        while True:
            row, col = get_nonzero_min_abs(self.work, s)
            if row is None:
                return False
            self._swap_rows(s, row)
            self._swap_columns(s, col)
            pivot = self.work[s, s]

            clean = True
            for i in range(s + 1, self.num_rows):
                if self.work[i, s] != 0:
                    self._add_row(i, s, -(self.work[i, s] // pivot))
                    clean = clean and self.work[i, s] == 0
            for j in range(s + 1, self.num_columns):
                if self.work[s, j] != 0:
                    self._add_column(j, s, -(self.work[s, j] // pivot))
                    clean = clean and self.work[s, j] == 0
            if not clean:
                continue

            offender = self._find_non_divisible(s)
            if offender is not None:
                self._add_row(s, offender, 1)
                continue
            if self.work[s, s] < 0:
                self._negate_row(s)
            return True

    def _find_non_divisible(self, s: int) -> Optional[int]:
        pivot = self.work[s, s]
        for i in range(s + 1, self.num_rows):
            for j in range(s + 1, self.num_columns):
                if self.work[i, j] % pivot != 0:
                    return i
        return None

    def _swap_rows(self, a: int, b: int):
        self.left[[a, b]] = self.left[[b, a]]
        self.work[[a, b]] = self.work[[b, a]]

    def _swap_columns(self, a: int, b: int):
        self.right[:, [a, b]] = self.right[:, [b, a]]
        self.work[:, [a, b]] = self.work[:, [b, a]]

    def _negate_row(self, a: int):
        self.left[a] *= -1
        self.work[a] *= -1

    def _add_row(self, target: int, source: int, k: int):
        """row[target] += k * row[source]"""
        self.left[target] += self.left[source] * k
        self.work[target] += self.work[source] * k

    def _add_column(self, target: int, source: int, k: int):
        """column[target] += k * column[source]"""
        self.right[:, target] += self.right[:, source] * k
        self.work[:, target] += self.work[:, source] * k


def get_nonzero_min_abs(matrix: np.ndarray, s: int) -> Tuple[Optional[int], Optional[int]]:
    """Position of the smallest nonzero |entry| with row, column >= s."""
    idx: Tuple[Optional[int], Optional[int]] = (None, None)
    smallest = None
    for i in range(s, matrix.shape[0]):
        for j in range(s, matrix.shape[1]):
            value = matrix[i, j]
            if value == 0:
                continue
            if smallest is None or abs(value) < smallest:
                idx = (i, j)
                smallest = abs(value)
    return idx


def smith_normal_form(rows, columns: Optional[int] = None) -> SnfResult:
    """SNF of a list-of-rows integer matrix (or numpy array)."""
    matrix = rows if isinstance(rows, np.ndarray) else as_object_matrix(rows, columns)
    return SmithNormalForm(matrix).compute()


def to_int_rows(matrix: np.ndarray) -> List[List[int]]:
    return [[int(v) for v in row] for row in matrix.tolist()]
