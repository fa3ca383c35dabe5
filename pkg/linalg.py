"""Sparse exact linear algebra over the rationals.

Matrices are stored column-wise as ``{row: value}`` dictionaries. Ranks and
kernels come from a left-to-right column reduction keyed on the lowest
nonzero row of each column (the reduction used for boundary matrices in
persistence computations). In exact mode the reduction is fraction-free:
columns are scaled to primitive integer vectors and combined with integer
multipliers, so no Fraction arithmetic happens inside the loop. A modular
mode runs the same reduction over GF(p).
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

logger = logging.getLogger('linalg')


def _column_scale(column):
    """The rational factor that turns a column into a primitive integer column"""
    entries = [Fraction(value) for value in column.values() if value != 0]
    if not entries:
        return Fraction(1)
    scale = math.lcm(*(value.denominator for value in entries))
    return Fraction(scale, math.gcd(*(int(value * scale) for value in entries)))


def _integral_column(column):
    """Scale a rational column to a primitive integer column"""
    scale = _column_scale(column)
    return {row: int(Fraction(value) * scale) for row, value in column.items() if value != 0}


def _modular_column(column, prime):
    out = {}
    for row, value in column.items():
        value = Fraction(value)
        residue = value.numerator * pow(value.denominator, -1, prime) % prime
        if residue:
            out[row] = residue
    return out


def _combine(x, a, y, b, prime=None):
    """Return a*x - b*y, dropping zeros (entries reduced mod prime if given)"""
    out = {k: a * v for k, v in x.items()} if a != 1 else dict(x)
    for k, v in y.items():
        value = out.get(k, 0) - b * v
        if prime is not None:
            value %= prime
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


@dataclass(frozen=True)
class Reduction:
    """Outcome of a column reduction: R = D·V with R column-reduced"""
    reduced: tuple
    transforms: tuple
    pivots: dict

    @property
    def rank(self):
        return sum(1 for column in self.reduced if column)


def reduce_columns(columns, prime=None, track=False):
    """Column-reduce a sequence of sparse columns.

    With ``track=True`` the transform columns V are kept so that the zero
    columns of R yield a kernel basis.
    """
    pivots = {}
    reduced = []
    transforms = []
    for j, column in enumerate(columns):
        col = _modular_column(column, prime) if prime else _integral_column(column)
        v = {j: 1 if prime else _column_scale(column)} if track else None
        while col:
            low = max(col)
            i = pivots.get(low)
            if i is None:
                break
            pivot = reduced[i]
            if prime is None:
                a, b = pivot[low], col[low]
                col = _combine(col, a, pivot, b)
                if track:
                    v = _combine(v, a, transforms[i], b)
                g = math.gcd(*col.values())
                if g > 1:
                    col = {k: value // g for k, value in col.items()}
                    if track:
                        v = {k: Fraction(value, g) for k, value in v.items()}
            else:
                factor = col[low] * pow(pivot[low], -1, prime) % prime
                col = _combine(col, 1, pivot, factor, prime)
                if track:
                    v = _combine(v, 1, transforms[i], factor, prime)
        if col:
            pivots[max(col)] = j
        reduced.append(col)
        transforms.append(v)
    return Reduction(tuple(reduced), tuple(transforms) if track else (), pivots)


def _normalize_vector(vector):
    """Primitive integer vector whose entry at the largest index is positive"""
    vector = _integral_column(vector)
    if vector and vector[max(vector)] < 0:
        vector = {k: -value for k, value in vector.items()}
    return vector


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse matrix with exact rational (usually integer) entries.

    ``columns[j]`` maps row index to a nonzero value. Instances are treated
    as immutable; nothing in the engine mutates a column after construction.
    """
    n_rows: int
    columns: tuple

    @property
    def n_cols(self):
        return len(self.columns)

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    @property
    def nnz(self):
        return sum(len(column) for column in self.columns)

    @classmethod
    def zero(cls, n_rows, n_cols):
        return cls(n_rows, tuple({} for _ in range(n_cols)))

    @classmethod
    def from_dense(cls, rows):
        """Build from a list of rows (used mainly by tests)"""
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        columns = tuple(
            {i: rows[i][j] for i in range(n_rows) if rows[i][j] != 0}
            for j in range(n_cols)
        )
        return cls(n_rows, columns)

    def entry(self, i, j):
        return self.columns[j].get(i, 0)

    def to_dense(self):
        dense = [[Fraction(0)] * self.n_cols for _ in range(self.n_rows)]
        for j, column in enumerate(self.columns):
            for i, value in column.items():
                dense[i][j] = Fraction(value)
        return dense

    def is_zero(self):
        return all(not column for column in self.columns)

    def restrict(self, rows=None, cols=None):
        """Submatrix on the given row and column indices, renumbered in the given order"""
        cols = range(self.n_cols) if cols is None else cols
        if rows is None:
            return SparseMatrix(self.n_rows, tuple(self.columns[j] for j in cols))
        position = {row: k for k, row in enumerate(rows)}
        columns = tuple(
            {position[i]: value for i, value in self.columns[j].items() if i in position}
            for j in cols
        )
        return SparseMatrix(len(position), columns)

    def __matmul__(self, other):
        if self.n_cols != other.n_rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        columns = []
        for column in other.columns:
            out = {}
            for k, coefficient in column.items():
                for i, value in self.columns[k].items():
                    total = out.get(i, 0) + coefficient * value
                    if total:
                        out[i] = total
                    else:
                        out.pop(i, None)
            columns.append(out)
        return SparseMatrix(self.n_rows, tuple(columns))

    def rank(self, prime=None):
        """Exact rank over Q, or rank over GF(prime) when a prime is given"""
        if not self.columns or self.n_rows == 0:
            return 0
        result = reduce_columns(self.columns, prime=prime).rank
        logger.debug(f"rank of {self.n_rows}x{self.n_cols} matrix "
                     f"({'mod ' + str(prime) if prime else 'exact'}): {result}")
        return result

    def kernel_basis(self):
        """Echelon basis of the right kernel as primitive integer vectors"""
        if not self.columns:
            return []
        reduction = reduce_columns(self.columns, track=True)
        return [
            _normalize_vector(transform)
            for column, transform in zip(reduction.reduced, reduction.transforms)
            if not column
        ]
