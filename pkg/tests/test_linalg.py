from fractions import Fraction

from linalg import SparseMatrix, reduce_columns


def test_rank_of_dependent_columns():
    assert SparseMatrix.from_dense([[1, 2], [2, 4]]).rank() == 1


def test_rank_with_fraction_entries():
    matrix = SparseMatrix.from_dense([[Fraction(1, 2), 1], [1, 2]])
    assert matrix.rank() == 1


def test_rank_of_identity():
    matrix = SparseMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert matrix.rank() == 3


def test_modular_rank_drops_when_the_prime_divides_a_minor():
    matrix = SparseMatrix.from_dense([[1, 1], [1, -1]])
    assert matrix.rank() == 2
    assert matrix.rank(prime=2) == 1
    assert matrix.rank(prime=2147483647) == 2


def test_empty_matrices_have_rank_zero():
    assert SparseMatrix.zero(0, 4).rank() == 0
    assert SparseMatrix.zero(3, 0).rank() == 0
    assert SparseMatrix.zero(3, 2).is_zero()


def test_kernel_basis_is_primitive_and_annihilated():
    matrix = SparseMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    kernel = matrix.kernel_basis()
    assert kernel == [{0: 1, 1: -1, 2: 1}]
    assert (matrix @ SparseMatrix(3, tuple(kernel))).is_zero()


def test_kernel_of_non_primitive_columns():
    matrix = SparseMatrix.from_dense([[2, 1]])
    kernel = matrix.kernel_basis()
    assert kernel == [{0: -1, 1: 2}]
    assert (matrix @ SparseMatrix(2, tuple(kernel))).is_zero()


def test_kernel_of_fractional_columns():
    matrix = SparseMatrix.from_dense([[2, 4], [Fraction(1, 3), Fraction(2, 3)]])
    kernel = matrix.kernel_basis()
    assert kernel == [{0: -2, 1: 1}]
    assert (matrix @ SparseMatrix(2, tuple(kernel))).is_zero()


def test_kernel_of_matrix_without_rows_is_everything():
    kernel = SparseMatrix.zero(0, 3).kernel_basis()
    assert kernel == [{0: 1}, {1: 1}, {2: 1}]


def test_reduction_pivots_are_distinct():
    columns = ({0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1})
    reduction = reduce_columns(columns)
    assert reduction.rank == 2
    lows = [max(column) for column in reduction.reduced if column]
    assert len(lows) == len(set(lows))


def test_restrict_renumbers_rows_and_columns():
    matrix = SparseMatrix.from_dense([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    sub = matrix.restrict(rows=[2, 0], cols=[1])
    assert sub.shape == (2, 1)
    assert sub.to_dense() == [[8], [2]]


def test_matmul_matches_dense_product():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[3, 0], [1, 1]])
    assert (a @ b).to_dense() == [[5, 2], [1, 1]]
