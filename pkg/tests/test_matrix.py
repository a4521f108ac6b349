import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_matrix
from pellmat.gaussint import GaussInt, UnitPhase, unit_pow_i
from pellmat.matrix import (
    DenseMatrix,
    FullSelection,
    IndexOutOfRange,
    IndexSet,
    TridiagSpec,
    UnequalSelection,
    ZeroDimension,
    build_pell_matrix,
    cofactor_sign,
    complementary_minor,
    materialize,
    pell_dense,
    submatrix,
)

I2 = GaussInt(0, 2)
M = DenseMatrix.from_rows


def test_build_pell_matrix_n1():
    spec = build_pell_matrix(1)
    assert spec.diag == (I2,)
    assert spec.sub == () and spec.sup == ()


def test_build_pell_matrix_n0():
    with pytest.raises(ZeroDimension):
        build_pell_matrix(0)


def test_materialize_small():
    assert materialize(build_pell_matrix(1)) == M([["2i"]])
    assert materialize(build_pell_matrix(2)) == M([["2i", 1], [1, "2i"]])
    assert materialize(build_pell_matrix(3)) == M([["2i", 1, 0], [1, "2i", 1], [0, 1, "2i"]])


def test_materialize_generic_bands():
    a, b, c, d = (GaussInt(x, y) for x, y in [(1, 1), (2, 0), (0, -3), (4, 5)])
    spec = TridiagSpec((a, b), (c,), (d,))
    assert materialize(spec) == M([[a, d], [c, b]])


def test_tridiag_spec_length_check():
    with pytest.raises(ValueError):
        TridiagSpec.from_bands([1, 2, 3], [1], [1, 1])


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_materialize_equals_direct_build(n):
    direct = [[I2 if i == j else GaussInt(1) if abs(i - j) == 1 else GaussInt(0) for j in range(n)] for i in range(n)]
    assert pell_dense(n) == M(direct)


@pytest.mark.parametrize("n", range(1, 15))
def test_pell_matrix_symmetric(n):
    A = pell_dense(n)
    assert A.transpose() == A


def test_submatrix_paper_blocks():
    A = pell_dense(3)
    assert submatrix(A, [1, 2], [1, 3]) == M([["2i", 0], [1, 1]])
    assert submatrix(A, [1, 2], [2, 3]) == M([[1, 0], ["2i", 1]])
    assert submatrix(A, [1, 2, 3], [1, 2, 3]) == A


def test_submatrix_errors():
    A = pell_dense(3)
    with pytest.raises(IndexOutOfRange):
        submatrix(A, [1, 4], [1, 2])
    with pytest.raises(UnequalSelection):
        submatrix(A, [1, 2], [1])


def test_complementary_minor_first_entry():
    assert complementary_minor(pell_dense(3), [1], [1]) == M([["2i", 1], [1, "2i"]])


def test_complementary_minor_is_smaller_pell_matrix():
    minor = complementary_minor(pell_dense(4), [1, 2], [1, 2])
    A4 = pell_dense(4)
    # entrywise against direct lookup on the 4x4
    assert minor.entries == tuple(A4.entry(i, j) for i in (3, 4) for j in (3, 4))
    assert minor == pell_dense(2)


def test_complementary_minor_single_entry():
    A = pell_dense(3)
    assert complementary_minor(A, [1, 2], [1, 3]) == M([[A.entry(3, 2)]])
    assert A.entry(3, 2) == 1


def test_complementary_minor_full_selection():
    with pytest.raises(FullSelection):
        complementary_minor(pell_dense(2), [1, 2], [1, 2])


@pytest.mark.parametrize(
    "rows, cols, sign",
    [([1], [1], UnitPhase.ONE), ([1], [2], UnitPhase.MINUS_ONE), ([1, 2], [1, 3], UnitPhase.MINUS_ONE)],
)
def test_cofactor_sign(rows, cols, sign):
    assert cofactor_sign(rows, cols) is sign


def test_cofactor_sign_unequal():
    with pytest.raises(UnequalSelection):
        cofactor_sign([1, 2], [1])


@st.composite
def selections(draw, n=6):
    k = draw(st.integers(min_value=1, max_value=n - 1))
    rows = sorted(draw(st.sets(st.integers(1, n), min_size=k, max_size=k)))
    cols = sorted(draw(st.sets(st.integers(1, n), min_size=k, max_size=k)))
    return IndexSet(tuple(rows)), IndexSet(tuple(cols))


@given(selections())
def test_cofactor_sign_parity(sel):
    rows, cols = sel
    s = cofactor_sign(rows, cols)
    assert s * s is UnitPhase.ONE
    # i**(2*(sum rows + sum cols)) is the same +-1
    assert s is unit_pow_i(2 * sum(rows) + 2 * sum(cols))


@given(selections(), st.integers(0, 2**32))
def test_submatrix_and_minor_partition_entries(sel, seed):
    """Block, minor, and the two off-diagonal blocks together hold every entry once."""
    rows, cols = sel
    rng = random.Random(seed)
    # distinct entries so the multiset comparison is sharp
    flat = list(range(36))
    rng.shuffle(flat)
    A = DenseMatrix(6, 6, tuple(GaussInt(x, rng.randint(-9, 9)) for x in flat))
    block = submatrix(A, rows, cols)
    minor = complementary_minor(A, rows, cols)
    rc, cc = rows.complement(6), cols.complement(6)
    off = [A.entry(i, j) for i in rows for j in cc] + [A.entry(i, j) for i in rc for j in cols]
    assert Counter(block.entries) + Counter(minor.entries) + Counter(off) == Counter(A.entries)
    assert not set(block.entries) & set(minor.entries)


def test_index_set_validation():
    with pytest.raises(ValueError):
        IndexSet((2, 1))
    with pytest.raises(IndexOutOfRange):
        IndexSet((0, 1))
    assert IndexSet.parse("1,2,3") == IndexSet.parse("1-3") == IndexSet.span(1, 3)
    assert IndexSet((2, 4)).complement(5) == IndexSet((1, 3, 5))


def test_dense_matrix_json_round_trip():
    A = random_matrix(random.Random(3), 4, -100, 100)
    assert DenseMatrix.from_json(A.to_json()) == A


def test_swap_rows():
    A = M([[1, 2], [3, 4]])
    assert A.swap_rows(1, 2) == M([[3, 4], [1, 2]])


def test_dense_shape_checks():
    with pytest.raises(ValueError):
        DenseMatrix(2, 2, (GaussInt(1),) * 3)
    with pytest.raises(ZeroDimension):
        DenseMatrix(0, 0, ())
    with pytest.raises(ValueError):
        M([[1, 2], [3]])
