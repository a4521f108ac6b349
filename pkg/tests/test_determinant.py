import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_matrix, small_gauss, square_matrices
from pellmat.determinant import (
    ExpansionTooLarge,
    TooLargeForOracle,
    continuant_prefixes,
    det_bareiss,
    det_continuant,
    det_permutation,
    generalized_cofactor,
    laplace_expand,
)
from pellmat.gaussint import GaussInt
from pellmat.matrix import (
    DenseMatrix,
    IndexSet,
    NotSquare,
    TridiagSpec,
    build_pell_matrix,
    materialize,
    pell_dense,
    submatrix,
)

M = DenseMatrix.from_rows


def sympy_det(A: DenseMatrix) -> GaussInt:
    """Third, independent route: sympy's symbolic determinant."""
    S = sympy.Matrix(A.rows, A.cols, [x.re + x.im * sympy.I for x in A.entries])
    d = sympy.expand(S.det(method="berkowitz"))
    return GaussInt(int(sympy.re(d)), int(sympy.im(d)))


def test_permutation_small_cases():
    assert det_permutation(M([["2i"]])) == GaussInt(0, 2)
    assert det_permutation(M([["2i", 1], [1, "2i"]])) == GaussInt(-5)
    assert det_permutation(M([["2i", 0], [1, 1]])) == GaussInt(0, 2)


def test_permutation_guards():
    with pytest.raises(TooLargeForOracle):
        det_permutation(pell_dense(10))
    with pytest.raises(NotSquare):
        det_permutation(M([[1, 2]]))


def test_permutation_matches_textbook_formula():
    # explicit 3x3 rule of Sarrus on an asymmetric matrix
    rng = random.Random(11)
    A = random_matrix(rng, 3, -9, 9)
    a = [[A.entry(i, j) for j in (1, 2, 3)] for i in (1, 2, 3)]
    sarrus = (
        a[0][0] * a[1][1] * a[2][2] + a[0][1] * a[1][2] * a[2][0] + a[0][2] * a[1][0] * a[2][1]
        - a[0][2] * a[1][1] * a[2][0] - a[0][0] * a[1][2] * a[2][1] - a[0][1] * a[1][0] * a[2][2]
    )
    assert det_permutation(A) == sarrus


def test_bareiss_pell_n3_against_oracle():
    A = pell_dense(3)
    assert det_permutation(A) == GaussInt(0, -12)
    assert det_bareiss(A) == GaussInt(0, -12)


def test_bareiss_pell_n4():
    # D4 = 2i*D3 - D2 with D2 = -5, D3 = -12i
    d4 = GaussInt(0, 2) * GaussInt(0, -12) - GaussInt(-5)
    assert d4 == 29
    assert det_bareiss(pell_dense(4)) == d4


def test_bareiss_identity_and_pivoting():
    assert det_bareiss(M([[1, 0], [0, 1]])) == 1
    # zero leading pivot forces a row swap
    assert det_bareiss(M([[0, 1], [1, 0]])) == -1
    assert det_bareiss(M([[0, 0, 1], [0, 2, 0], [3, 0, 0]])) == -6
    assert det_bareiss(M([[1, 2], [2, 4]])) == 0
    assert det_bareiss(M([[0, 1], [0, 2]])) == 0


def test_bareiss_not_square():
    with pytest.raises(NotSquare):
        det_bareiss(M([[1, 2, 3], [4, 5, 6]]))


@pytest.mark.parametrize("n, expected", [(1, GaussInt(0, 2)), (2, GaussInt(-5))])
def test_continuant_small(n, expected):
    assert det_continuant(build_pell_matrix(n)) == expected


def test_continuant_n6_gives_p7_after_unit():
    # Pell: 0,1,2,5,12,29,70,169 -> P_7 = 169; n = 6 = 2 (mod 4) so m = -1
    assert det_continuant(build_pell_matrix(6)) * -1 == 169


def test_continuant_prefixes_are_leading_minors():
    spec = build_pell_matrix(7)
    A = materialize(spec)
    for k, d in enumerate(continuant_prefixes(spec), start=1):
        assert d == det_permutation(submatrix(A, IndexSet.span(1, k), IndexSet.span(1, k)))


def test_continuant_fibonacci_smoke():
    # 1 on the diagonal, i on both bands -> D_k = D_{k-1} + D_{k-2}, Fibonacci
    fib = [1, 2, 3, 5, 8, 13, 21, 34]
    for n in range(1, 9):
        spec = TridiagSpec.from_bands([1] * n, ["i"] * (n - 1), ["i"] * (n - 1))
        assert det_continuant(spec) == fib[n - 1]


@given(square_matrices(max_n=6))
def test_bareiss_agrees_with_permutation(A):
    assert det_bareiss(A) == det_permutation(A)


@settings(max_examples=25)
@given(square_matrices(max_n=4, entries=small_gauss(-50, 50)))
def test_bareiss_agrees_with_sympy(A):
    assert det_bareiss(A) == sympy_det(A)


@st.composite
def tridiag_specs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    g = small_gauss(-5, 5)
    diag = draw(st.lists(g, min_size=n, max_size=n))
    sub = draw(st.lists(g, min_size=n - 1, max_size=n - 1))
    sup = draw(st.lists(g, min_size=n - 1, max_size=n - 1))
    return TridiagSpec(tuple(diag), tuple(sub), tuple(sup))


@given(tridiag_specs())
def test_three_engines_agree_on_tridiagonal(spec):
    A = materialize(spec)
    d = det_continuant(spec)
    assert det_bareiss(A) == d
    assert det_permutation(A) == d


@given(square_matrices(max_n=6))
def test_transpose_invariance(A):
    assert det_bareiss(A.transpose()) == det_bareiss(A)


@given(square_matrices(min_n=2, max_n=6), st.data())
def test_row_swap_negates(A, data):
    i = data.draw(st.integers(1, A.rows))
    j = data.draw(st.integers(1, A.rows).filter(lambda x: x != i))
    assert det_bareiss(A.swap_rows(i, j)) == -det_bareiss(A)


# -- Laplace expansion --------------------------------------------------------


def _summary(expansion):
    return [(tuple(t.cols), t.block) for t in expansion.terms]


def test_expand_n3_two_rows():
    e = laplace_expand(pell_dense(3), [1, 2])
    assert _summary(e) == [((1, 2), GaussInt(-5)), ((1, 3), GaussInt(0, 2)), ((2, 3), GaussInt(1))]
    assert e.total == det_bareiss(pell_dense(3))


def test_expand_n4_three_rows():
    e = laplace_expand(pell_dense(4), [1, 2, 3])
    assert _summary(e) == [
        ((1, 2, 3), GaussInt(0, -12)),
        ((1, 2, 4), GaussInt(-5)),
        ((1, 3, 4), GaussInt(0, 2)),
        ((2, 3, 4), GaussInt(1)),
    ]
    assert e.total == 29


def test_expand_zero_blocks_flag():
    A = pell_dense(4)
    full = laplace_expand(A, [1, 2], include_zero_blocks=True)
    assert [tuple(t.cols) for t in full.terms] == list(itertools.combinations(range(1, 5), 2))
    assert all(t.product == 0 for t in full.terms if t.block == 0)
    assert full.total == laplace_expand(A, [1, 2]).total


def test_expand_random_4x4_row2():
    A = random_matrix(random.Random(2024), 4)
    assert laplace_expand(A, [2]).total == det_permutation(A)


def test_expand_all_rows_is_single_term():
    A = pell_dense(2)
    e = laplace_expand(A, [1, 2])
    assert len(e.terms) == 1
    assert e.terms[0].cofactor == 1
    assert e.total == -5


def test_expand_guard(monkeypatch):
    with pytest.raises(ExpansionTooLarge):
        laplace_expand(pell_dense(10), [1, 2, 3, 4, 5], max_terms=100)
    monkeypatch.setenv("PELLMAT_MAX_EXPANSION", "5")
    with pytest.raises(ExpansionTooLarge):
        laplace_expand(pell_dense(4), [1, 2])


def test_expand_json_shape():
    data = laplace_expand(pell_dense(3), [1, 2]).to_json()
    assert data["rows"] == [1, 2]
    assert data["terms"][0] == {
        "cols": [1, 2],
        "block": {"re": "-5", "im": "0"},
        "cofactor": {"re": "0", "im": "2"},
        "product": {"re": "0", "im": "-10"},
    }
    assert data["total"] == {"re": "0", "im": "-12"}


@pytest.mark.parametrize("n", range(1, 6))
def test_laplace_complete_over_every_row_set(n):
    rng = random.Random(n)
    for _ in range(3):
        A = random_matrix(rng, n)
        d = det_bareiss(A)
        for k in range(1, n + 1):
            for rows in itertools.combinations(range(1, n + 1), k):
                assert laplace_expand(A, rows).total == d


@pytest.mark.parametrize("n", [6, 7])
def test_laplace_complete_larger(n):
    rng = random.Random(100 + n)
    A = random_matrix(rng, n)
    d = det_bareiss(A)
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(1, n + 1), k):
            assert laplace_expand(A, rows).total == d


# -- generalized cofactor -----------------------------------------------------


def test_cofactor_zero_entry():
    assert generalized_cofactor(pell_dense(4), [1, 2], [2, 3]) == 0


def test_cofactor_is_next_pell_determinant():
    assert det_continuant(build_pell_matrix(4)) == 29
    assert generalized_cofactor(pell_dense(5), [1], [1]) == 29


def test_cofactor_sign_on_single_entry():
    assert generalized_cofactor(pell_dense(2), [1], [2]) == -1


def test_cofactor_full_selection_is_one():
    assert generalized_cofactor(pell_dense(3), [1, 2, 3], [1, 2, 3]) == 1


def test_first_row_cofactor_expansion_matches_oracle():
    A = random_matrix(random.Random(5), 5)
    total = sum(
        (A.entry(1, j) * generalized_cofactor(A, [1], [j]) for j in range(1, 6)),
        GaussInt(0),
    )
    assert total == det_permutation(A)
