"""Exact determinant engines over Z[i] and the generalized Laplace expansion.

The engines work on plain ``(re, im)`` int pairs internally and only wrap the
result in a GaussInt at the end; object construction would otherwise dominate
the inner loops.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .gaussint import ONE, GaussInt, _pair_exact_div, gi_mul
from .matrix import (
    DenseMatrix,
    IndexSet,
    NotSquare,
    TridiagSpec,
    complementary_minor,
    cofactor_sign,
    submatrix,
)

ORACLE_MAX_N = 9
DEFAULT_MAX_EXPANSION = 2**20
MAX_EXPANSION_ENV = "PELLMAT_MAX_EXPANSION"

Pair = tuple[int, int]


class TooLargeForOracle(ValueError):
    pass


class ExpansionTooLarge(ValueError):
    pass


def _pairs(A: DenseMatrix) -> list[list[Pair]]:
    n = A.cols
    e = A.entries
    return [[(x.re, x.im) for x in e[r * n:(r + 1) * n]] for r in range(A.rows)]


def _require_square(A: DenseMatrix) -> int:
    if not A.is_square:
        raise NotSquare(f"determinant needs a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def det_permutation(A: DenseMatrix) -> GaussInt:
    """Leibniz sum over all permutations; an oracle, so capped at 9x9.

    Permutations are walked depth-first, one row at a time, and a branch is
    dropped once its partial product is zero (it contributes nothing to the
    sum). The sign comes from counting inversions as columns are chosen.
    """
    n = _require_square(A)
    if n > ORACLE_MAX_N:
        raise TooLargeForOracle(f"permutation oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    M = _pairs(A)
    used = [False] * n
    total_re = 0
    total_im = 0

    def walk(row: int, pr: int, pi: int, inversions: int) -> None:
        nonlocal total_re, total_im
        if row == n:
            if inversions % 2:
                total_re -= pr
                total_im -= pi
            else:
                total_re += pr
                total_im += pi
            return
        Mrow = M[row]
        # columns already used that lie to the right of c each add one inversion
        later_used = sum(used)
        for c in range(n):
            if used[c]:
                later_used -= 1
                continue
            ar, ai = Mrow[c]
            if ar == 0 and ai == 0:
                continue
            used[c] = True
            walk(row + 1, pr * ar - pi * ai, pr * ai + pi * ar, inversions + later_used)
            used[c] = False

    walk(0, 1, 0, 0)
    return GaussInt(total_re, total_im)


def det_bareiss(A: DenseMatrix) -> GaussInt:
    """Fraction-free elimination; every division by the previous pivot is exact in Z[i]."""
    n = _require_square(A)
    M = _pairs(A)
    negate = False
    prev: Pair = (1, 0)
    for k in range(n - 1):
        if M[k][k] == (0, 0):
            for p in range(k + 1, n):
                if M[p][k] != (0, 0):
                    M[k], M[p] = M[p], M[k]
                    negate = not negate
                    break
            else:
                return GaussInt(0, 0)
        pkr, pki = M[k][k]
        Mk = M[k]
        unit_prev = prev == (1, 0)
        qr, qi = prev
        for i in range(k + 1, n):
            Mi = M[i]
            air, aii = Mi[k]
            lead_zero = air == 0 and aii == 0
            for j in range(k + 1, n):
                xr, xi = Mi[j]
                yr, yi = Mk[j]
                x_zero = xr == 0 and xi == 0
                y_zero = lead_zero or (yr == 0 and yi == 0)
                if y_zero:
                    if x_zero:
                        continue
                    nr = pkr * xr - pki * xi
                    ni = pkr * xi + pki * xr
                else:
                    nr = pkr * xr - pki * xi - (air * yr - aii * yi)
                    ni = pkr * xi + pki * xr - (air * yi + aii * yr)
                Mi[j] = (nr, ni) if unit_prev else _pair_exact_div(nr, ni, qr, qi)
            Mi[k] = (0, 0)
        prev = (pkr, pki)
    dr, di = M[n - 1][n - 1]
    return GaussInt(-dr, -di) if negate else GaussInt(dr, di)


def det_continuant(spec: TridiagSpec) -> GaussInt:
    """Three-term recurrence D_k = d_k D_{k-1} - sub_{k-1} sup_{k-1} D_{k-2}, D_0 = 1."""
    d0 = spec.diag[0]
    prev_r, prev_i = 1, 0
    cur_r, cur_i = d0.re, d0.im
    for k in range(1, spec.n):
        d = spec.diag[k]
        b, c = spec.sub[k - 1], spec.sup[k - 1]
        bcr = b.re * c.re - b.im * c.im
        bci = b.re * c.im + b.im * c.re
        nr = d.re * cur_r - d.im * cur_i - (bcr * prev_r - bci * prev_i)
        ni = d.re * cur_i + d.im * cur_r - (bcr * prev_i + bci * prev_r)
        prev_r, prev_i, cur_r, cur_i = cur_r, cur_i, nr, ni
    return GaussInt(cur_r, cur_i)


def continuant_prefixes(spec: TridiagSpec) -> Iterator[GaussInt]:
    """Leading principal minors D_1, ..., D_n of a tridiagonal matrix."""
    prev = GaussInt(1, 0)
    cur = spec.diag[0]
    yield cur
    for k in range(1, spec.n):
        bc = gi_mul(spec.sub[k - 1], spec.sup[k - 1])
        prev, cur = cur, gi_mul(spec.diag[k], cur) - gi_mul(bc, prev)
        yield cur


def det_empty() -> GaussInt:
    """Determinant of the 0x0 matrix."""
    return ONE


def generalized_cofactor(
    A: DenseMatrix, rows: IndexSet | Iterable[int], cols: IndexSet | Iterable[int]
) -> GaussInt:
    """Signed determinant of the complementary minor; 1 for a full selection."""
    rows, cols = IndexSet.of(rows), IndexSet.of(cols)
    n = _require_square(A)
    sign = cofactor_sign(rows, cols)
    if len(rows) == n and len(cols) == n:
        rows.check_within(n)
        cols.check_within(n)
        return det_empty()
    minor_det = det_bareiss(complementary_minor(A, rows, cols))
    return gi_mul(sign.as_gauss(), minor_det)


@dataclass(frozen=True)
class ExpansionTerm:
    cols: IndexSet
    block: GaussInt
    cofactor: GaussInt
    product: GaussInt

    def to_json(self) -> dict:
        return {
            "cols": list(self.cols),
            "block": self.block.to_json(),
            "cofactor": self.cofactor.to_json(),
            "product": self.product.to_json(),
        }


@dataclass(frozen=True)
class RowExpansion:
    row_set: IndexSet
    terms: tuple[ExpansionTerm, ...] = field(default_factory=tuple)

    @property
    def total(self) -> GaussInt:
        t = GaussInt(0, 0)
        for term in self.terms:
            t = t + term.product
        return t

    def nonzero_products(self) -> tuple[ExpansionTerm, ...]:
        return tuple(t for t in self.terms if t.product)

    def to_json(self) -> dict:
        return {
            "rows": list(self.row_set),
            "terms": [t.to_json() for t in self.terms],
            "total": self.total.to_json(),
        }


def max_expansion_terms() -> int:
    raw = os.environ.get(MAX_EXPANSION_ENV)
    return int(raw) if raw else DEFAULT_MAX_EXPANSION


def laplace_expand(
    A: DenseMatrix,
    row_set: IndexSet | Iterable[int],
    *,
    include_zero_blocks: bool = False,
    max_terms: int | None = None,
) -> RowExpansion:
    """Expand det(A) along a fixed set of rows.

    Column subsets are visited in lexicographic order. Terms whose block
    determinant vanishes are dropped unless ``include_zero_blocks`` is set.
    """
    row_set = IndexSet.of(row_set)
    n = _require_square(A)
    k = len(row_set)
    if not 1 <= k <= n:
        raise ValueError(f"row set size must be in [1, {n}], got {k}")
    row_set.check_within(n)
    limit = max_expansion_terms() if max_terms is None else max_terms
    if comb(n, k) > limit:
        raise ExpansionTooLarge(f"C({n},{k}) = {comb(n, k)} column subsets exceeds limit {limit}")

    terms = []
    for cols in combinations(range(1, n + 1), k):
        col_set = IndexSet(cols)
        block = det_bareiss(submatrix(A, row_set, col_set))
        if not block and not include_zero_blocks:
            continue
        cof = generalized_cofactor(A, row_set, col_set)
        terms.append(ExpansionTerm(col_set, block, cof, gi_mul(block, cof)))
    return RowExpansion(row_set, tuple(terms))
