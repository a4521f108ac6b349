"""Dense and tridiagonal Gaussian-integer matrices, with 1-based index selections.

Public indices are 1-based so that selections read exactly like
``A([1,2],[1,3])``; storage is 0-based, row-major.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .gaussint import ONE, GaussInt, UnitPhase, ZERO


class ZeroDimension(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class UnequalSelection(ValueError):
    pass


class FullSelection(ValueError):
    pass


class NotSquare(ValueError):
    pass


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing tuple of 1-based positions."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        if any(type(i) is not int for i in idx):
            raise TypeError("indices must be ints")
        if idx and idx[0] < 1:
            raise IndexOutOfRange(f"indices are 1-based, got {idx[0]}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing: {idx}")

    @classmethod
    def of(cls, value: IndexSet | Iterable[int]) -> IndexSet:
        if isinstance(value, IndexSet):
            return value
        return cls(tuple(value))

    @classmethod
    def parse(cls, text: str) -> IndexSet:
        """``"1,2,3"`` or ``"1-3"`` style (ranges inclusive)."""
        out: list[int] = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        return cls(tuple(out))

    @classmethod
    def span(cls, first: int, last: int) -> IndexSet:
        return cls(tuple(range(first, last + 1)))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i: object) -> bool:
        return i in self.indices

    def complement(self, n: int) -> IndexSet:
        chosen = set(self.indices)
        return IndexSet(tuple(i for i in range(1, n + 1) if i not in chosen))

    def check_within(self, n: int) -> None:
        if self.indices and self.indices[-1] > n:
            raise IndexOutOfRange(f"index {self.indices[-1]} exceeds dimension {n}")

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.indices)) + "]"


@dataclass(frozen=True)
class DenseMatrix:
    rows: int
    cols: int
    entries: tuple[GaussInt, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ZeroDimension(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> DenseMatrix:
        if not rows or not rows[0]:
            raise ZeroDimension("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(GaussInt.coerce(x) for r in rows for x in r)
        return cls(len(rows), width, flat)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> GaussInt:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexOutOfRange(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row_lists(self) -> list[list[GaussInt]]:
        c = self.cols
        return [list(self.entries[r * c:(r + 1) * c]) for r in range(self.rows)]

    def transpose(self) -> DenseMatrix:
        c = self.cols
        flat = tuple(self.entries[r * c + j] for j in range(c) for r in range(self.rows))
        return DenseMatrix(self.cols, self.rows, flat)

    def swap_rows(self, i: int, j: int) -> DenseMatrix:
        rows = self.row_lists()
        rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
        return DenseMatrix.from_rows(rows)

    def to_json(self) -> list[list[dict[str, str]]]:
        return [[x.to_json() for x in row] for row in self.row_lists()]

    @classmethod
    def from_json(cls, data: Sequence[Sequence]) -> DenseMatrix:
        return cls.from_rows(data)

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.row_lists()]
        width = max(len(s) for row in cells for s in row)
        return "\n".join("[" + " ".join(s.rjust(width) for s in row) + "]" for row in cells)


@dataclass(frozen=True)
class TridiagSpec:
    """Tridiagonal matrix held by its three bands."""

    diag: tuple[GaussInt, ...]
    sub: tuple[GaussInt, ...]
    sup: tuple[GaussInt, ...]

    def __post_init__(self) -> None:
        n = len(self.diag)
        if n == 0:
            raise ZeroDimension("tridiagonal matrix needs at least one diagonal entry")
        if len(self.sub) != n - 1 or len(self.sup) != n - 1:
            raise ValueError(
                f"off-diagonals must have length {n - 1}, got {len(self.sub)} and {len(self.sup)}"
            )

    @classmethod
    def from_bands(cls, diag: Sequence, sub: Sequence, sup: Sequence) -> TridiagSpec:
        c = GaussInt.coerce
        return cls(tuple(map(c, diag)), tuple(map(c, sub)), tuple(map(c, sup)))

    @property
    def n(self) -> int:
        return len(self.diag)


PELL_DIAGONAL = GaussInt(0, 2)


def build_pell_matrix(n: int) -> TridiagSpec:
    """N(n): 2i on the diagonal, 1 on both off-diagonals."""
    if n < 1:
        raise ZeroDimension(f"N(n) needs n >= 1, got {n}")
    return TridiagSpec((PELL_DIAGONAL,) * n, (ONE,) * (n - 1), (ONE,) * (n - 1))


def materialize(spec: TridiagSpec) -> DenseMatrix:
    n = spec.n
    flat = [ZERO] * (n * n)
    for k, d in enumerate(spec.diag):
        flat[k * n + k] = d
    for k in range(n - 1):
        flat[(k + 1) * n + k] = spec.sub[k]
        flat[k * n + k + 1] = spec.sup[k]
    return DenseMatrix(n, n, tuple(flat))


def pell_dense(n: int) -> DenseMatrix:
    return materialize(build_pell_matrix(n))


def _check_selection(A: DenseMatrix, rows: IndexSet, cols: IndexSet) -> None:
    if len(rows) != len(cols):
        raise UnequalSelection(f"|rows|={len(rows)} but |cols|={len(cols)}")
    rows.check_within(A.rows)
    cols.check_within(A.cols)


def submatrix(A: DenseMatrix, rows: IndexSet | Iterable[int], cols: IndexSet | Iterable[int]) -> DenseMatrix:
    rows, cols = IndexSet.of(rows), IndexSet.of(cols)
    _check_selection(A, rows, cols)
    if not len(rows):
        raise ZeroDimension("empty selection")
    c = A.cols
    flat = tuple(A.entries[(i - 1) * c + (j - 1)] for i in rows for j in cols)
    return DenseMatrix(len(rows), len(cols), flat)


def complementary_minor(
    A: DenseMatrix, rows: IndexSet | Iterable[int], cols: IndexSet | Iterable[int]
) -> DenseMatrix:
    """Matrix left after deleting the selected rows and columns."""
    rows, cols = IndexSet.of(rows), IndexSet.of(cols)
    if not A.is_square:
        raise NotSquare(f"{A.rows}x{A.cols}")
    _check_selection(A, rows, cols)
    if len(rows) == A.rows:
        raise FullSelection("complementary minor of a full selection is 0x0")
    return submatrix(A, rows.complement(A.rows), cols.complement(A.cols))


def cofactor_sign(rows: IndexSet | Iterable[int], cols: IndexSet | Iterable[int]) -> UnitPhase:
    """(-1)**(sum(rows) + sum(cols)) as ONE or MINUS_ONE."""
    rows, cols = IndexSet.of(rows), IndexSet.of(cols)
    if len(rows) != len(cols):
        raise UnequalSelection(f"|rows|={len(rows)} but |cols|={len(cols)}")
    exponent = sum(rows) + sum(cols)
    return UnitPhase.MINUS_ONE if exponent % 2 else UnitPhase.ONE
