"""Pell numbers, the unit-multiplier factorization via N(n), and identity checks.

Every checker computes its two sides along separate routes: one side from
the integer recurrence, the other from a determinant engine (or from the
closed product form), so agreement is a genuine cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

from .determinant import (
    RowExpansion,
    det_bareiss,
    det_continuant,
    generalized_cofactor,
    laplace_expand,
)
from .gaussint import GaussInt, UnitPhase, gi_mul, unit_pow_i
from .matrix import DenseMatrix, IndexSet, build_pell_matrix, pell_dense, submatrix


class NonRealResult(ArithmeticError):
    pass


class BadK(ValueError):
    pass


class TableUndefined(ValueError):
    pass


class IdentityId(Enum):
    CONVOLUTION = "convolution"
    DOUBLING = "doubling"
    DET_EQUATION = "det_equation"
    COFACTOR_TABLE = "cofactor_table"


class Engine(Enum):
    CONTINUANT = "continuant"
    BAREISS = "bareiss"
    LAPLACE = "laplace"
    RECURRENCE = "recurrence"


class Table(Enum):
    FIRST_ROW = "first_row"
    TWO_ROW = "two_row"
    THREE_ROW = "three_row"
    DOUBLING_BLOCKS = "doubling_blocks"


@dataclass(frozen=True)
class IdentityReport:
    identity_id: IdentityId
    parameters: dict[str, int]
    lhs: GaussInt
    rhs: GaussInt
    engine: Engine
    label: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        out = {
            "identity_id": self.identity_id.value,
            "parameters": dict(self.parameters),
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "engine": self.engine.value,
            "verdict": self.verdict,
        }
        if self.label:
            out["label"] = self.label
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"Pell numbers are defined for n >= 0, got {n}")


def pell(n: int) -> int:
    _check_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def pell_sequence(n_max: int) -> Iterator[int]:
    """P_0, ..., P_{n_max}."""
    _check_index(n_max)
    a, b = 0, 1
    for _ in range(n_max + 1):
        yield a
        a, b = b, 2 * b + a


def unit_multiplier(n: int) -> UnitPhase:
    """m with P_{n+1} = m det N(n): 1, -i, -1, i for n = 0, 1, 2, 3 mod 4."""
    _check_index(n)
    return unit_pow_i(-n)


def pell_via_det(n: int) -> int:
    if n < 1:
        raise ValueError(f"N(n) needs n >= 1, got {n}")
    z = gi_mul(unit_multiplier(n).as_gauss(), det_continuant(build_pell_matrix(n)))
    if z.im != 0 or z.re < 0:
        raise NonRealResult(f"m*det N({n}) = {z}, expected a non-negative integer")
    return z.re


def _pell_det(n: int, engine: Engine) -> GaussInt:
    """det N(n) with det N(0) = 1."""
    if n == 0:
        return GaussInt(1, 0)
    if engine is Engine.CONTINUANT:
        return det_continuant(build_pell_matrix(n))
    if engine is Engine.BAREISS:
        return det_bareiss(pell_dense(n))
    raise ValueError(f"engine {engine.value} does not evaluate det N(n) directly")


def _unit_corrected(n: int, z: GaussInt) -> GaussInt:
    return gi_mul(unit_multiplier(n).as_gauss(), z)


def verify_det_equation(n: int, engine: Engine = Engine.CONTINUANT) -> IdentityReport:
    """m(n-1) det N(n-1) == 2 P_{n-1} + P_{n-2}.

    The displayed equation carries no unit factor; det N(n-1) is i**(n-1) P_n,
    so the check is run on the unit-corrected determinant.
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    raw = _pell_det(n - 1, engine)
    lhs = _unit_corrected(n - 1, raw)
    rhs = GaussInt(2 * pell(n - 1) + pell(n - 2))
    notes = (f"unit-corrected by m({n - 1}) = {unit_multiplier(n - 1)}; raw det N({n - 1}) = {raw}",)
    return IdentityReport(IdentityId.DET_EQUATION, {"n": n}, lhs, rhs, engine, notes=notes)


def convolution_rhs(n: int, k: int) -> int:
    return pell(k) * pell(n - k + 1) + pell(k - 1) * pell(n - k)


def convolution_terms_via_laplace(n: int, k: int) -> tuple[RowExpansion, list[GaussInt]]:
    """Expand N(n-1) along its first k-1 rows; return the unit-corrected nonzero products.

    For k < n the two surviving terms come out as P_k P_{n-k+1} and
    P_{k-1} P_{n-k}; for k = n the single full-block term is P_n.
    """
    if not 2 <= k <= n:
        raise BadK(f"Laplace route needs 2 <= k <= n, got n={n}, k={k}")
    expansion = laplace_expand(pell_dense(n - 1), IndexSet.span(1, k - 1))
    corrected = [_unit_corrected(n - 1, t.product) for t in expansion.nonzero_products()]
    return expansion, corrected


def verify_convolution(n: int, k: int, engine: Engine = Engine.RECURRENCE) -> IdentityReport:
    """P_n == P_k P_{n-k+1} + P_{k-1} P_{n-k}."""
    if n < 1 or not 1 <= k <= n:
        raise BadK(f"need 1 <= k <= n, got n={n}, k={k}")
    params = {"n": n, "k": k}
    lhs = GaussInt(pell(n))
    if engine is Engine.RECURRENCE:
        return IdentityReport(IdentityId.CONVOLUTION, params, lhs, GaussInt(convolution_rhs(n, k)), engine)
    if engine is not Engine.LAPLACE:
        raise ValueError(f"convolution supports recurrence or laplace, not {engine.value}")
    expansion, corrected = convolution_terms_via_laplace(n, k)
    rhs = GaussInt(0)
    for z in corrected:
        rhs = rhs + z
    expected = [pell(k) * pell(n - k + 1), pell(k - 1) * pell(n - k)]
    expected = [x for x in expected if x]
    notes = [f"expanded N({n - 1}) along rows {expansion.row_set}"]
    if corrected == [GaussInt(x) for x in expected]:
        notes.append("nonzero terms match P_k P_(n-k+1) and P_(k-1) P_(n-k) individually")
    else:
        notes.append(f"term mismatch: corrected {[str(z) for z in corrected]} vs {expected}")
    return IdentityReport(IdentityId.CONVOLUTION, params, lhs, rhs, engine, notes=tuple(notes))


def doubling_expansion(n: int) -> RowExpansion:
    """N(2n-1) expanded along its first n-1 rows."""
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    return laplace_expand(pell_dense(2 * n - 1), IndexSet.span(1, n - 1))


def verify_doubling(n: int, engine: Engine = Engine.RECURRENCE) -> IdentityReport:
    """P_{2n} == P_n (P_{n+1} + P_{n-1})."""
    if n < 1:
        raise ValueError(f"needs n >= 1, got {n}")
    params = {"n": n}
    lhs = GaussInt(pell(2 * n))
    if engine is Engine.RECURRENCE:
        rhs = GaussInt(pell(n) * (pell(n + 1) + pell(n - 1)))
        return IdentityReport(IdentityId.DOUBLING, params, lhs, rhs, engine)
    if engine is not Engine.LAPLACE:
        raise ValueError(f"doubling supports recurrence or laplace, not {engine.value}")
    expansion = doubling_expansion(n)
    survivors = expansion.nonzero_products()
    rhs = _unit_corrected(2 * n - 1, expansion.total)
    notes = (
        f"expanded N({2 * n - 1}) along rows {expansion.row_set}",
        f"{len(expansion.terms)} nonzero blocks, {len(survivors)} nonzero products",
    )
    return IdentityReport(IdentityId.DOUBLING, params, lhs, rhs, engine, notes=notes)


# Closed forms from the cofactor tables. Each entry gives, for the four
# residues n = 0, 1, 2, 3 (mod 4), the unit in front of a Pell expression, or
# None where the table states the value is 0.

Phases = tuple[UnitPhase | None, UnitPhase | None, UnitPhase | None, UnitPhase | None]

_1, _I, _M1, _MI = UnitPhase.ONE, UnitPhase.I, UnitPhase.MINUS_ONE, UnitPhase.MINUS_I
_ZERO: Phases = (None, None, None, None)


def _const(u: UnitPhase) -> Phases:
    return (u, u, u, u)


@dataclass(frozen=True)
class TableEntry:
    label: str
    phases: Phases
    magnitude: Callable[[int], int]
    compute: Callable[[DenseMatrix, int], GaussInt]

    def closed_form(self, n: int) -> GaussInt:
        u = self.phases[n % 4]
        if u is None:
            return GaussInt(0)
        return gi_mul(u.as_gauss(), GaussInt(self.magnitude(n)))


def _block(rows, cols):
    return lambda A, n: det_bareiss(submatrix(A, rows(n), cols(n)))


def _cof(rows, cols):
    return lambda A, n: generalized_cofactor(A, rows(n), cols(n))


def _fixed(*idx: int):
    s = IndexSet(idx)
    return lambda n: s


def _whole(A: DenseMatrix, n: int) -> GaussInt:
    return det_bareiss(A)


_R1, _R12, _R123 = _fixed(1), _fixed(1, 2), _fixed(1, 2, 3)

_FIRST_ROW = (
    TableEntry("Å11", (_M1, _MI, _1, _I), lambda n: pell(n - 1), _cof(_R1, _fixed(1))),
    TableEntry("Å12", (_MI, _1, _I, _M1), lambda n: pell(n - 2), _cof(_R1, _fixed(2))),
)

_TWO_ROW = (
    TableEntry("A([1,2],[1,2])", _const(_M1), lambda n: pell(3), _block(_R12, _fixed(1, 2))),
    TableEntry("A([1,2],[1,3])", _const(_I), lambda n: pell(2), _block(_R12, _fixed(1, 3))),
    TableEntry("A([1,2],[2,3])", _const(_1), lambda n: pell(1), _block(_R12, _fixed(2, 3))),
    TableEntry("Å([1,2],[1,2])", (_I, _M1, _MI, _1), lambda n: pell(n - 2), _cof(_R12, _fixed(1, 2))),
    TableEntry("Å([1,2],[1,3])", (_M1, _MI, _1, _I), lambda n: pell(n - 3), _cof(_R12, _fixed(1, 3))),
    TableEntry("Å([1,2],[2,3])", _ZERO, lambda n: 0, _cof(_R12, _fixed(2, 3))),
    TableEntry(
        "det N(n-1) (two-row expansion form)",
        (_MI, _1, _I, _M1),
        lambda n: pell(3) * pell(n - 2) + pell(2) * pell(n - 3),
        _whole,
    ),
)

_THREE_ROW = (
    TableEntry("A([1,2,3],[1,2,3])", _const(_MI), lambda n: pell(4), _block(_R123, _fixed(1, 2, 3))),
    TableEntry("A([1,2,3],[1,2,4])", _const(_M1), lambda n: pell(3), _block(_R123, _fixed(1, 2, 4))),
    TableEntry("A([1,2,3],[1,3,4])", _const(_I), lambda n: pell(2), _block(_R123, _fixed(1, 3, 4))),
    TableEntry("A([1,2,3],[2,3,4])", _const(_1), lambda n: pell(1), _block(_R123, _fixed(2, 3, 4))),
    TableEntry("Å([1,2,3],[1,2,3])", (_1, _I, _M1, _MI), lambda n: pell(n - 3), _cof(_R123, _fixed(1, 2, 3))),
    TableEntry("Å([1,2,3],[1,2,4])", (_I, _M1, _MI, _1), lambda n: pell(n - 4), _cof(_R123, _fixed(1, 2, 4))),
    TableEntry("Å([1,2,3],[1,3,4])", _ZERO, lambda n: 0, _cof(_R123, _fixed(1, 3, 4))),
    TableEntry("Å([1,2,3],[2,3,4])", _ZERO, lambda n: 0, _cof(_R123, _fixed(2, 3, 4))),
    TableEntry(
        "det N(n-1) (three-row expansion form)",
        (_MI, _1, _I, _M1),
        lambda n: pell(4) * pell(n - 3) + pell(3) * pell(n - 4),
        _whole,
    ),
)


def _lead_rows(n: int) -> IndexSet:
    return IndexSet.span(1, n - 1)


def _lead_cols_diag(n: int) -> IndexSet:
    return IndexSet.span(1, n - 1)


def _lead_cols_skip(n: int) -> IndexSet:
    return IndexSet(tuple(range(1, n - 1)) + (n,))


_DOUBLING_BLOCKS = (
    TableEntry(
        "A([1..n-1],[1..n-2,n-1])", (_MI, _1, _I, _M1), lambda n: pell(n), _block(_lead_rows, _lead_cols_diag)
    ),
    TableEntry(
        "A([1..n-1],[1..n-2,n])", (_M1, _MI, _1, _I), lambda n: pell(n - 1), _block(_lead_rows, _lead_cols_skip)
    ),
    TableEntry(
        "Å([1..n-1],[1..n-2,n-1])", (_1, _I, _M1, _MI), lambda n: pell(n + 1), _cof(_lead_rows, _lead_cols_diag)
    ),
    TableEntry(
        "Å([1..n-1],[1..n-2,n])", (_I, _M1, _MI, _1), lambda n: pell(n), _cof(_lead_rows, _lead_cols_skip)
    ),
    TableEntry(
        "det N(2n-1) (doubling expansion form)",
        (_MI, _I, _MI, _I),
        lambda n: pell(n) * (pell(n + 1) + pell(n - 1)),
        _whole,
    ),
)

TABLES: dict[Table, tuple[TableEntry, ...]] = {
    Table.FIRST_ROW: _FIRST_ROW,
    Table.TWO_ROW: _TWO_ROW,
    Table.THREE_ROW: _THREE_ROW,
    Table.DOUBLING_BLOCKS: _DOUBLING_BLOCKS,
}

TABLE_MIN_N = {
    Table.FIRST_ROW: 4,
    Table.TWO_ROW: 4,
    Table.THREE_ROW: 5,
    Table.DOUBLING_BLOCKS: 2,
}


def table_matrix_order(n: int, table: Table) -> int:
    return 2 * n - 1 if table is Table.DOUBLING_BLOCKS else n - 1


def verify_cofactor_tables(n: int, table: Table) -> list[IdentityReport]:
    """Compare each table entry, computed on the dense matrix, with its mod-4 closed form.

    The case label is the residue of the identity's n, while the matrix is
    N(n-1) (or N(2n-1) for the doubling blocks). lhs is the computed value,
    rhs the closed form; a mismatch is reported, never raised.
    """
    if n < TABLE_MIN_N[table]:
        raise TableUndefined(f"{table.value} table needs n >= {TABLE_MIN_N[table]}, got {n}")
    order = table_matrix_order(n, table)
    A = pell_dense(order)
    params = {"n": n, "residue": n % 4, "matrix_order": order}
    reports = []
    for entry in TABLES[table]:
        reports.append(
            IdentityReport(
                IdentityId.COFACTOR_TABLE,
                params,
                entry.compute(A, n),
                entry.closed_form(n),
                Engine.BAREISS,
                label=f"{table.value}: {entry.label}",
                notes=(f"case n = {n % 4} (mod 4) applied to N({order})",),
            )
        )
    return reports
