"""Print the row-block expansions behind each Pell identity for a given n.

    python scripts/proof_traces.py 9

For the chosen n this walks N(n-1) along its first 1, 2 and 3 rows, then
N(2n-1) along its first n-1 rows, and prints every block and cofactor next
to the unit-corrected value it should reduce to.
"""
import argparse

from pellmat.determinant import laplace_expand
from pellmat.matrix import IndexSet, pell_dense
from pellmat.pell import Table, TABLE_MIN_N, pell, unit_multiplier, verify_cofactor_tables


def show(order: int, rows: IndexSet) -> None:
    e = laplace_expand(pell_dense(order), rows)
    m = unit_multiplier(order)
    print(f"N({order}) along rows {rows}  (m = {m})")
    for t in e.terms:
        print(f"  cols {str(t.cols):<16} block {str(t.block):>10}   cofactor {str(t.cofactor):>14}")
    corrected = m.as_gauss() * e.total
    print(f"  det = {e.total};  m * det = {corrected};  P_{order + 1} = {pell(order + 1)}\n")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int, nargs="?", default=8)
    args = ap.parse_args()
    n = args.n
    for k in (1, 2, 3):
        if k <= n - 1:
            show(n - 1, IndexSet.span(1, k))
    if n >= 2 and 2 * n - 1 <= 15:
        show(2 * n - 1, IndexSet.span(1, n - 1))

    print("closed-form tables:")
    for table in Table:
        if n < TABLE_MIN_N[table]:
            continue
        for r in verify_cofactor_tables(n, table):
            mark = "ok" if r.verdict else "MISMATCH"
            print(f"  {mark:<8} {r.label:<48} computed {str(r.lhs):>16}  table {str(r.rhs):>16}")


if __name__ == "__main__":
    main()
