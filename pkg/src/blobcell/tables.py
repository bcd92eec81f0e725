"""
Golden tables: the weight <-> Kleshchev-bipartition correspondence at
n = 10 for the four parameter pairs (e, m) in {(3,2), (5,3), (7,4), (9,5)}.

Each table maps the blob weight λ ∈ {-10, -8, ..., 10} to the Kleshchev
bipartition of the corresponding simple module.  These serve as the fixed
reference output for the `tables` CLI subcommand and as the oracle for the
conversion routine in `fock.kleshchev_convert`.
"""

from __future__ import annotations

from .partitions import Bipartition

__all__ = ["KLESHCHEV_TABLES", "table_rows", "format_table", "format_tables"]

# (e, m) -> { λ : Kleshchev bipartition }
KLESHCHEV_TABLES: dict[tuple[int, int], dict[int, Bipartition]] = {
    (3, 2): {
        10: ((10,), ()),
        8: ((9,), (1,)),
        6: ((8, 1), (1,)),
        4: ((7, 2), (1,)),
        2: ((6, 3), (1,)),
        0: ((5, 4), (1,)),
        -2: ((4, 2), (4,)),
        -4: ((5, 1), (4,)),
        -6: ((6,), (4,)),
        -8: ((7,), (3,)),
        -10: ((8,), (2,)),
    },
    (5, 3): {
        10: ((10,), ()),
        8: ((9,), (1,)),
        6: ((8,), (2,)),
        4: ((7, 1), (2,)),
        2: ((6, 2), (2,)),
        0: ((5, 3), (2,)),
        -2: ((4, 4), (2,)),
        -4: ((4,), (6,)),
        -6: ((5,), (5,)),
        -8: ((6,), (4,)),
        -10: ((7,), (3,)),
    },
    (7, 4): {
        10: ((10,), ()),
        8: ((9,), (1,)),
        6: ((8,), (2,)),
        4: ((7,), (3,)),
        2: ((6, 1), (3,)),
        0: ((5, 2), (3,)),
        -2: ((4, 3), (3,)),
        -4: ((3,), (7,)),
        -6: ((4,), (6,)),
        -8: ((5,), (5,)),
        -10: ((6,), (4,)),
    },
    (9, 5): {
        10: ((10,), ()),
        8: ((9,), (1,)),
        6: ((8,), (2,)),
        4: ((7,), (3,)),
        2: ((6,), (4,)),
        0: ((5, 1), (4,)),
        -2: ((4, 2), (4,)),
        -4: ((3, 3), (4,)),
        -6: ((3,), (7,)),
        -8: ((4,), (6,)),
        -10: ((5,), (5,)),
    },
}


def table_rows(e: int, m: int) -> list[tuple[int, Bipartition]]:
    """Rows of one table, λ descending from 10 to -10."""
    table = KLESHCHEV_TABLES[(e, m)]
    return [(lam, table[lam]) for lam in range(10, -11, -2)]


def _fmt_partition(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _fmt_bipartition(b: Bipartition) -> str:
    return f"({_fmt_partition(b[0])}, {_fmt_partition(b[1])})"


def format_table(e: int, m: int, rows=None) -> str:
    """
    One table in the fixed plain-text layout.  When `rows` is given it is
    formatted instead of the golden data, so computed output can be
    byte-compared against the embedded copy.
    """
    lines = [f"e={e} m={m}"]
    for lam, b in (table_rows(e, m) if rows is None else rows):
        lines.append(f"  {lam:>4}  {_fmt_bipartition(b)}")
    return "\n".join(lines)


def format_tables() -> str:
    """All four tables in a fixed, deterministic plain-text layout."""
    return "\n".join(format_table(e, m) for (e, m) in sorted(KLESHCHEV_TABLES))
