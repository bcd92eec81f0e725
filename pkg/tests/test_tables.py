"""The embedded golden tables and their formatting."""

from blobcell import fock, tables


def test_tables_shape():
    assert len(tables.KLESHCHEV_TABLES) == 4
    for (e, m), table in tables.KLESHCHEV_TABLES.items():
        assert e == 2 * m - 1
        assert sorted(table) == list(range(-10, 11, 2))
        for lam, b in table.items():
            assert sum(sum(p) for p in b) == 10


def test_rows_match_conversion():
    for (e, m), table in tables.KLESHCHEV_TABLES.items():
        for lam, want in table.items():
            assert fock.kleshchev_convert(10, e, m, lam) == want, (e, m, lam)


def test_format_table_deterministic():
    a = tables.format_table(3, 2)
    b = tables.format_table(3, 2, rows=tables.table_rows(3, 2))
    assert a == b
    assert a.splitlines()[0] == "e=3 m=2"
    assert len(a.splitlines()) == 12


def test_format_tables_all():
    text = tables.format_tables()
    assert text.count("e=") == 4
    assert len(text.splitlines()) == 48
