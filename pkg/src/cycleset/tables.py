"""Shared helpers for finite operation tables.

An operation table on n points is a tuple of n rows, each a tuple of n
integers in 0..n-1.  Row x holds the values of the operation with left
argument x, so table[x][y] is "x applied to y" in whatever sense the
owning structure gives it.
"""

from __future__ import annotations

Table = tuple[tuple[int, ...], ...]


class ValidationError(ValueError):
    """Base class for semantic validation failures across the package."""


class NonSquareTable(ValidationError):
    def __init__(self, detail: str):
        super().__init__(f"table is not square: {detail}")
        self.detail = detail


class EntryOutOfRange(ValidationError):
    def __init__(self, x: int, y: int, value: object):
        super().__init__(
            f"entry at row {x} column {y} is {value!r}, expected an integer in 0..n-1"
        )
        self.x = x
        self.y = y
        self.value = value


def freeze_table(rows) -> Table:
    """Copy rows into a tuple of tuples without validating anything."""
    return tuple(tuple(row) for row in rows)


def check_square(rows) -> Table:
    """Freeze rows and require an n by n table with entries in 0..n-1, n >= 1."""
    table = freeze_table(rows)
    n = len(table)
    if n == 0:
        raise NonSquareTable("no rows")
    for x, row in enumerate(table):
        if len(row) != n:
            raise NonSquareTable(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise EntryOutOfRange(x, y, v)
    return table


def transpose(table: Table) -> Table:
    n = len(table)
    return tuple(tuple(table[x][y] for x in range(n)) for y in range(n))
