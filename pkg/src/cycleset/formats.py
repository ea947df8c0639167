"""Plain-text documents for every structure the package handles.

One format version ("v1"), whitespace-separated integers, explicit
section headers, `#` comment lines ignored.  parse and emit are exact
inverses on canonical text; emit always produces the canonical form.

  bop    line 1 "bop v1", "n <int>", then n rows of n ints
  sol    "LAMBDA" + n rows, "TAU" + n rows (row y of TAU lists tau_y)
  qsol   "A" + n rows, "B" + n rows
  brace  "ADD" + n rows, "CIRCLE" + n rows (identity of ADD must be 0)
  ring   "ADD" + n rows, "MUL" + n rows (same identity constraint)
  cons   "p", "k", "level", "chain" with level+1 ints, then
         "f1".."f<level-1>" value lists (no "n" line)
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Union

from .tables import Table


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line = line
        self.col = col
        self.msg = msg


@dataclass(frozen=True)
class BopDoc:
    n: int
    table: Table
    kind = "bop"


@dataclass(frozen=True)
class SolDoc:
    n: int
    lam: Table
    tau: Table
    kind = "sol"


@dataclass(frozen=True)
class QsolDoc:
    n: int
    a: Table
    b: Table
    kind = "qsol"


@dataclass(frozen=True)
class BraceDoc:
    n: int
    add: Table
    circle: Table
    kind = "brace"


@dataclass(frozen=True)
class RingDoc:
    n: int
    add: Table
    mul: Table
    kind = "ring"


@dataclass(frozen=True)
class ConsDoc:
    p: int
    k: int
    level: int
    chain: tuple[int, ...]
    f: tuple[tuple[int, ...], ...]
    kind = "cons"


Document = Union[BopDoc, SolDoc, QsolDoc, BraceDoc, RingDoc, ConsDoc]

KINDS = ("bop", "sol", "qsol", "brace", "ring", "cons")

_TOKEN = re.compile(r"\S+")


class _Reader:
    """Comment- and blank-skipping line reader with positions."""

    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next_line(self) -> tuple[int, list[tuple[str, int]]] | None:
        while self.pos < len(self.lines):
            raw = self.lines[self.pos]
            self.pos += 1
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(raw)]
            return self.pos, tokens
        return None

    def require_line(self, what: str) -> tuple[int, list[tuple[str, int]]]:
        got = self.next_line()
        if got is None:
            raise ParseError(len(self.lines) + 1, 1, f"expected {what}, got end of input")
        return got

    def require_end(self) -> None:
        got = self.next_line()
        if got is not None:
            lineno, tokens = got
            raise ParseError(lineno, tokens[0][1], "unexpected trailing content")


def _as_int(token: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, col, f"{what} must be an integer, got {token!r}")


def _keyword_int(reader: _Reader, key: str) -> int:
    lineno, tokens = reader.require_line(f"'{key} <int>'")
    if tokens[0][0] != key:
        raise ParseError(lineno, tokens[0][1], f"expected {key!r}, got {tokens[0][0]!r}")
    if len(tokens) != 2:
        raise ParseError(lineno, tokens[-1][1], f"expected exactly one value after {key!r}")
    return _as_int(tokens[1][0], lineno, tokens[1][1], key)


def _keyword_ints(reader: _Reader, key: str, count: int) -> tuple[int, ...]:
    lineno, tokens = reader.require_line(f"'{key} <{count} ints>'")
    if tokens[0][0] != key:
        raise ParseError(lineno, tokens[0][1], f"expected {key!r}, got {tokens[0][0]!r}")
    if len(tokens) != count + 1:
        raise ParseError(
            lineno, tokens[0][1], f"{key!r} needs {count} values, got {len(tokens) - 1}"
        )
    return tuple(
        _as_int(tok, lineno, col, f"{key} entry") for tok, col in tokens[1:]
    )


def _header(reader: _Reader, name: str) -> None:
    lineno, tokens = reader.require_line(f"section header {name!r}")
    if len(tokens) != 1 or tokens[0][0] != name:
        raise ParseError(lineno, tokens[0][1], f"expected section header {name!r}")


def _rows(reader: _Reader, n: int, section: str) -> Table:
    rows = []
    for r in range(n):
        lineno, tokens = reader.require_line(f"row {r} of {section}")
        if len(tokens) != n:
            raise ParseError(
                lineno, tokens[0][1],
                f"{section} row {r} has {len(tokens)} entries, expected {n}",
            )
        row = []
        for tok, col in tokens:
            v = _as_int(tok, lineno, col, f"{section} row {r} entry")
            if not 0 <= v < n:
                raise ParseError(
                    lineno, col, f"{section} row {r} entry {v} outside 0..{n - 1}"
                )
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


def _check_identity_row(add: Table, lineno_hint: int) -> None:
    for a, value in enumerate(add[0]):
        if value != a or add[a][0] != a:
            raise ParseError(
                lineno_hint, 1, "ADD must have its identity at index 0"
            )


def parse(source: "str | os.PathLike[str]") -> Document:
    """Parse a document from text, or from a path if the string names a file."""
    if isinstance(source, os.PathLike):
        text = os.fspath(source)
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    elif "\n" not in source and os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    reader = _Reader(text)
    lineno, tokens = reader.require_line("a '<kind> v1' header")
    if len(tokens) != 2:
        raise ParseError(lineno, tokens[0][1], "header must be '<kind> v1'")
    kind, version = tokens[0][0], tokens[1][0]
    if kind not in KINDS:
        raise ParseError(lineno, tokens[0][1], f"unknown kind {kind!r}")
    if version != "v1":
        raise ParseError(lineno, tokens[1][1], f"unsupported version {version!r}")

    if kind == "cons":
        p = _keyword_int(reader, "p")
        k = _keyword_int(reader, "k")
        level = _keyword_int(reader, "level")
        if level < 2:
            raise ParseError(reader.pos, 1, "level must be at least 2")
        chain = _keyword_ints(reader, "chain", level + 1)
        f = []
        for i in range(1, level):
            if p < 1 or chain[i] < 0:
                raise ParseError(reader.pos, 1, "p and chain entries must be positive")
            f.append(_keyword_ints(reader, f"f{i}", p ** chain[i]))
        reader.require_end()
        return ConsDoc(p=p, k=k, level=level, chain=chain, f=tuple(f))

    n = _keyword_int(reader, "n")
    if n < 1:
        raise ParseError(lineno + 1, 1, "n must be positive")
    if kind == "bop":
        table = _rows(reader, n, "table")
        reader.require_end()
        return BopDoc(n=n, table=table)
    sections = {
        "sol": ("LAMBDA", "TAU"),
        "qsol": ("A", "B"),
        "brace": ("ADD", "CIRCLE"),
        "ring": ("ADD", "MUL"),
    }[kind]
    _header(reader, sections[0])
    first_line = reader.pos + 1
    first = _rows(reader, n, sections[0])
    _header(reader, sections[1])
    second = _rows(reader, n, sections[1])
    reader.require_end()
    if kind == "sol":
        return SolDoc(n=n, lam=first, tau=second)
    if kind == "qsol":
        return QsolDoc(n=n, a=first, b=second)
    if kind in ("brace", "ring"):
        _check_identity_row(first, first_line - 1)
    if kind == "brace":
        return BraceDoc(n=n, add=first, circle=second)
    return RingDoc(n=n, add=first, mul=second)


def _row_lines(table: Table) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in table)


def emit(doc: Document) -> str:
    """Canonical serialization; parse(emit(doc)) == doc."""
    if isinstance(doc, BopDoc):
        return f"bop v1\nn {doc.n}\n" + _row_lines(doc.table)
    if isinstance(doc, SolDoc):
        return (
            f"sol v1\nn {doc.n}\nLAMBDA\n"
            + _row_lines(doc.lam)
            + "TAU\n"
            + _row_lines(doc.tau)
        )
    if isinstance(doc, QsolDoc):
        return (
            f"qsol v1\nn {doc.n}\nA\n" + _row_lines(doc.a) + "B\n" + _row_lines(doc.b)
        )
    if isinstance(doc, BraceDoc):
        return (
            f"brace v1\nn {doc.n}\nADD\n"
            + _row_lines(doc.add)
            + "CIRCLE\n"
            + _row_lines(doc.circle)
        )
    if isinstance(doc, RingDoc):
        return (
            f"ring v1\nn {doc.n}\nADD\n"
            + _row_lines(doc.add)
            + "MUL\n"
            + _row_lines(doc.mul)
        )
    if isinstance(doc, ConsDoc):
        lines = [
            "cons v1",
            f"p {doc.p}",
            f"k {doc.k}",
            f"level {doc.level}",
            "chain " + " ".join(str(j) for j in doc.chain),
        ]
        for i, table in enumerate(doc.f, start=1):
            lines.append(f"f{i} " + " ".join(str(v) for v in table))
        return "\n".join(lines) + "\n"
    raise TypeError(f"not a document: {doc!r}")
