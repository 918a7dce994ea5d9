"""2x2 and small n x n matrices over a base ring or a quotient ring.

Entries are either UfdElement values or Residue values; a matrix never
mixes the two. All operations are pure.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .quotient import QuotientContext, Residue
from .ufd import ParseError, UfdElement


class Mat2:
    """A 2x2 matrix [[e, f], [g, h]]."""

    __slots__ = ("e", "f", "g", "h")

    def __init__(self, e, f, g, h):
        self.e, self.f, self.g, self.h = e, f, g, h

    @property
    def entries(self):
        return (self.e, self.f, self.g, self.h)

    def __add__(self, other):
        if not isinstance(other, Mat2):
            raise TypeError("can only add another 2x2 matrix")
        return Mat2(
            self.e + other.e, self.f + other.f, self.g + other.g, self.h + other.h
        )

    def __sub__(self, other):
        if not isinstance(other, Mat2):
            raise TypeError("can only subtract another 2x2 matrix")
        return Mat2(
            self.e - other.e, self.f - other.f, self.g - other.g, self.h - other.h
        )

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            raise TypeError("can only multiply by another 2x2 matrix")
        return Mat2(
            self.e * other.e + self.f * other.g,
            self.e * other.f + self.f * other.h,
            self.g * other.e + self.h * other.g,
            self.g * other.f + self.h * other.h,
        )

    def __neg__(self):
        return Mat2(-self.e, -self.f, -self.g, -self.h)

    def scale(self, s) -> "Mat2":
        return Mat2(s * self.e, s * self.f, s * self.g, s * self.h)

    def transpose(self) -> "Mat2":
        return Mat2(self.e, self.g, self.f, self.h)

    def map(self, fn: Callable) -> "Mat2":
        return Mat2(fn(self.e), fn(self.f), fn(self.g), fn(self.h))

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return f"[[{self.e},{self.f}],[{self.g},{self.h}]]"

    def __repr__(self):
        return f"Mat2({self})"


class MatN:
    """A small square matrix, rows stored as a tuple of tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        self._check(other)
        return MatN(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        self._check(other)
        return MatN(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __mul__(self, other):
        self._check(other)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.rows[i][0] * other.rows[0][j]
                for t in range(1, n):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return MatN(out)

    def _check(self, other):
        if not isinstance(other, MatN) or other.n != self.n:
            raise TypeError("matrix shape mismatch")

    def transpose(self) -> "MatN":
        return MatN(list(zip(*self.rows)))

    def map(self, fn: Callable) -> "MatN":
        return MatN([[fn(x) for x in row] for row in self.rows])

    def __eq__(self, other):
        return isinstance(other, MatN) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"MatN({self})"


def commutes(a, b) -> bool:
    """True iff a*b == b*a (same shape, same ring)."""
    return a * b == b * a


def transpose(a):
    return a.transpose()


def is_scalar(b) -> bool:
    """True iff the matrix is e*I: equal diagonal, zero off-diagonal."""
    if isinstance(b, Mat2):
        return b.e == b.h and _is_zero(b.f) and _is_zero(b.g)
    n = b.n
    for i in range(n):
        for j in range(n):
            if i == j:
                if not b.rows[i][i] == b.rows[0][0]:
                    return False
            elif not _is_zero(b.rows[i][j]):
                return False
    return True


def _is_zero(x) -> bool:
    return x.is_zero()


def identity2(like) -> Mat2:
    """2x2 identity over the same ring as the sample entry."""
    one, zero = _one_zero(like)
    return Mat2(one, zero, zero, one)


def zero2(like) -> Mat2:
    _, zero = _one_zero(like)
    return Mat2(zero, zero, zero, zero)


def _one_zero(like):
    if isinstance(like, Residue):
        return like.ctx.one, like.ctx.zero
    return like.one(), like.zero()


def reduce_mat(ctx: QuotientContext, m):
    """Apply the reduction map entrywise (the induced map on matrices)."""
    return m.map(ctx.reduce)


def lift_mat(m):
    """Entrywise canonical lifts of a residue matrix."""
    return m.map(lambda r: r.rep)


# ---------------------------------------------------------------------------
# matrix literals: [[e,f],[g,h]] with entries in the element grammar


def parse_matrix(text: str, elem_parser: Callable[[str, int], UfdElement]):
    """Parse a nested-bracket matrix literal into rows of elements.

    elem_parser(text, offset) parses one entry; offsets in errors refer
    to the original string.
    """
    rows, pos = _parse_rows(text, 0, elem_parser)
    while pos < len(text):
        if not text[pos].isspace():
            raise ParseError(f"unexpected {text[pos]!r} after matrix", pos, text)
        pos += 1
    return rows


def _parse_rows(text, pos, elem_parser):
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != "[":
        raise ParseError("expected '['", pos, text)
    pos += 1
    rows = []
    while True:
        row, pos = _parse_row(text, pos, elem_parser)
        rows.append(row)
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == "]":
            return rows, pos + 1
        raise ParseError("expected ',' or ']'", pos, text)


def _parse_row(text, pos, elem_parser):
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != "[":
        raise ParseError("expected '[' starting a row", pos, text)
    pos += 1
    entries = []
    while True:
        start = _skip_ws(text, pos)
        end = start
        while end < len(text) and text[end] not in ",]":
            end += 1
        if end == start:
            raise ParseError("empty matrix entry", start, text)
        entries.append(elem_parser(text[start:end], start))
        pos = end
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == "]":
            return entries, pos + 1
        raise ParseError("expected ',' or ']' in row", pos, text)


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def matrix_from_rows(rows) -> Mat2 | MatN:
    if len(rows) == 2 and all(len(r) == 2 for r in rows):
        return Mat2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    return MatN(rows)


def format_matrix(m) -> str:
    return str(m)
