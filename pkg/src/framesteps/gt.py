"""Gelfand-Tsetlin patterns with exact entries.

Rows are stored apex first: in a triangular pattern ``rows[i-1]`` has ``i``
entries; in a parallelogram every row has the same width. Entries are ``int``
or :class:`fractions.Fraction`; floats are refused.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal, Union

from .common import PreconditionError, ValidationReport, Violation

Number = Union[int, Fraction]
Kind = Literal["triangular", "parallelogram"]


def _exact(x) -> Number:
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise TypeError(f"GT entries must be int or Fraction, got {x!r}")
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[Number, ...], ...]
    kind: Kind = "triangular"

    def __post_init__(self) -> None:
        if self.kind not in ("triangular", "parallelogram"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        object.__setattr__(self, "rows", tuple(tuple(_exact(x) for x in r) for r in self.rows))

    @classmethod
    def triangle(cls, rows: Sequence[Sequence[Number]]) -> GTPattern:
        return cls(tuple(tuple(r) for r in rows), "triangular")

    @classmethod
    def parallelogram(cls, rows: Sequence[Sequence[Number]]) -> GTPattern:
        return cls(tuple(tuple(r) for r in rows), "parallelogram")

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> tuple[Number, ...]:
        return self.rows[-1] if self.rows else ()

    @property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for r in self.rows for x in r)

    def entry(self, i: int, j: int) -> Number:
        """1-based access ``lambda_{i,j}``."""
        return self.rows[i - 1][j - 1]


def validate_gt(p: GTPattern) -> ValidationReport:
    """Check row shapes, nonnegativity, row monotonicity and interlacing."""
    found: dict[str, Violation] = {}

    def flag(rule: str, row: int, col: int, msg: str) -> None:
        found.setdefault(rule, Violation(rule, row, col, msg))

    widths = [len(r) for r in p.rows]
    if p.kind == "triangular":
        for i, w in enumerate(widths, 1):
            if w != i:
                flag("structure", i, 0, f"row {i} has {w} entries, expected {i}")
    elif len(set(widths)) > 1:
        flag("structure", 0, 0, f"parallelogram rows have unequal widths {widths}")
    if "structure" in found:
        return ValidationReport((found["structure"],))

    for i, row in enumerate(p.rows, 1):
        for j, x in enumerate(row, 1):
            if x < 0:
                flag("nonnegative", i, j, f"entry {x} is negative")
            if j < len(row) and x < row[j]:
                flag("row", i, j, f"row {i} not weakly decreasing ({x} < {row[j]})")
    for i in range(1, p.height):
        below, above = p.rows[i - 1], p.rows[i]
        for j, x in enumerate(below):
            if above[j] < x:
                flag("interlacing", i + 1, j + 1, f"{above[j]} < {x} above-left of row {i}")
            if j + 1 < len(above) and x < above[j + 1]:
                flag("interlacing", i + 1, j + 2, f"{x} < {above[j + 1]} above-right of row {i}")
    order = ["nonnegative", "row", "interlacing"]
    return ValidationReport(tuple(found[k] for k in order if k in found))


def _require_valid(p: GTPattern, kind: Kind | None = None) -> None:
    if kind is not None and p.kind != kind:
        raise PreconditionError(f"expected a {kind} pattern, got {p.kind}")
    report = validate_gt(p)
    if not report.ok:
        raise PreconditionError(f"invalid GT pattern: {report.violations[0]}")


def gt_weight(p: GTPattern) -> tuple[Number, ...]:
    """Differences of consecutive row sums, with an all-zero row 0."""
    sums = [sum(r) for r in p.rows]
    return tuple(b - a for a, b in zip([0] + sums, sums))


def _resize(row: Sequence[Number], width: int, i: int) -> tuple[Number, ...]:
    if len(row) >= width:
        if any(row[width:]):
            raise PreconditionError(f"row {i} has nonzero entries beyond position {width}")
        return tuple(row[:width])
    return tuple(row) + (0,) * (width - len(row))


def triangular_to_parallelogram(p: GTPattern, width: int) -> GTPattern:
    """Pad (or trim trailing zeros of) every row to ``width`` entries.

    Inner eigensteps become outer eigensteps when ``width`` is the ambient
    dimension.
    """
    if p.kind != "triangular":
        raise PreconditionError("expected a triangular pattern")
    return GTPattern(tuple(_resize(r, width, i) for i, r in enumerate(p.rows, 1)), "parallelogram")


def parallelogram_to_triangular(p: GTPattern) -> GTPattern:
    if p.kind != "parallelogram":
        raise PreconditionError("expected a parallelogram pattern")
    return GTPattern(tuple(_resize(r, i, i) for i, r in enumerate(p.rows, 1)), "triangular")


def zero_pad_top(p: GTPattern) -> GTPattern:
    """Add a row on top repeating the top row plus a trailing zero.

    On the frame side this appends a zero vector.
    """
    _require_valid(p, "triangular")
    return GTPattern(p.rows + (p.top + (0,),), "triangular")


def canonical(p: GTPattern) -> GTPattern:
    """Drop top rows that are pure zero-padding of the row below."""
    if p.kind != "triangular":
        return p
    rows = list(p.rows)
    while len(rows) >= 2 and rows[-1] == rows[-2] + (0,):
        rows.pop()
    return GTPattern(tuple(rows), "triangular")


def equivalent(p: GTPattern, q: GTPattern) -> bool:
    return canonical(p) == canonical(q)


def naimark_map(p: GTPattern, n: int, d: int) -> GTPattern:
    """The involution between the tight-frame eigenstep polytopes for ``(n, d)`` and ``(n, n-d)``.

    The input must have top row ``(n,)*d + (0,)*(n-d)`` and constant weight
    ``d``. Output entry ``(i, j)`` is ``lambda_{n-i, d+j-i}`` on the central
    band, ``0`` when ``j > n-d`` and ``n`` below the band.
    """
    if not 0 < d < n:
        raise PreconditionError(f"need 0 < d < n, got d={d}, n={n}")
    _require_valid(p, "triangular")
    if p.height != n or p.top != (n,) * d + (0,) * (n - d):
        raise PreconditionError(f"top row {p.top} is not ({n}^{d}, 0^{n - d})")
    if gt_weight(p) != (d,) * n:
        raise PreconditionError(f"weight {gt_weight(p)} is not constant {d}")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, i + 1):
            if j > n - d:
                row.append(0)
            elif i > d + j - 1:
                row.append(n)
            else:
                row.append(p.entry(n - i, d + j - i))
        rows.append(tuple(row))
    return GTPattern(tuple(rows), "triangular")


def generalized_complement(p: GTPattern) -> GTPattern:
    """Subtract every entry from the top-left entry ``B`` and mirror each row.

    Requires the top row to end in 0 and ``B > 0``. Row sums map
    ``w_i -> B - w_i``.
    """
    _require_valid(p, "triangular")
    if not p.rows:
        raise PreconditionError("empty pattern")
    if p.top[-1] != 0:
        raise PreconditionError(f"top row {p.top} does not end in 0")
    b = p.top[0]
    if b <= 0:
        raise PreconditionError("top row is identically zero")
    return GTPattern(tuple(tuple(b - x for x in reversed(r)) for r in p.rows), "triangular")


def lattice_points(top: Sequence[int], weight: Sequence[int]) -> Iterator[GTPattern]:
    """All integer triangular patterns with the given top row and weight.

    Rows are generated from the top down: each lower row interlaces the one
    above it and has the row sum dictated by ``weight``.
    """
    top = tuple(top)
    n = len(top)
    if len(weight) != n:
        raise PreconditionError("top row and weight must have the same length")
    if not all(a >= b for a, b in zip(top, top[1:])) or (top and top[-1] < 0):
        raise PreconditionError(f"top row {top} is not weakly decreasing and nonnegative")
    sums = [0]
    for w in weight:
        sums.append(sums[-1] + w)
    if sums[-1] != sum(top):
        return

    def rows_below(above: tuple[int, ...], target: int) -> Iterator[tuple[int, ...]]:
        # row of length len(above)-1 with above[j] >= x_j >= above[j+1]
        k = len(above) - 1
        lo_rest = [sum(above[j + 1:]) for j in range(k + 1)]
        hi_rest = [sum(above[j:k]) for j in range(k + 1)]

        def rec(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
            if j == k:
                if remaining == 0:
                    yield ()
                return
            for x in range(above[j + 1], above[j] + 1):
                rest = remaining - x
                if lo_rest[j + 1] <= rest <= hi_rest[j + 1]:
                    for tail in rec(j + 1, rest):
                        yield (x,) + tail

        yield from rec(0, target)

    def descend(stack: list[tuple[int, ...]]) -> Iterator[GTPattern]:
        i = len(top) - len(stack)  # number of rows still to generate
        if i == 0:
            yield GTPattern(tuple(reversed(stack)), "triangular")
            return
        for row in rows_below(stack[-1], sums[i]):
            stack.append(row)
            yield from descend(stack)
            stack.pop()

    if n == 0:
        yield GTPattern((), "triangular")
        return
    yield from descend([top])
