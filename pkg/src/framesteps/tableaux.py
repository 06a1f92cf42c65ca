"""Partitions and semistandard Young tableaux, straight and skew.

Tableaux use French notation: ``rows[0]`` is the bottom row, and each row
lists the entries of its cells from left to right. A skew tableau carries an
``inner`` partition; row ``r`` then holds the entries of columns
``inner[r]+1 .. inner[r]+len(rows[r])``. Labels are positive integers.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .common import PreconditionError, ValidationReport, Violation

log = logging.getLogger(__name__)

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def strip_zeros(parts: Sequence[int]) -> Partition:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def conjugate(parts: Sequence[int]) -> Partition:
    parts = strip_zeros(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


@dataclass(frozen=True)
class Tableau:
    """A straight or skew filling stored bottom row first.

    The constructor canonicalizes the layout (tuples, ``inner`` padded to the
    number of rows, trailing empty rows over a zero inner part dropped) but
    does not check semistandardness; see :func:`validate_tableau`.
    """

    rows: tuple[tuple[int, ...], ...]
    inner: Partition = ()

    def __post_init__(self) -> None:
        rows = [tuple(int(x) for x in row) for row in self.rows]
        inner = [int(x) for x in self.inner]
        height = max(len(rows), len(strip_zeros(inner)))
        rows += [()] * (height - len(rows))
        inner = (inner + [0] * height)[:height]
        while rows and not rows[-1] and inner[-1] == 0:
            rows.pop()
            inner.pop()
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "inner", tuple(inner))

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def is_straight(self) -> bool:
        return not any(self.inner)

    @property
    def shape(self) -> Partition:
        """Outer shape, row lengths bottom to top."""
        return tuple(i + len(r) for i, r in zip(self.inner, self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def max_entry(self) -> int:
        return max((x for r in self.rows for x in r), default=0)

    def cell(self, row: int, col: int) -> int | None:
        """Entry at 0-based (row, col) in absolute column coordinates."""
        if row >= len(self.rows):
            return None
        k = col - self.inner[row]
        if 0 <= k < len(self.rows[row]):
            return self.rows[row][k]
        return None

    def columns(self) -> list[list[int]]:
        """Entries of each column, bottom to top (straight tableaux only)."""
        width = max(self.shape, default=0)
        return [[r[c] for r in self.rows if len(r) > c] for c in range(width)]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> Tableau:
        height = max((len(c) for c in columns), default=0)
        return cls(tuple(tuple(c[r] for c in columns if len(c) > r) for r in range(height)))


def validate_tableau(t: Tableau) -> ValidationReport:
    """Check shape, positivity, row and column conditions.

    Only the first offending cell per rule is reported.
    """
    found: dict[str, Violation] = {}

    def flag(rule: str, row: int, col: int, msg: str) -> None:
        found.setdefault(rule, Violation(rule, row, col, msg))

    outer = t.shape
    if not is_partition(t.inner):
        flag("inner-shape", 0, 0, f"inner shape {t.inner} is not a partition")
    if not is_partition(outer):
        flag("outer-shape", 0, 0, f"outer shape {outer} is not a partition")
    for r, row in enumerate(t.rows):
        for k, x in enumerate(row):
            col = t.inner[r] + k
            if x < 1:
                flag("entry", r + 1, col + 1, f"entry {x} is not a positive label")
            if k and row[k - 1] > x:
                flag("row", r + 1, col + 1, f"row {r + 1} not weakly increasing")
            below = t.cell(r - 1, col) if r else None
            if below is not None and below >= x:
                flag("column", r + 1, col + 1, f"column {col + 1} not strictly increasing")
    order = ["inner-shape", "outer-shape", "entry", "row", "column"]
    return ValidationReport(tuple(found[k] for k in order if k in found))


def _require_valid(t: Tableau) -> None:
    report = validate_tableau(t)
    if not report.ok:
        raise PreconditionError(f"invalid tableau: {report.violations[0]}")


def _require_straight(t: Tableau) -> None:
    if not t.is_straight:
        raise PreconditionError("operation needs a straight-shape tableau")


def weight_of(t: Tableau, n: int | None = None) -> tuple[int, ...]:
    """Label multiplicities ``(w_1, ..., w_n)``; ``n`` defaults to the largest entry."""
    _require_valid(t)
    top = t.max_entry
    if n is None:
        n = top
    elif n < top:
        raise PreconditionError(f"label bound n={n} is below the largest entry {top}")
    counts = Counter(t.reading_word())
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


def boxcomp(t: Tableau, n: int, c: int | None = None) -> Tableau:
    """Column-complement involution.

    Column ``j`` of the result is ``[n]`` minus column ``c+1-j`` of ``t``.
    ``c`` defaults to the number of columns; a larger ``c`` prepends full
    columns ``1..n``.
    """
    _require_straight(t)
    _require_valid(t)
    if t.max_entry > n:
        raise PreconditionError(f"entry {t.max_entry} exceeds label bound n={n}")
    cols = t.columns()
    if c is None:
        c = len(cols)
    if c < len(cols):
        raise PreconditionError(f"column bound c={c} is below the column count {len(cols)}")
    cols += [[]] * (c - len(cols))
    labels = range(1, n + 1)
    out = []
    for j in range(c):
        present = set(cols[c - 1 - j])
        out.append([x for x in labels if x not in present])
    return Tableau.from_columns(out)


def gamma_complement(t: Tableau, n: int, d: int) -> Tableau:
    """Complement of a ``d x n`` rectangular tableau with every label used ``d`` times.

    Entries are reflected ``j -> n+1-j`` and then each column is replaced by
    its complement in ``[n]``.
    """
    _require_straight(t)
    _require_valid(t)
    if not 0 < d < n:
        raise PreconditionError(f"need 0 < d < n, got d={d}, n={n}")
    if t.shape != (n,) * d:
        raise PreconditionError(f"shape {t.shape} is not a {d}x{n} rectangle")
    w = weight_of(t, n)
    if w != (d,) * n:
        raise PreconditionError(f"weight {w} is not constant {d}")
    out = []
    for col in t.columns():
        reflected = {n + 1 - x for x in col}
        out.append([x for x in range(1, n + 1) if x not in reflected])
    return Tableau.from_columns(out)


def strip_to_skew(t: Tableau) -> Tableau:
    """Remove the 1's and relabel ``i -> i-1``, giving a skew tableau over ``(w_1)``."""
    _require_straight(t)
    _require_valid(t)
    if not t.rows:
        return t
    ones = sum(1 for x in t.rows[0] if x == 1)
    rows = [tuple(x - 1 for x in t.rows[0][ones:])]
    rows += [tuple(x - 1 for x in r) for r in t.rows[1:]]
    return Tableau(tuple(rows), (ones,))


def skew_to_straight(t: Tableau) -> Tableau:
    """Inverse of :func:`strip_to_skew`: shift labels up and fill the inner strip with 1's."""
    _require_valid(t)
    if any(t.inner[1:]):
        raise PreconditionError(f"inner shape {t.inner} has more than one nonzero part")
    if not t.rows:
        return t
    ones = t.inner[0]
    rows = [(1,) * ones + tuple(x + 1 for x in t.rows[0])]
    rows += [tuple(x + 1 for x in r) for r in t.rows[1:]]
    return Tableau(tuple(rows))


def _fill(shape: Partition, n: int, counts: list[int] | None) -> Iterator[Tableau]:
    """Backtracking filler over cells in reading order.

    Labels are tried in increasing order, so tableaux come out sorted by
    reading word. With ``counts`` the filling must use exactly that many of
    each label; without it any labels in ``[n]`` are allowed.
    """
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    height = conjugate(shape)
    grid = [[0] * length for length in shape]
    total = len(cells)

    def rec(k: int) -> Iterator[Tableau]:
        if k == total:
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        r, c = cells[k]
        lo = r + 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # cells stacked above must still receive strictly larger labels
        hi = n - (height[c] - r - 1)
        for x in range(lo, hi + 1):
            if counts is not None:
                if not counts[x - 1]:
                    continue
                counts[x - 1] -= 1
            grid[r][c] = x
            yield from rec(k + 1)
            if counts is not None:
                counts[x - 1] += 1
        grid[r][c] = 0

    yield from rec(0)


def enumerate_tableaux(
    shape: Sequence[int], weight: Sequence[int], limit: int | None = None
) -> Iterator[Tableau]:
    """Yield every straight SSYT of the given shape and weight once.

    Output is ordered lexicographically by the bottom-to-top reading word.
    Zero weights are allowed: the label is simply absent.
    """
    shape = strip_zeros(shape)
    if not is_partition(shape) or any(w < 0 for w in weight):
        raise PreconditionError(f"bad shape {tuple(shape)} or weight {tuple(weight)}")
    if sum(shape) != sum(weight):
        log.warning("shape %s has %d cells but weight %s sums to %d; nothing to enumerate",
                    shape, sum(shape), tuple(weight), sum(weight))
        return
    count = 0
    for t in _fill(shape, len(weight), list(weight)):
        if limit is not None and count >= limit:
            break
        count += 1
        yield t
    log.debug("enumerated %d tableaux of shape %s, weight %s", count, shape, tuple(weight))


def count_tableaux(shape: Sequence[int], weight: Sequence[int]) -> int:
    """Kostka number: how many SSYT have this shape and weight."""
    return sum(1 for _ in enumerate_tableaux(shape, weight))


def tableaux_of_shape(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """All straight SSYT of ``shape`` with entries in ``[n]``, any weight."""
    shape = strip_zeros(shape)
    if not is_partition(shape):
        raise PreconditionError(f"shape {tuple(shape)} is not a partition")
    if len(shape) > n:
        return
    yield from _fill(shape, n, None)
