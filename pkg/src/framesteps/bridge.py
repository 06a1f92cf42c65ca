"""Bijections between integer GT patterns and tableaux, and the complement diagrams."""

from __future__ import annotations

from .common import PreconditionError
from .gt import GTPattern, canonical, generalized_complement, naimark_map, validate_gt
from .tableaux import Tableau, boxcomp, gamma_complement, strip_zeros, validate_tableau


def _require_integral(p: GTPattern) -> None:
    if not p.is_integral:
        raise PreconditionError("pattern has non-integer entries; clear it first")
    report = validate_gt(p)
    if not report.ok:
        raise PreconditionError(f"invalid GT pattern: {report.violations[0]}")


def _require_tableau(t: Tableau) -> None:
    report = validate_tableau(t)
    if not report.ok:
        raise PreconditionError(f"invalid tableau: {report.violations[0]}")


def _grow(rows: list[list[int]], lower, upper, label: int) -> None:
    for r, (a, b) in enumerate(zip(lower, upper)):
        if b > a:
            rows[r].extend([label] * (b - a))


def gt_to_ssyt(p: GTPattern) -> Tableau:
    """Fill the skew strip between rows ``i-1`` and ``i`` with ``i``."""
    if p.kind != "triangular":
        raise PreconditionError("gt_to_ssyt needs a triangular pattern")
    _require_integral(p)
    shape = strip_zeros(p.top)
    rows: list[list[int]] = [[] for _ in shape]
    prev: tuple[int, ...] = ()
    for i, row in enumerate(p.rows, 1):
        nonzero = strip_zeros(row)
        _grow(rows, prev + (0,) * (len(nonzero) - len(prev)), nonzero, i)
        prev = nonzero
    return Tableau(tuple(tuple(r) for r in rows))


def ssyt_to_gt(t: Tableau, n: int | None = None) -> GTPattern:
    """Row ``i`` of the pattern is the shape occupied by entries ``<= i``.

    ``n`` (number of rows) defaults to the largest entry; pass it explicitly
    when trailing labels are absent.
    """
    if not t.is_straight:
        raise PreconditionError("ssyt_to_gt needs a straight-shape tableau; use skew_to_gt")
    _require_tableau(t)
    if n is None:
        n = t.max_entry
    elif n < t.max_entry:
        raise PreconditionError(f"n={n} is below the largest entry {t.max_entry}")
    rows = []
    for i in range(1, n + 1):
        counts = [sum(1 for x in r if x <= i) for r in t.rows]
        counts = list(strip_zeros(counts))
        rows.append(tuple(counts + [0] * (i - len(counts))))
    return GTPattern(tuple(rows), "triangular")


def gt_to_skew(p: GTPattern) -> Tableau:
    """Parallelogram pattern to skew tableau of shape (top row)/(bottom row).

    The strip between rows ``i`` and ``i+1`` is filled with ``i``.
    """
    if p.kind != "parallelogram":
        raise PreconditionError("gt_to_skew needs a parallelogram pattern")
    _require_integral(p)
    if not p.rows:
        return Tableau(())
    inner = p.rows[0]
    rows: list[list[int]] = [[] for _ in inner]
    for label, (lower, upper) in enumerate(zip(p.rows, p.rows[1:]), 1):
        _grow(rows, lower, upper, label)
    return Tableau(tuple(tuple(r) for r in rows), inner)


def skew_to_gt(t: Tableau, rows: int | None = None, width: int | None = None) -> GTPattern:
    """Inverse of :func:`gt_to_skew`.

    ``rows`` defaults to one more than the largest label; ``width`` defaults
    to the number of rows of the outer shape.
    """
    _require_tableau(t)
    if rows is None:
        rows = t.max_entry + 1
    if rows < 1:
        raise PreconditionError("a parallelogram pattern needs at least one row")
    if t.max_entry > rows - 1:
        raise PreconditionError(f"label {t.max_entry} needs at least {t.max_entry + 1} pattern rows")
    height = len(strip_zeros(t.shape))
    if width is None:
        width = height
    elif width < height:
        raise PreconditionError(f"width {width} is below the tableau height {height}")
    pad = (0,) * (width - len(t.inner))
    out = []
    for k in range(rows):
        counts = tuple(i + sum(1 for x in r if x <= k) for i, r in zip(t.inner, t.rows))
        out.append(counts + pad)
    return GTPattern(tuple(out), "parallelogram")


def verify_naimark_diagram(t: Tableau, n: int, d: int) -> bool:
    """Does the Naimark map on patterns agree with the gamma complement on tableaux?"""
    left = naimark_map(ssyt_to_gt(t, n), n, d)
    right = ssyt_to_gt(gamma_complement(t, n, d), n)
    return canonical(left) == canonical(right)


def verify_boxcomp_diagram(t: Tableau, n: int) -> bool:
    """Does the generalized complement on patterns agree with boxcomp (``c = lambda_1``)?"""
    p = ssyt_to_gt(t, n)
    if not p.rows or p.top[-1] != 0 or p.top[0] == 0:
        raise PreconditionError("need a nonempty tableau with fewer than n rows")
    left = generalized_complement(p)
    right = ssyt_to_gt(boxcomp(t, n, t.shape[0]), n)
    return canonical(left) == canonical(right)
