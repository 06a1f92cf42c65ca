"""Frame operators, eigensteps, clearing constants and Naimark complements.

Frames are real ``d x n`` synthesis matrices (numpy arrays) whose columns are
the frame vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .common import PreconditionError
from .gt import GTPattern

DEFAULT_TOL = 1e-9
DEFAULT_MAX_DEN = 10_000

Form = Literal["inner", "outer"]


class ConvergenceError(RuntimeError):
    pass


class NotClearableError(ValueError):
    """No rational with bounded denominator explains some eigenstep."""

    def __init__(self, message: str, row: int, col: int, value: float, error: float):
        super().__init__(message)
        self.row, self.col, self.value, self.error = row, col, value, error


def as_frame(phi) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    if phi.ndim != 2 or phi.shape[0] < 1 or phi.shape[1] < 1:
        raise PreconditionError(f"synthesis matrix must be d x n with d, n >= 1, got shape {phi.shape}")
    if not np.all(np.isfinite(phi)):
        raise PreconditionError("synthesis matrix has non-finite entries")
    return phi


def _off_diagonal(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigh(m, tol: float = DEFAULT_TOL, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Returns ``(values, vectors)`` with ``m @ vectors[:, k] = values[k] * vectors[:, k]``,
    unsorted. Sweeps continue past the point where the off-diagonal
    Frobenius mass drops below ``tol * |m|_F`` until it stops shrinking, so
    eigenvalues are accurate to roundoff rather than to ``tol``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    scale = float(np.linalg.norm(a)) or 1.0
    if np.max(np.abs(a - a.T), initial=0.0) > tol * scale:
        raise PreconditionError("matrix is not symmetric within tolerance")
    a = (a + a.T) / 2
    v = np.eye(n)
    floor = np.finfo(float).eps * scale
    prev = math.inf
    for _ in range(max_sweeps):
        off = _off_diagonal(a)
        if off <= floor or (off < tol * scale and off >= prev / 2):
            return np.diag(a).copy(), v
        prev = off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = _off_diagonal(a)
    if off < tol * scale:
        return np.diag(a).copy(), v
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3e})")


def symmetric_spectrum(m, tol: float = DEFAULT_TOL, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues in descending order; values within ``tol * scale`` of zero snap to 0."""
    values, _ = jacobi_eigh(m, tol, max_sweeps)
    values = np.sort(values)[::-1]
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    values[np.abs(values) <= tol * scale] = 0.0
    return values


@dataclass(frozen=True)
class EigenstepTable:
    """Spectra of the partial Gram matrices (inner) or partial frame operators (outer).

    ``rows[i-1]`` belongs to the first ``i`` vectors; each row is descending.
    """

    rows: tuple[tuple[float, ...], ...]
    form: Form = "inner"
    tolerance: float = DEFAULT_TOL

    @property
    def n(self) -> int:
        return len(self.rows)

    def row_sums(self) -> list[float]:
        return [math.fsum(r) for r in self.rows]

    def weights(self) -> list[float]:
        sums = self.row_sums()
        return [b - a for a, b in zip([0.0] + sums, sums)]

    def interlacing_defect(self) -> float:
        """Largest violation of the interlacing inequalities (0 when they hold)."""
        worst = 0.0
        for below, above in zip(self.rows, self.rows[1:]):
            for j, x in enumerate(below):
                if j < len(above):
                    worst = max(worst, x - above[j])
                if j + 1 < len(above):
                    worst = max(worst, above[j + 1] - x)
        return worst

    def monotonicity_defect(self) -> float:
        return max((b - a for r in self.rows for a, b in zip(r, r[1:])), default=0.0)


def inner_eigensteps(phi, tol: float = DEFAULT_TOL) -> EigenstepTable:
    phi = as_frame(phi)
    gram = phi.T @ phi
    n = phi.shape[1]
    rows = tuple(tuple(symmetric_spectrum(gram[:i, :i], tol).tolist()) for i in range(1, n + 1))
    return EigenstepTable(rows, "inner", tol)


def outer_eigensteps(phi, tol: float = DEFAULT_TOL) -> EigenstepTable:
    phi = as_frame(phi)
    n = phi.shape[1]
    rows = []
    for i in range(1, n + 1):
        part = phi[:, :i]
        rows.append(tuple(symmetric_spectrum(part @ part.T, tol).tolist()))
    return EigenstepTable(tuple(rows), "outer", tol)


def complement_eigensteps(table: EigenstepTable) -> EigenstepTable:
    """Inner eigensteps of a generalized Naimark complement: ``B - lambda_{i,i+1-j}``.

    ``B`` is the largest top-row value. Floating-point counterpart of
    :func:`framesteps.gt.generalized_complement`, without its ``lambda_n = 0``
    requirement.
    """
    if table.form != "inner":
        raise PreconditionError("complement is defined on inner eigensteps")
    b = max(table.rows[-1], default=0.0)
    return EigenstepTable(tuple(tuple(b - x for x in reversed(r)) for r in table.rows),
                          "inner", table.tolerance)


@dataclass(frozen=True)
class Cleared:
    ell: Fraction
    pattern: GTPattern


def clear(table: EigenstepTable, max_den: int = DEFAULT_MAX_DEN, tol: float = DEFAULT_TOL) -> Cleared:
    """Find the smallest ``ell > 0`` making every eigenstep a nonnegative integer.

    Each entry is rounded to its best rational approximation with
    denominator at most ``max_den``; entries further than ``tol`` (relative to
    ``max(1, |x|)``) from it make the table not clearable.
    """
    exact: list[list[Fraction]] = []
    worst = (0.0, 0, 0, 0.0)
    for i, row in enumerate(table.rows, 1):
        out = []
        for j, x in enumerate(row, 1):
            f = Fraction(x).limit_denominator(max_den)
            err = abs(x - float(f)) / max(1.0, abs(x))
            if err > worst[0]:
                worst = (err, i, j, x)
            if f < 0:
                raise NotClearableError(f"eigenstep ({i},{j}) = {x!r} is negative", i, j, x, err)
            out.append(f)
        exact.append(out)
    err, i, j, x = worst
    if err > tol:
        raise NotClearableError(
            f"eigenstep ({i},{j}) = {x!r} is {err:.2e} from any fraction with denominator <= {max_den}",
            i, j, x, err)
    flat = [f for row in exact for f in row]
    common = math.lcm(*(f.denominator for f in flat)) if flat else 1
    numerators = [f.numerator * (common // f.denominator) for f in flat if f]
    g = math.gcd(*numerators) if numerators else common
    ell = Fraction(common, g)
    kind = "triangular" if table.form == "inner" else "parallelogram"
    rows = tuple(tuple(int(f * ell) for f in row) for row in exact)
    return Cleared(ell, GTPattern(rows, kind))


@dataclass(frozen=True)
class FrameReport:
    lower: float | None
    upper: float | None
    rank: int
    tight: bool
    equal_norm: bool
    norms_squared: tuple[float, ...]
    spectrum: tuple[float, ...]


def frame_report(phi, tol: float = DEFAULT_TOL) -> FrameReport:
    """Optimal bounds of the frame for its span, rank, and tightness flags.

    The lower bound is the smallest nonzero eigenvalue of the frame operator,
    so rank-deficient frames are reported as frames for their span.
    """
    phi = as_frame(phi)
    spectrum = symmetric_spectrum(phi @ phi.T, tol)
    norms = tuple(float(x) for x in np.sum(phi * phi, axis=0))
    top = float(spectrum[0])
    equal = max(norms) - min(norms) <= tol * max(1.0, max(norms))
    if top <= tol:
        return FrameReport(None, None, 0, False, equal, norms, tuple(spectrum.tolist()))
    nonzero = spectrum[spectrum > tol * top]
    lower = float(nonzero[-1])
    tight = abs(top - lower) <= tol * top
    return FrameReport(lower, top, len(nonzero), tight, equal, norms, tuple(spectrum.tolist()))


def naimark_frame(phi, mode: Literal["tight", "generalized"] = "tight", tol: float = DEFAULT_TOL) -> np.ndarray:
    """A complement ``psi`` with ``phi.T @ phi + psi.T @ psi = c I``.

    ``c`` is the frame bound in tight mode and the largest eigenvalue of the
    frame operator in generalized mode. ``psi`` has one row per eigenvalue of
    ``c I - phi.T @ phi`` above ``tol * c``, largest first; only its Gram
    matrix is determined.
    """
    phi = as_frame(phi)
    report = frame_report(phi, tol)
    if report.upper is None:
        raise PreconditionError("zero frame has no complement")
    if mode == "tight":
        if not report.tight:
            raise PreconditionError(f"frame is not tight (bounds {report.lower:.6g}, {report.upper:.6g})")
        c = report.lower
    elif mode == "generalized":
        c = report.upper
    else:
        raise PreconditionError(f"unknown mode {mode!r}")
    n = phi.shape[1]
    gap = c * np.eye(n) - phi.T @ phi
    values, vectors = jacobi_eigh(gap, tol)
    if values.min(initial=0.0) < -tol * c:
        raise PreconditionError(f"c I - Gram has eigenvalue {values.min():.3e} < 0")
    order = np.argsort(values)[::-1]
    keep = [k for k in order if values[k] > tol * c]
    if not keep:
        return np.zeros((0, n))
    return np.sqrt(values[keep])[:, None] * vectors[:, keep].T
