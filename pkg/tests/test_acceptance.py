"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (collected again in the pytest
terminal summary). Run ``python3 tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import math
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import record  # noqa: E402
from oracles import brute_force_count, weak_compositions  # noqa: E402

from framesteps.bridge import (  # noqa: E402
    gt_to_skew,
    gt_to_ssyt,
    skew_to_gt,
    ssyt_to_gt,
    verify_boxcomp_diagram,
    verify_naimark_diagram,
)
from framesteps.formats import read_matrix  # noqa: E402
from framesteps.gt import (  # noqa: E402
    GTPattern,
    generalized_complement,
    lattice_points,
    naimark_map,
    triangular_to_parallelogram,
)
from framesteps.spectral import (  # noqa: E402
    clear,
    complement_eigensteps,
    frame_report,
    inner_eigensteps,
    naimark_frame,
    outer_eigensteps,
)
from framesteps.tableaux import (  # noqa: E402
    Tableau,
    boxcomp,
    compositions_of,
    count_tableaux,
    enumerate_tableaux,
    gamma_complement,
    partitions_of,
    strip_to_skew,
    tableaux_of_shape,
)

FIX = Path(__file__).parent.parent / "fixtures"

EX_SSYT = Tableau.straight([[1, 1, 1, 1], [2, 2, 3], [3, 3, 4], [4]])
FIRST = GTPattern.triangle([[4], [4, 2], [4, 3, 2], [4, 3, 3, 1]])
RECT = Tableau.straight([[1, 1, 1, 2, 2], [2, 3, 3, 3, 4], [4, 4, 5, 5, 5]])
RECT_SKEW = Tableau(((1, 1), (1, 2, 2, 2, 3), (3, 3, 4, 4, 4)), (3,))
CLEARED = GTPattern.triangle([[3], [5, 1], [5, 4, 0], [5, 5, 2, 0], [5, 5, 5, 0, 0]])
CLEARED_PAR = GTPattern.parallelogram([[3, 0, 0], [5, 1, 0], [5, 4, 0], [5, 5, 2], [5, 5, 5]])
NAIMARK_OUT = GTPattern.triangle([[2], [4, 0], [5, 1, 0], [5, 3, 0, 0], [5, 5, 0, 0, 0]])
EX_PAR = GTPattern.parallelogram([[2, 1, 1, 0], [2, 2, 1, 0], [2, 2, 1, 0], [4, 2, 2, 1], [4, 3, 2, 1]])
EX_SKEW = Tableau(((3, 3), (1, 4), (3,), (3,)), (2, 1, 1))
BOX_IN = Tableau.straight([[1, 1, 1, 2, 2], [2, 2, 3, 3, 5], [4, 5, 5, 5], [5]])
BOX_OUT = Tableau.straight([[1, 1, 2, 3, 3], [3, 4, 4, 4], [4]])
GAMMA_OUT = Tableau.straight([[1, 1, 2, 2, 3], [3, 4, 4, 5, 5]])
FUNTF_INNER = [[1], [5 / 3, 1 / 3], [5 / 3, 4 / 3, 0], [5 / 3, 5 / 3, 2 / 3, 0], [5 / 3, 5 / 3, 5 / 3, 0, 0]]

NAIMARK_DOMAINS = [(4, 2), (5, 2), (5, 3)]


def _finish(number: int, title: str, failures: list[str], start: float, limit: float | None) -> None:
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        failures.append(f"took {elapsed:.2f}s, limit {limit:g}s")
    detail = f"{elapsed:.2f}s" + ("; " + "; ".join(failures) if failures else "")
    record(number, title, not failures, detail)
    assert not failures, "; ".join(failures)


def test_criterion_1_golden_conversions():
    start, failures = time.perf_counter(), []
    checks = [
        ("triangle -> SSYT", gt_to_ssyt(FIRST) == EX_SSYT),
        ("SSYT -> triangle", ssyt_to_gt(EX_SSYT) == FIRST),
        ("cleared triangle -> SSYT", gt_to_ssyt(CLEARED) == RECT),
        ("SSYT -> cleared triangle", ssyt_to_gt(RECT) == CLEARED),
        ("triangle -> parallelogram", triangular_to_parallelogram(CLEARED, 3) == CLEARED_PAR),
        ("cleared parallelogram -> skew", gt_to_skew(CLEARED_PAR) == RECT_SKEW),
        ("skew -> cleared parallelogram", skew_to_gt(RECT_SKEW, 5) == CLEARED_PAR),
        ("straight and skew agree", strip_to_skew(RECT) == RECT_SKEW),
        ("skew example -> pattern", skew_to_gt(EX_SKEW, 5) == EX_PAR),
        ("pattern -> skew example", gt_to_skew(EX_PAR) == EX_SKEW),
    ]
    failures += [name for name, ok in checks if not ok]
    _finish(1, "golden conversions round-trip exactly", failures, start, 1.0)


def test_criterion_2_naimark_map():
    start, failures = time.perf_counter(), []
    out = naimark_map(CLEARED, 5, 3)
    if out != NAIMARK_OUT:
        failures.append(f"got {out.rows}")
    if naimark_map(out, 5, 2) != CLEARED:
        failures.append("not an involution on the example")
    for n, d in NAIMARK_DOMAINS:
        for p in lattice_points((n,) * d + (0,) * (n - d), (d,) * n):
            if naimark_map(naimark_map(p, n, d), n, n - d) != p:
                failures.append(f"involution fails at {p.rows}")
    _finish(2, "Naimark map example and involution", failures, start, 1.0)


def test_criterion_3_gamma_and_boxcomp():
    start, failures = time.perf_counter(), []
    if gamma_complement(RECT, 5, 3) != GAMMA_OUT:
        failures.append("gamma example")
    if boxcomp(BOX_IN, 5, 5) != BOX_OUT:
        failures.append("boxcomp example")
    for n, d in NAIMARK_DOMAINS:
        for t in enumerate_tableaux((n,) * d, (d,) * n):
            if gamma_complement(gamma_complement(t, n, d), n, n - d) != t:
                failures.append(f"gamma involution fails at {t.rows}")
    box_cases = 0
    for n in range(1, 6):
        for size in range(9):
            for shape in partitions_of(size):
                for t in tableaux_of_shape(shape, n):
                    c = shape[0] if shape else 0
                    box_cases += 1
                    if boxcomp(boxcomp(t, n, c), n, c) != t:
                        failures.append(f"boxcomp involution fails at {t.rows}, n={n}")
    _finish(3, f"gamma and boxcomp examples and involutions ({box_cases} boxcomp cases)", failures, start, None)


def test_criterion_4_diagrams():
    start, failures = time.perf_counter(), []
    counts = []
    for n, d in NAIMARK_DOMAINS:
        rect = list(enumerate_tableaux((n,) * d, (d,) * n))
        good = sum(verify_naimark_diagram(t, n, d) for t in rect)
        counts.append(f"N({n},{d}) {good}/{len(rect)}")
        if good != len(rect) or not rect:
            failures.append(f"Naimark diagram fails for (n,d)=({n},{d})")
    total = good = 0
    for n in range(2, 6):
        for size in range(1, 9):
            for shape in partitions_of(size):
                if len(shape) >= n:
                    continue
                for t in tableaux_of_shape(shape, n):
                    total += 1
                    good += verify_boxcomp_diagram(t, n)
    counts.append(f"boxcomp {good}/{total}")
    if good != total:
        failures.append("boxcomp diagram fails")
    _finish(4, "diagram commutation (" + ", ".join(counts) + ")", failures, start, 60.0)


def test_criterion_5_restriction_to_naimark():
    start, failures = time.perf_counter(), []
    points = list(lattice_points((5, 5, 5, 0, 0), (3,) * 5))
    via_tableaux = {ssyt_to_gt(t, 5) for t in enumerate_tableaux((5, 5, 5), (3,) * 5)}
    if set(points) != via_tableaux:
        failures.append("lattice points and tableaux disagree")
    agree = sum(generalized_complement(p) == naimark_map(p, 5, 3) for p in points)
    if agree != len(points):
        failures.append(f"generalized complement equals Naimark map on {agree} of {len(points)} points")
    _finish(5, "generalized complement restricts to the Naimark map on the (5,3) polytope",
            failures, start, None)


def test_criterion_6_frame_numerics():
    start, failures = time.perf_counter(), []
    phi = read_matrix(FIX / "funtf_3x5.csv")
    table = inner_eigensteps(phi)
    err = max(abs(x - y) for r, e in zip(table.rows, FUNTF_INNER) for x, y in zip(r, e))
    if [len(r) for r in table.rows] != [len(r) for r in FUNTF_INNER] or err > 1e-9:
        failures.append(f"eigenstep error {err:.2e}")
    cleared = clear(table)
    if cleared.ell != 3:
        failures.append(f"ell = {cleared.ell}")
    if cleared.pattern != CLEARED:
        failures.append(f"cleared pattern {cleared.pattern.rows}")
    _finish(6, f"FUNTF eigensteps (max error {err:.1e}) and ell = {cleared.ell}", failures, start, 1.0)


def test_criterion_7_naimark_frame():
    start, failures = time.perf_counter(), []
    phi = read_matrix(FIX / "funtf_3x5.csv")
    psi = naimark_frame(phi, "tight")
    residual = phi.T @ phi + psi.T @ psi - (5 / 3) * np.eye(5)
    norm = float(np.max(np.sum(np.abs(residual), axis=1)))
    if norm > 1e-9:
        failures.append(f"residual {norm:.2e}")
    cleared = clear(inner_eigensteps(psi))
    if cleared.pattern != NAIMARK_OUT:
        failures.append(f"cleared complement {cleared.pattern.rows}")
    _finish(7, f"Naimark frame (shape {psi.shape}, residual {norm:.1e})", failures, start, 1.0)


def test_criterion_8_property_suite():
    start, failures = time.perf_counter(), []
    rng = np.random.default_rng(20240601)
    worst = {"interlace": 0.0, "trace": 0.0, "complement": 0.0}
    for k in range(1000):
        d = int(rng.integers(1, 7))
        n = int(rng.integers(d, 11))
        phi = rng.uniform(-1, 1, size=(d, n))
        norms = np.sum(phi * phi, axis=0)
        inner = inner_eigensteps(phi)
        for table in (inner, outer_eigensteps(phi)):
            if table.monotonicity_defect() > 0:
                failures.append(f"frame {k}: row not weakly decreasing")
            worst["interlace"] = max(worst["interlace"], table.interlacing_defect())
            for i, s in enumerate(table.row_sums(), 1):
                partial = math.fsum(norms[:i])
                worst["trace"] = max(worst["trace"], abs(s - partial) / max(partial, 1e-300))
        psi = naimark_frame(phi, "generalized")
        if psi.shape[0] == 0:
            psi = np.zeros((1, n))
        got = inner_eigensteps(psi).rows
        want = complement_eigensteps(inner).rows
        worst["complement"] = max(worst["complement"],
                                  max(abs(x - y) for a, b in zip(got, want) for x, y in zip(a, b)))
    if worst["interlace"] > 1e-9:
        failures.append(f"interlacing defect {worst['interlace']:.2e}")
    if worst["trace"] > 1e-9:
        failures.append(f"trace identity error {worst['trace']:.2e}")
    if worst["complement"] > 1e-8:
        failures.append(f"complement error {worst['complement']:.2e}")
    summary = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    _finish(8, f"1000 random frames ({summary})", failures[:5], start, 60.0)


def test_criterion_9_enumeration_oracle():
    start, failures = time.perf_counter(), []
    pairs = 0
    for size in range(9):
        weights = set(compositions_of(size))
        weights |= {w for length in range(1, 5) for w in weak_compositions(size, length)}
        for shape in partitions_of(size):
            for w in sorted(weights):
                pairs += 1
                got, want = count_tableaux(shape, w), brute_force_count(shape, w)
                if got != want:
                    failures.append(f"shape {shape} weight {w}: {got} != {want}")
    _finish(9, f"enumeration matches brute force on {pairs} shape/weight pairs", failures[:5], start, 120.0)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in sorted(tests, key=lambda f: int(f.__name__.split("_")[2])):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
