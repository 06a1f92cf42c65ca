"""Walk the 3x5 unit-norm tight frame fixture through every layer of the package."""

import argparse
from pathlib import Path

import numpy as np

from framesteps.bridge import gt_to_skew, gt_to_ssyt
from framesteps.formats import read_matrix
from framesteps.gt import generalized_complement, naimark_map
from framesteps.render import render
from framesteps.spectral import clear, frame_report, inner_eigensteps, naimark_frame, outer_eigensteps
from framesteps.tableaux import gamma_complement

DEFAULT = Path(__file__).resolve().parent.parent / "fixtures" / "funtf_3x5.csv"


def show_table(title, table):
    print(title)
    for row in table.rows:
        print("  " + "  ".join(f"{x:8.5f}" for x in row))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("matrix", nargs="?", default=str(DEFAULT))
    args = parser.parse_args()

    phi = read_matrix(args.matrix)
    d, n = phi.shape
    report = frame_report(phi)
    print(f"frame: {d} x {n}, bounds [{report.lower:.6f}, {report.upper:.6f}], tight={report.tight}")

    inner, outer = inner_eigensteps(phi), outer_eigensteps(phi)
    show_table("inner eigensteps", inner)
    show_table("outer eigensteps", outer)

    c_in, c_out = clear(inner), clear(outer)
    print(f"\nclearing constant ell = {c_in.ell}")
    print(render(c_in.pattern))
    t = gt_to_ssyt(c_in.pattern)
    print("\nstraight tableau\n" + render(t))
    print("\nskew tableau from the outer eigensteps\n" + render(gt_to_skew(c_out.pattern)))

    psi = naimark_frame(phi)
    residual = phi.T @ phi + psi.T @ psi - report.upper * np.eye(n)
    print(f"\nNaimark complement: {psi.shape[0]} x {n}, residual {np.max(np.abs(residual)):.1e}")
    c_psi = clear(inner_eigensteps(psi))
    print(render(c_psi.pattern))

    cleared = c_in.pattern
    if cleared.top == (n,) * d + (0,) * (n - d):
        print(f"\nNaimark map of the cleared pattern matches: {naimark_map(cleared, n, d) == c_psi.pattern}")
        print(f"generalized complement matches: {generalized_complement(cleared) == c_psi.pattern}")
        print("gamma complement of the tableau\n" + render(gamma_complement(t, n, d)))


if __name__ == "__main__":
    main()
