"""Count integer points of the tight-frame eigenstep polytopes and compare the two complements.

For each (n, d) the polytope's integer points are the d x n rectangular
tableaux with every label used d times. The script checks both enumeration
routes agree, that both commutative diagrams hold, and how often the Naimark
map and the generalized complement coincide.
"""

import argparse
import time

from framesteps.bridge import ssyt_to_gt, verify_naimark_diagram
from framesteps.gt import generalized_complement, lattice_points, naimark_map
from framesteps.tableaux import enumerate_tableaux


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()

    print(f"{'n':>3} {'d':>3} {'points':>8} {'tableaux':>9} {'diagram':>8} {'N = gen':>8} {'secs':>6}")
    for n in range(2, args.max_n + 1):
        for d in range(1, n):
            start = time.perf_counter()
            top = (n,) * d + (0,) * (n - d)
            points = list(lattice_points(top, (d,) * n))
            tabs = list(enumerate_tableaux((n,) * d, (d,) * n))
            same = {ssyt_to_gt(t, n) for t in tabs} == set(points)
            diagram = all(verify_naimark_diagram(t, n, d) for t in tabs)
            agree = sum(naimark_map(p, n, d) == generalized_complement(p) for p in points)
            secs = time.perf_counter() - start
            print(f"{n:>3} {d:>3} {len(points):>8} {len(tabs):>9}{'' if same else '!'} "
                  f"{str(diagram):>8} {agree:>8} {secs:>6.2f}")


if __name__ == "__main__":
    main()
