"""Property sweep over random frames: interlacing, partial traces, generalized complements."""

import argparse
import math
import time

import numpy as np

from framesteps.spectral import complement_eigensteps, inner_eigensteps, naimark_frame, outer_eigensteps


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-d", type=int, default=6)
    parser.add_argument("--max-n", type=int, default=10)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    worst_interlace = worst_trace = worst_complement = 0.0
    start = time.perf_counter()
    for _ in range(args.count):
        d = int(rng.integers(1, args.max_d + 1))
        n = int(rng.integers(d, args.max_n + 1))
        phi = rng.uniform(-1, 1, size=(d, n))
        norms = np.sum(phi * phi, axis=0)
        inner = inner_eigensteps(phi)
        for table in (inner, outer_eigensteps(phi)):
            worst_interlace = max(worst_interlace, table.interlacing_defect())
            for i, s in enumerate(table.row_sums(), 1):
                partial = math.fsum(norms[:i])
                worst_trace = max(worst_trace, abs(s - partial) / partial)
        psi = naimark_frame(phi, "generalized")
        if psi.shape[0]:
            got = inner_eigensteps(psi).rows
            want = complement_eigensteps(inner).rows
            worst_complement = max(worst_complement,
                                   max(abs(x - y) for a, b in zip(got, want) for x, y in zip(a, b)))
    print(f"{args.count} frames in {time.perf_counter() - start:.1f}s")
    print(f"worst interlacing defect      {worst_interlace:.2e}")
    print(f"worst relative trace error    {worst_trace:.2e}")
    print(f"worst complement discrepancy  {worst_complement:.2e}")


if __name__ == "__main__":
    main()
