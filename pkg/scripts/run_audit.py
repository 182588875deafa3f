"""Random-state audit of the negativity orderings and the monogamy bound.

Checks, over Haar-random pure states:
  n_global >= e_partial[2]      (two-way channel never exceeds the total)
  n_global >= e_partial[3]      (same for the three-way channel)
  tau_focus >= sum of pair tangles   (monogamy, 3 qubits only)

Exit status 1 if any violation shows up.
"""

import argparse
import sys
import time

import ktangle as kt


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--states", type=int, default=2000)
    ap.add_argument("--qubits", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    layout = kt.qubit_layout(args.qubits)
    import numpy as np

    rng = np.random.default_rng(args.seed)
    slack = 1e-10  # orderings hold up to eigensolver noise
    viol = 0
    t0 = time.perf_counter()
    for i in range(args.states):
        psi = kt.haar_random_pure(layout, rng)
        rep = kt.negativity_report(kt.outer(psi), i % args.qubits)
        if any(rep.e_partial[k] > rep.n_global + slack for k in rep.e_partial):
            viol += 1
        if args.qubits == 3:
            tan = kt.three_tangle(psi, i % 3)
            if sum(tan.tau_pairs.values()) > tan.tau_focus + slack:
                viol += 1
    dt = time.perf_counter() - t0

    print(f"{args.states} states, {args.qubits} qubits, seed {args.seed}: "
          f"{viol} violations ({dt:.2f}s, {1e3 * dt / args.states:.2f} ms/state)")
    return 1 if viol else 0


if __name__ == "__main__":
    sys.exit(main())
