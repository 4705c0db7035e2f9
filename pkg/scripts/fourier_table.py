#!/usr/bin/env python3
"""Tabulate Fourier expansions of multiple Eisenstein series on H^2.

For every index with all entries >= 2 up to --max-weight, print the
symbolic expansion in zeta / ghat terms and, optionally, the numeric
value at tau together with the extrapolated lattice sum as a check.
"""

import argparse

from mesq import fourier_expansion, mes_value, qseries_eval
from mesq.numeric import EvalContext
from mesq.mzv import NumericConfig
from mesq.verify import index_words


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=7)
    ap.add_argument("--tau", type=complex, default=1j)
    ap.add_argument("--numeric", action="store_true",
                    help="also evaluate at tau and cross-check the lattice sum")
    ap.add_argument("--nmax", type=int, default=30)
    args = ap.parse_args()

    ctx = EvalContext(tau=args.tau)
    cfg = NumericConfig(tolerance=1e-6)
    for idx in index_words(args.max_weight, min_entry=2):
        fe = fourier_expansion(idx)
        print(f"G{idx}: {fe}")
        if args.numeric:
            qv = qseries_eval(fe.q_series(args.nmax), args.tau, cfg)
            mv = mes_value(idx, ctx)
            print(f"    q-expansion @ tau={args.tau}: {qv:.12f}")
            print(f"    lattice sum (extrapolated):  {mv:.12f}"
                  f"   |diff| = {abs(qv - mv):.2e}")


if __name__ == "__main__":
    main()
