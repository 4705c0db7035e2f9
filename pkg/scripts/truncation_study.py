#!/usr/bin/env python3
"""Truncation-error study for the lattice sums behind G and Psi.

Shows how the plain symmetric truncation converges like log(N)^p / N
and how Richardson extrapolation over doubling cutoffs removes the
algebraic tail.  The reference values come from the independent
Fourier-expansion route.
"""

import argparse

from mesq import fourier_expansion, qseries_eval
from mesq.numeric import EvalContext, mes_trunc, mes_value, richardson
from mesq.mzv import NumericConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--index", default="3,2")
    ap.add_argument("--tau", type=complex, default=1j)
    ap.add_argument("--M", type=int, default=40)
    args = ap.parse_args()

    idx = tuple(int(p) for p in args.index.split(","))
    cfg = NumericConfig(tolerance=1e-7)
    ref = qseries_eval(fourier_expansion(idx).q_series(40), args.tau, cfg)
    print(f"index {idx}, tau = {args.tau}; Fourier reference = {ref:.12f}\n")

    print(f"{'N':>7}  {'plain trunc error':>18}  {'Richardson error':>18}")
    samples = []
    for j in range(6):
        n = 1250 * 2 ** j
        v = mes_trunc(idx, args.tau, args.M, n)
        samples.append(v)
        rich = richardson(samples[-4:]) if len(samples) >= 4 else float("nan")
        rich_err = abs(rich - ref) if rich == rich else float("nan")
        print(f"{n:>7}  {abs(v - ref):>18.3e}  {rich_err:>18.3e}")

    ctx = EvalContext(tau=args.tau, M=args.M, N=10 ** 4)
    print(f"\nmes_value (default context): error "
          f"{abs(mes_value(idx, ctx) - ref):.3e}")


if __name__ == "__main__":
    main()
