"""Compare the elliptic-logistic characteristic function computed by quadrature
with its even-moment series, once with the 2^(2n) divisor and once with 2^(2n+1).

Only the first agrees; the gap of the second grows with t.
"""

import argparse

import numpy as np

from zetaroutes.distributions import elliptic_cf_quadrature, elliptic_cf_series, elliptic_constant


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--t-max", type=float, default=3.0)
    p.add_argument("--points", type=int, default=13)
    p.add_argument("--terms", type=int, default=40)
    args = p.parse_args()

    c = elliptic_constant()
    print(f"c = {c:.17g}")
    print(f"{'t':>6} {'quadrature':>22} {'gap 2^(2n)':>12} {'gap 2^(2n+1)':>13}")
    for t in np.linspace(0.0, args.t_max, args.points):
        q = elliptic_cf_quadrature(t, c)
        good = elliptic_cf_series(t, c, args.terms)
        bad = elliptic_cf_series(t, c, args.terms, extra_halving=True)
        print(f"{t:>6.2f} {q:>22.17f} {abs(q - good):>12.2e} {abs(q - bad):>13.2e}")


if __name__ == "__main__":
    main()
