"""Monte Carlo moments and KS tests for the three logistic-type laws."""

import argparse
import time

from zetaroutes.distributions import Kind, ks_test, make_distribution, mc_moment, moment


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-order", type=int, default=4)
    args = p.parse_args()

    print(f"{'law':<18} {'k':>2} {'estimate':>14} {'target':>14} {'z':>7}")
    for kind in Kind:
        spec = make_distribution(kind)
        start = time.perf_counter()
        for k in range(1, args.max_order + 1):
            est = mc_moment(spec, k, args.seed, args.n)
            target = moment(spec, k)
            z = (est.mean - target) / est.stderr
            print(f"{kind.value:<18} {k:>2} {est.mean:>14.8f} {target:>14.8f} {z:>7.2f}")
        ks = ks_test(spec, args.seed, args.n)
        elapsed = time.perf_counter() - start
        print(f"{kind.value:<18} KS D = {ks.statistic:.2e}, p = {ks.pvalue:.3f}  ({elapsed:.2f} s)\n")


if __name__ == "__main__":
    main()
