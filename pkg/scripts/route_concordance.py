"""Print every applicable route for a grid of arguments, with the spread between them."""

import argparse

from zetaroutes import compare_routes
from zetaroutes.routes import applicable_routes


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("s", type=float, nargs="*", default=[0.5, 1.5, 2, 2.5, 3, 4, 5, 7, 10, 20])
    p.add_argument("--tol", type=float, default=1e-10)
    args = p.parse_args()

    print(f"{'s':>6} {'route':<18} {'value':>24} {'abs_error':>10} {'evals':>7}")
    for s in args.s:
        if not applicable_routes(s):
            print(f"{s:>6g} (no applicable route)")
            continue
        rep = compare_routes(s, tol=args.tol)
        for r in rep.results:
            q = r.result
            print(f"{s:>6g} {r.route.value:<18} {q.value:>24.17g} {q.abs_error:>10.2e} {q.evaluations:>7d}")
        verdict = "pass" if rep.passed else "FAIL"
        print(f"{'':>6} max pairwise gap {rep.max_pairwise_gap:.2e} -> {verdict}\n")


if __name__ == "__main__":
    main()
