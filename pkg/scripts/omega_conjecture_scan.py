#!/usr/bin/env python3
"""Compare the single-witness omega test against the full exclusion scan.

The fast test evaluates omega only at the front-filled dim vector of weight
d+1; the conjecture is that it excludes exactly when the full scan does.
This sweep reports any counterexample (none are expected) together with how
often the criterion fires at all.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from srkit.distributions import conjecture_scan, omega_exclusion_scan  # noqa: E402


def shapes_up_to(t_max, n_max):
    out = []

    def rec(prefix, lo):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == t_max:
            return
        for n in range(1, lo + 1):
            rec(prefix + [n], n)

    rec([], n_max)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--t-max", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--m-max", type=int, default=4)
    args = ap.parse_args()

    shapes = shapes_up_to(args.t_max, args.n_max)
    report = conjecture_scan(shapes, qs=args.q,
                             ms=range(1, args.m_max + 1))
    print(f"{report.cases} parameter sets scanned")
    print(f"counterexamples: {list(report.counterexamples)}")
    print(f"closed-form mismatches: {list(report.closed_form_mismatches)}")

    excluded = 0
    for shape in shapes:
        N = sum(shape)
        for q in args.q:
            for m in range(max(shape), args.m_max + 1):
                for d in range(1, N):
                    if omega_exclusion_scan(shape, m, q, d).excluded:
                        excluded += 1
    print(f"{excluded} parameter sets excluded by the full scan")
    return 1 if report.counterexamples else 0


if __name__ == "__main__":
    sys.exit(main())
