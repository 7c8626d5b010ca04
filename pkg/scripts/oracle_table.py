"""Brute-force ex(n, H) for small wheel patterns next to the asymptotic
formula values.  Differences at small n are expected.

    python scripts/oracle_table.py [--max-n 9]
"""

import argparse
import time

from wheelturan.detect import parse_pattern
from wheelturan.formulas import ex_even_wheel_mix, ex_m_odd_wheels, ex_odd_wheel
from wheelturan.oracle import brute_force_ex


def formula(n, spec):
    if spec == "W5":
        return ex_odd_wheel(n, 2).value
    if spec == "W7":
        return ex_odd_wheel(n, 3).value
    if spec == "W4":
        return ex_even_wheel_mix(n, 1).value
    if spec == "W6":
        return ex_even_wheel_mix(n, 1).value
    if spec == "W5+W5":
        return ex_m_odd_wheels(n, 2, 2).value if n >= 5 else None
    return None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--patterns", default="W4,W5,W6,W7,W5+W5")
    args = ap.parse_args(argv)
    print(f"{'pattern':8s} {'n':>3s} {'oracle':>7s} {'formula':>8s} {'nodes':>8s} {'sec':>6s}")
    for spec in args.patterns.split(","):
        p = parse_pattern(spec)
        for n in range(4, args.max_n + 1):
            t0 = time.perf_counter()
            r = brute_force_ex(n, p)
            mark = "" if r.exact else " (inexact)"
            print(f"{spec:8s} {n:3d} {r.value:7d} {str(formula(n, spec)):>8s} "
                  f"{r.nodes_explored:8d} {time.perf_counter() - t0:6.2f}{mark}")


if __name__ == "__main__":
    main()
