"""Certify the wave-graph basis over a range of (n, m) and print a summary table.

    python scripts/certify_table.py --max-n 4 --max-m 8 --oracle
"""

import argparse
import time

from wavebasis.verify import DEFAULT_BUDGET, certify


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--oracle", action="store_true", help="include the brute-force dimension oracle")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args()

    print(f"{'n':>2} {'m':>3} {'dim':>5} {'oracle':>6} {'det':>4} {'verdict':>7} {'secs':>7}")
    for n in range(2, args.max_n + 1):
        for m in range(0, args.max_m + 1, n):
            use_oracle = args.oracle and n ** m <= args.budget
            start = time.perf_counter()
            cert = certify(n, m, oracle=use_oracle, budget=args.budget)
            secs = time.perf_counter() - start
            ind = cert.section("independence").details
            oracle = cert.section("spanning").details["oracle_dimension"] if use_oracle else "-"
            verdict = "pass" if cert.passed else "FAIL"
            print(f"{n:>2} {m:>3} {ind['size']:>5} {oracle!s:>6} {ind['determinant']:>4} {verdict:>7} {secs:7.2f}")


if __name__ == "__main__":
    main()
