#!/usr/bin/env python
"""Run every verification suite back to back and print one line per suite.

Suites that scan claimed-but-false inequalities (prop41, corollary-int,
corollary-ideal, and the exponents>=3 family inside random draws) are
expected to report violations; the counterexamples are the point.

Example:
    python scripts/verify_all.py --seed 0
"""

import argparse
import time

from entropia import laws


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--fast", action="store_true", help="smaller sweep bounds")
    args = parser.parse_args()

    scale = 10 if args.fast else 1
    suites = [
        ("bounds", lambda: laws.sweep_entropy_bounds(10**6 // scale)),
        ("eq-identity", lambda: laws.random_eq_identity(seed=args.seed)),
        ("hbar-additivity", lambda: laws.random_hbar_additivity(seed=args.seed)),
        ("hbar-closed-form", laws.check_hbar_closed_form),
        ("hbar-limit", lambda: laws.check_hbar_limit_monotone(10**6 // scale)),
        ("shannon", laws.check_shannon_identity),
        ("appended", lambda: laws.check_appended_identity(seed=args.seed)),
        ("families", laws.check_family_grids),
        ("exponents-ge3", lambda: laws.random_exponents_ge3_family(seed=args.seed)),
        ("prop41", lambda: laws.random_prop41(seed=args.seed)),
        ("corollary-int", lambda: laws.sweep_corollary_int(10**5 // scale)),
        ("corollary-ideal", lambda: laws.sweep_corollary_ideal()),
        ("splitting", lambda: laws.sweep_splitting(10**4 // scale)),
        ("edivisors", lambda: laws.sweep_edivisor_counts(10**5 // scale)),
        ("ideal-edivisors", lambda: laws.sweep_ideal_edivisor_counts()),
    ]

    any_violations = False
    for name, run in suites:
        start = time.perf_counter()
        summary = run()
        elapsed = time.perf_counter() - start
        status = "ok" if summary.ok else f"{summary.violation_count} violations"
        print(f"{name:<18} {summary.checked:>8} checked  {status:<18} {elapsed:6.2f}s")
        if not summary.ok:
            any_violations = True
            for message in summary.violations[:3]:
                print(f"    {message}")
    return 1 if any_violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
