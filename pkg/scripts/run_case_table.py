#!/usr/bin/env python3
"""Print the per-case bound/identity verification table.

Runs the desk-scale numerical checks behind `hlag verify --suite cases`
and prints one row per check. Exit status 1 if any row fails, so this
can sit in a CI job.

Usage:
    python scripts/run_case_table.py --n-min 8 --n-max 10
    python scripts/run_case_table.py --json > rows.json
"""

import argparse
import dataclasses
import json
import sys

from hlag.verify import verify_cases


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=14)
    ap.add_argument("--restarts", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="emit rows as a JSON array")
    args = ap.parse_args()

    rows = verify_cases(
        n_range=range(args.n_min, args.n_max + 1),
        seed=args.seed,
        restarts=args.restarts,
    )
    if args.json:
        json.dump([dataclasses.asdict(r) for r in rows], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for r in rows:
            status = "ok" if r.passed else "FAIL"
            print(
                f"{r.check_id:<28} {r.family:<10} {r.bound_num}/{r.bound_den:<8} "
                f"{r.computed:.12g}  margin {r.margin:+.3e}  {status}"
            )
        failed = sum(1 for r in rows if not r.passed)
        print(f"passed {len(rows) - failed}/{len(rows)}")
    return 0 if all(r.passed for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
