#!/usr/bin/env python3
"""Run every verification claim and write one JSON report per claim.

Usage:
    python scripts/run_verification.py [--seed N] [--out reports/]

Exit code is the worst claim outcome (0 pass, 1 fail, 2 unresolved).
"""

import argparse
import json
import pathlib
import sys

from rigikit.verify import default_seed, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--out", default="reports")
    args = ap.parse_args()

    seed = default_seed() if args.seed is None else args.seed
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    reports = run_all(seed=seed)
    worst = 0
    for r in reports:
        path = out_dir / f"{r.claim}.json"
        path.write_text(json.dumps(r.to_json(), indent=2, sort_keys=True) + "\n")
        print(f"{r.claim:28s} {r.status:10s} {r.instances:6d} instances "
              f"{r.wall_time_s:8.1f}s  -> {path}")
        worst = max(worst, r.exit_code())
    return worst


if __name__ == "__main__":
    sys.exit(main())
