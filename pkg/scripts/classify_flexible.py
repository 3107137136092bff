#!/usr/bin/env python3
"""Exhaustive flexible-circuit classification runner.

Single-shard by default; --jobs N splits the search into N deterministic
partitions and runs them in parallel processes, merging by canonical code.
The d=4 search space (up to 10 vertices) is much larger and sits behind
--allow-long.

Usage:
    python scripts/classify_flexible.py [--dim 3] [--n-max 9] [--jobs 2]
    python scripts/classify_flexible.py --partition 0/4   # one shard only
"""

import argparse
import concurrent.futures
import json
import sys

from rigikit.verify import classify_flexible_circuits, default_seed


def _run_shard(args):
    d, n_max, seed, shard, shards, allow_long = args
    report, found = classify_flexible_circuits(
        d, n_max, seed=seed, partition=(shard, shards), allow_long=allow_long
    )
    return report.status, found


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", "-d", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=None)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--partition", default=None, metavar="i/m")
    ap.add_argument("--allow-long", action="store_true")
    args = ap.parse_args()

    d = args.dim
    n_max = args.n_max if args.n_max is not None else d + 6
    seed = default_seed() if args.seed is None else args.seed

    if args.partition:
        i, m = (int(x) for x in args.partition.split("/"))
        report, found = classify_flexible_circuits(
            d, n_max, seed=seed, partition=(i, m), allow_long=args.allow_long
        )
        print(json.dumps({"partition": f"{i}/{m}", "status": report.status,
                          "found": found}, sort_keys=True))
        return report.exit_code()

    if args.jobs > 1:
        tasks = [(d, n_max, seed, i, args.jobs, args.allow_long)
                 for i in range(args.jobs)]
        found: set[str] = set()
        statuses = []
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for status, shard_found in pool.map(_run_shard, tasks):
                statuses.append(status)
                found.update(shard_found)
        status = "fail" if "fail" in statuses else (
            "unresolved" if "unresolved" in statuses else "pass")
        print(json.dumps({"status": status, "found": sorted(found)}, sort_keys=True))
        return {"pass": 0, "fail": 1, "unresolved": 2}[status]

    report, found = classify_flexible_circuits(
        d, n_max, seed=seed, allow_long=args.allow_long
    )
    print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
