"""Run every verification suite and write one JSON report per suite plus a CSV summary.

    python3 scripts/verify_all.py --out reports/ [--seed N] [suite ...]
"""

import argparse
import csv
import json
import os

from moonfill.suites import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    ap.add_argument("--out", default="reports")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    rows, ok = [], True
    for name in args.suites:
        rep = run_suite(name, SuiteConfig(seed=args.seed))
        with open(os.path.join(args.out, f"{name}.json"), "w", encoding="utf-8") as fh:
            json.dump(rep.to_dict(), fh, indent=2)
            fh.write("\n")
        rows.append([name, "PASS" if rep.passed else "FAIL", rep.instances, rep.failure_count, f"{rep.wall_time:.2f}"])
        print(rep.to_text(), end="", flush=True)
        ok &= rep.passed
    with open(os.path.join(args.out, "summary.csv"), "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["suite", "status", "instances", "failures", "seconds"])
        w.writerows(rows)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
