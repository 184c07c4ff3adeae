#!/usr/bin/env python3
"""Run the full exact verification suite over the default lattice corpus."""

import sys

from totlat.checks import run_suite


def main():
    reports = run_suite(seed=0)
    failed = 0
    for r in reports:
        extra = f" ({r.note})" if r.note else ""
        print(f"[{r.status:7s}] {r.name:22s} {r.lattice}{extra}  [{r.elapsed:.2f}s]")
        if r.status == "fail":
            failed += 1
            print(f"          counterexample: {r.counterexample}")
    print(f"\n{len(reports)} checks, {failed} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
