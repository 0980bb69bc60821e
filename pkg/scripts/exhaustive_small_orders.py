#!/usr/bin/env python3
"""Sweep every constraint matrix of order <= MAX, construct a witness for each,
and verify it; prints per-order counts and timing."""
import argparse
import time

from zerosum.oracle import enumerate_class
from zerosum.witness import find_witness, verify_witness


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()

    grand_total = 0
    t0 = time.perf_counter()
    for n in range(1, args.max_n + 1):
        total = failures = 0
        tn = time.perf_counter()
        for m in enumerate_class(n):
            total += 1
            if not verify_witness(m, find_witness(m)):
                failures += 1
        grand_total += total
        print(f"n={n}: {total} matrices, {failures} failures, {time.perf_counter() - tn:.2f}s")
    print(f"total: {grand_total} matrices in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
