#!/usr/bin/env python3
"""Generate pruned random integer sets, extract a zero-sum certificate from each
sum-full one, re-verify it, and cross-check existence with the brute-force
oracle; dumps a reproducer on any failure."""
import argparse
import sys
import time

from zerosum.extractor import extract, verify_certificate
from zerosum.formats import dumps_canonical, instance_to_json
from zerosum.gen import GenConfig, random_sumfull_set
from zerosum.groups import GroupSpec
from zerosum.oracle import brute_force_zero_sum
from zerosum.sumfull import NotSumFull


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--draw", type=int, default=20)
    parser.add_argument("--bound", type=int, default=50)
    args = parser.parse_args()

    spec = GroupSpec(1, ())
    instances = failures = 0
    t0 = time.perf_counter()
    for k in range(args.count):
        cfg = GenConfig(seed=args.seed + k, group=spec, mode="prune_closure",
                        count=args.draw, bound=args.bound)
        inst = random_sumfull_set(cfg)
        if inst is None:
            continue
        instances += 1
        cert = extract(inst)
        bad = isinstance(cert, NotSumFull) or not verify_certificate(cert, inst)
        if not bad and len(inst.elements) <= 20:
            bad = brute_force_zero_sum(inst) is None
        if bad:
            failures += 1
            print("reproducer:", dumps_canonical(instance_to_json(inst)), file=sys.stderr)
    print(f"{args.count} seeds -> {instances} sum-full instances, "
          f"{failures} failures, {time.perf_counter() - t0:.2f}s")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
