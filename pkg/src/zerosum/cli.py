"""Command-line entry point.

Every command reads JSON from --input (a path, or '-' for standard input) and
writes a single JSON document to standard output; diagnostics go to standard
error.  Exit codes: 0 success, 1 malformed input / class violation / failed
verification, 2 not sum-full, 3 budget exceeded, 4 internal verification
failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import IO, Optional

from . import char3, formats, gen, groups
from .errors import (BudgetExceeded, InternalVerificationError, MatrixClassError,
                     NotSumFullError, ShapeMismatch)
from .extractor import extract, verify_certificate
from .formats import FORMAT_VERSION, InputFormatError, dumps_canonical
from .gen import GenConfig, random_matrix, random_set, random_sumfull_set
from .oracle import SearchBudget, brute_force_zero_sum, enumerate_class, row_options
from .sumfull import NotSumFull, check_sum_full
from .witness import find_witness, verify_witness

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_SUM_FULL = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


def _read_json(args, stdin: IO[str]):
    if args.input is None:
        raise InputFormatError("this command needs --input PATH or --input -")
    if args.input == "-":
        text = stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputFormatError(f"cannot read {args.input}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from exc


def _emit(stdout: IO[str], payload: dict) -> None:
    stdout.write(dumps_canonical(payload) + "\n")


def _not_sum_full_payload(verdict: NotSumFull) -> dict:
    return {"format": FORMAT_VERSION, "sum_full": False, "witness_index": verdict.witness_index}


def cmd_check(args, stdin, stdout) -> int:
    a = formats.instance_from_json(_read_json(args, stdin))
    t = check_sum_full(a)
    if isinstance(t, NotSumFull):
        _emit(stdout, _not_sum_full_payload(t))
        return EXIT_NOT_SUM_FULL
    payload = formats.instance_to_json(a)
    payload["sum_full"] = True
    payload["reps"] = [list(pair) for pair in t.reps]
    _emit(stdout, payload)
    return EXIT_OK


def cmd_extract(args, stdin, stdout) -> int:
    a = formats.instance_from_json(_read_json(args, stdin))
    cert = extract(a)
    if isinstance(cert, NotSumFull):
        _emit(stdout, _not_sum_full_payload(cert))
        return EXIT_NOT_SUM_FULL
    _emit(stdout, formats.certificate_to_json(a, cert))
    return EXIT_OK


def cmd_verify(args, stdin, stdout) -> int:
    a, cert = formats.certificate_from_json(_read_json(args, stdin))
    ok = verify_certificate(cert, a)
    _emit(stdout, {"format": FORMAT_VERSION, "valid": ok})
    return EXIT_OK if ok else EXIT_INPUT


def cmd_matrix_witness(args, stdin, stdout) -> int:
    m = formats.matrix_from_json(_read_json(args, stdin))
    w = find_witness(m)
    payload = {"format": FORMAT_VERSION}
    payload.update(formats.witness_to_json(w))
    _emit(stdout, payload)
    return EXIT_OK


def cmd_oracle(args, stdin, stdout) -> int:
    a = formats.instance_from_json(_read_json(args, stdin))
    budget = SearchBudget(time_cap=args.budget) if args.budget else SearchBudget()
    subset = brute_force_zero_sum(a, budget)
    _emit(stdout, {"format": FORMAT_VERSION,
                   "zero_sum_subset": None if subset is None else list(subset)})
    return EXIT_OK


def _enumerate_shard(task: tuple[int, tuple[int, ...], bool]) -> tuple[int, int]:
    n, shard, verify = task
    total = failures = 0
    for m in enumerate_class(n, first_rows=shard):
        total += 1
        if verify:
            if not verify_witness(m, find_witness(m)):
                failures += 1
    return total, failures


def cmd_enumerate(args, stdin, stdout) -> int:
    if args.n is None:
        raise InputFormatError("enumerate needs --n")
    n = args.n
    verify = args.verify_witness
    option_count = len(row_options(n, 0))
    workers = max(1, args.workers)
    if workers == 1:
        results = [_enumerate_shard((n, tuple(range(option_count)), verify))]
    else:
        shards = [tuple(range(k, option_count, workers)) for k in range(workers)]
        tasks = [(n, shard, verify) for shard in shards if shard]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_enumerate_shard, tasks))
    total = sum(r[0] for r in results)
    failures = sum(r[1] for r in results)
    payload = {"format": FORMAT_VERSION, "n": n, "total": total}
    if verify:
        payload["failures"] = failures
    _emit(stdout, payload)
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


def cmd_sidon(args, stdin, stdout) -> int:
    a = formats.instance_from_json(_read_json(args, stdin))
    verdict = char3.is_sidon(list(a.elements), a.spec)
    if verdict is True:
        _emit(stdout, {"format": FORMAT_VERSION, "sidon": True})
    else:
        _emit(stdout, {"format": FORMAT_VERSION, "sidon": False,
                       "quadruple": formats.quadruple_to_json(verdict)})
    return EXIT_OK


def cmd_quadruple(args, stdin, stdout) -> int:
    obj = _read_json(args, stdin)
    a = formats.instance_from_json(obj)
    raw_gens = obj.get("subgroup_generators", [])
    gens = formats.elements_from_json(raw_gens, a.spec)
    h = char3.subgroup_closure(gens, a.spec)
    outcome = char3.chain_extract(a, h)
    _emit(stdout, formats.chain_outcome_to_json(a, outcome))
    return EXIT_OK


def cmd_olson(args, stdin, stdout) -> int:
    obj = _read_json(args, stdin)
    p = formats.require_field(obj, "p", int)
    invariants = formats.require_field(obj, "invariants", list)
    bound = char3.olson_bound(p, [int(x) for x in invariants])
    _emit(stdout, {"format": FORMAT_VERSION, "p": p,
                   "invariants": [int(x) for x in invariants], "bound": bound})
    return EXIT_OK


def cmd_audit3(args, stdin, stdout) -> int:
    a = formats.instance_from_json(_read_json(args, stdin))
    report = char3.audit_char3(a)
    _emit(stdout, formats.report_to_json(report))
    return EXIT_OK


def _gen_config(args, obj: Optional[dict]) -> GenConfig:
    obj = obj or {}
    seed = args.seed if args.seed is not None else int(obj.get("seed", 0))
    mode = getattr(args, "mode", None) or obj.get("mode", "prune_closure")
    group = formats.group_from_json(obj["group"]) if "group" in obj else groups.GroupSpec(1, ())
    count = int(obj.get("count", 20))
    bound = int(obj.get("bound", 50))
    return GenConfig(seed=seed, group=group, mode=mode, count=count, bound=bound)


def cmd_gen(args, stdin, stdout) -> int:
    obj = _read_json(args, stdin) if args.input else None
    cfg = _gen_config(args, obj)
    if cfg.mode == "random_matrix":
        if args.n is None:
            raise InputFormatError("gen --mode random_matrix needs --n")
        m = random_matrix(args.n, cfg.seed)
        _emit(stdout, {"format": FORMAT_VERSION, "matrix": m.tolist()})
        return EXIT_OK
    if cfg.mode == "random_set":
        els = random_set(cfg)
        _emit(stdout, {"format": FORMAT_VERSION, "group": formats.group_to_json(cfg.group),
                       "elements": [groups.coords(x) for x in els]})
        return EXIT_OK
    inst = random_sumfull_set(cfg)
    if inst is None:
        _emit(stdout, {"format": FORMAT_VERSION, "group": formats.group_to_json(cfg.group),
                       "elements": None})
        return EXIT_OK
    _emit(stdout, formats.instance_to_json(inst))
    return EXIT_OK


def _fuzz_shard(task: tuple[dict, tuple[int, ...]]) -> dict:
    cfg_obj, seeds = task
    group = formats.group_from_json(cfg_obj["group"])
    instances = failures = 0
    digest = hashlib.sha256()
    reproducers = []
    for seed in seeds:
        cfg = GenConfig(seed=seed, group=group, mode=cfg_obj["mode"],
                        count=cfg_obj["count"], bound=cfg_obj["bound"])
        inst = random_sumfull_set(cfg)
        if inst is None:
            continue
        instances += 1
        cert = extract(inst)
        if isinstance(cert, NotSumFull) or not verify_certificate(cert, inst):
            failures += 1
            reproducers.append(formats.instance_to_json(inst))
            continue
        digest.update(dumps_canonical(formats.certificate_to_json(inst, cert)).encode())
    return {"runs": len(seeds), "instances": instances, "failures": failures,
            "sha256": digest.hexdigest(), "reproducers": reproducers}


def cmd_fuzz(args, stdin, stdout) -> int:
    obj = _read_json(args, stdin) if args.input else None
    cfg = _gen_config(args, obj)
    if cfg.mode not in ("prune_closure", "full_nonzero"):
        raise InputFormatError("fuzz supports prune_closure and full_nonzero modes")
    runs = args.n if args.n is not None else 100
    seeds = tuple(cfg.seed + k for k in range(runs))
    cfg_obj = {"group": formats.group_to_json(cfg.group), "mode": cfg.mode,
               "count": cfg.count, "bound": cfg.bound}
    workers = max(1, args.workers)
    if workers == 1:
        parts = [_fuzz_shard((cfg_obj, seeds))]
    else:
        chunks = [seeds[k::workers] for k in range(workers)]
        tasks = [(cfg_obj, chunk) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_fuzz_shard, tasks))
    combined = hashlib.sha256()
    for part in parts:
        combined.update(part["sha256"].encode())
    payload = {"format": FORMAT_VERSION,
               "runs": sum(p["runs"] for p in parts),
               "instances": sum(p["instances"] for p in parts),
               "failures": sum(p["failures"] for p in parts),
               "certificates_sha256": combined.hexdigest()}
    reproducers = [r for p in parts for r in p["reproducers"]]
    if reproducers:
        payload["reproducers"] = reproducers
    _emit(stdout, payload)
    return EXIT_OK if not reproducers else EXIT_INTERNAL


COMMANDS = {
    "check": cmd_check,
    "extract": cmd_extract,
    "verify": cmd_verify,
    "matrix-witness": cmd_matrix_witness,
    "oracle": cmd_oracle,
    "enumerate": cmd_enumerate,
    "sidon": cmd_sidon,
    "quadruple": cmd_quadruple,
    "olson": cmd_olson,
    "audit3": cmd_audit3,
    "gen": cmd_gen,
    "fuzz": cmd_fuzz,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zerosum",
                                     description="zero-sum subset certificates for sum-full sets")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default=None, help="input JSON path, or - for stdin")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--budget", type=float, default=None, help="time cap in seconds")
        p.add_argument("--workers", type=int, default=1)
        if name == "enumerate":
            p.add_argument("--verify-witness", action="store_true")
        if name in ("gen", "fuzz"):
            p.add_argument("--mode", default=None, choices=gen.MODES)
    return parser


def dispatch(argv: list[str], *, stdin: Optional[IO[str]] = None,
             stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, stdin, stdout)
    except InputFormatError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except NotSumFullError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NOT_SUM_FULL
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_BUDGET
    except InternalVerificationError as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (MatrixClassError, ShapeMismatch, OverflowError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT


def main(argv: Optional[list[str]] = None) -> None:
    sys.exit(dispatch(sys.argv[1:] if argv is None else argv))
