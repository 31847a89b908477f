"""Command-line harness.

    vernamsim <command> [--protocol P] [--backend B] [--p BITS] [--r BITS]
              [--n N | --m M] [--trials T] [--seed S] [--output json|text]

Commands: run, enumerate, equiv, attack, rewrite. Every report is a JSON
object carrying ``schema_version``; the schema ships as
``vernamsim/schema/report.schema.json``.

Exit status: 0 success, 1 a check or session failed its postcondition,
2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import numpy as np

from .bits import all_bitstrings, check_bits
from .distributions import total_variation
from .equivalence import (
    EQUIV_TOL,
    MULTIPARTY_BOUND,
    TWO_PARTY_BOUND,
    backend_equivalence,
    describe_multiparty,
    hadamard_rewrite,
)
from .protocols import (
    MAX_ENUM,
    Backend,
    EnumerationBoundError,
    MultipartyConfig,
    TwoPartyConfig,
    eavesdropper_view,
    enumerate_multiparty,
    enumerate_two_party,
    impersonation_attack,
    run_multiparty,
    run_two_party,
    uniform_bits,
)

SCHEMA_VERSION = "1.0"
SCHEMA_PATH = Path(__file__).with_name("schema") / "report.schema.json"
TRANSCRIPT_LIMIT = 100

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vernamsim",
        description="Password protocols on entangled vs classically correlated resources.",
    )
    parser.add_argument("command", choices=["run", "enumerate", "equiv", "attack", "rewrite"])
    parser.add_argument("--protocol", choices=["two_party", "multiparty"], default="two_party")
    parser.add_argument("--backend", choices=["quantum", "classical", "both"], default="both")
    parser.add_argument("--p", dest="p", help="password bits, e.g. 101")
    parser.add_argument("--r", dest="r", help="challenge bits (two_party only)")
    size = parser.add_mutually_exclusive_group()
    size.add_argument("--n", type=int, help="password length (two_party)")
    size.add_argument("--m", type=int, help="number of parties (multiparty)")
    parser.add_argument("--trials", type=int, default=1)
    parser.add_argument("--seed", type=int, help="64-bit unsigned seed; random if omitted")
    parser.add_argument("--output", choices=["json", "text"], default="json")
    return parser


def _resolve(args) -> dict:
    """Validate flags and return the normalized configuration."""
    two_party = args.protocol == "two_party"
    if args.p is not None:
        try:
            check_bits(args.p)
        except ValueError:
            raise UsageError(f"--p must be a string of 0/1 characters, got {args.p!r}")
        if not args.p:
            raise UsageError("--p must not be empty")
    if args.r is not None:
        if not two_party:
            raise UsageError("--r is only valid for --protocol two_party")
        try:
            check_bits(args.r)
        except ValueError:
            raise UsageError(f"--r must be a string of 0/1 characters, got {args.r!r}")
    if two_party and args.m is not None:
        raise UsageError("--m is only valid for --protocol multiparty")
    if not two_party and args.n is not None:
        raise UsageError("--n is only valid for --protocol two_party")

    size = args.n if two_party else args.m
    flag = "--n" if two_party else "--m"
    if size is None and args.p is not None:
        size = len(args.p)
    if size is not None and size < 1:
        raise UsageError(f"{flag} must be positive")
    if args.p is not None and len(args.p) != size:
        raise UsageError(f"--p has {len(args.p)} bits but {flag} is {size}")
    if args.r is not None:
        if size is None:
            size = len(args.r)
        if len(args.r) != size:
            raise UsageError(f"--r has {len(args.r)} bits but {flag} is {size}")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    seed = args.seed
    if seed is not None and not 0 <= seed < 2 ** 64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    if seed is None:
        seed = secrets.randbits(64)
    backends = [Backend.QUANTUM, Backend.CLASSICAL] if args.backend == "both" else [Backend(args.backend)]
    return {"two_party": two_party, "size": size, "flag": flag, "seed": seed, "backends": backends}


def _base_report(args, cfg) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "protocol": args.protocol,
        "backend": args.backend,
        "n": cfg["size"] if cfg["two_party"] else None,
        "m": None if cfg["two_party"] else cfg["size"],
        "p": args.p,
        "r": args.r,
        "seed": cfg["seed"],
    }


def _require(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


def _configs(args, cfg, backend):
    """Configurations named by the flags; sweeps omitted bitstrings."""
    size = _require(cfg["size"], cfg["flag"])
    ps = [args.p] if args.p is not None else list(all_bitstrings(size))
    if cfg["two_party"]:
        rs = [args.r] if args.r is not None else list(all_bitstrings(size))
        return [TwoPartyConfig(p, r, backend) for p in ps for r in rs]
    return [MultipartyConfig(p, backend) for p in ps]


def cmd_run(args, cfg) -> tuple[dict, int]:
    size = _require(cfg["size"], cfg["flag"])
    p = _require(args.p, "--p")
    r = _require(args.r, "--r") if cfg["two_party"] else None
    report = _base_report(args, cfg)
    report["n" if cfg["two_party"] else "m"] = size
    # one child seed per session, backends in fixed order
    seeds = np.random.SeedSequence(cfg["seed"]).spawn(args.trials * len(cfg["backends"]))
    total = args.trials * len(cfg["backends"])
    sessions, accepted, by_backend, transcripts = 0, 0, {}, []
    for b_index, backend in enumerate(cfg["backends"]):
        counts: Counter = Counter()
        ok = 0
        for t in range(args.trials):
            rng = np.random.default_rng(seeds[b_index * args.trials + t])
            if cfg["two_party"]:
                tr = run_two_party(TwoPartyConfig(p, r, backend), rng)
            else:
                tr = run_multiparty(MultipartyConfig(p, backend), rng)
            ok += tr.accepted
            counts[tr.digest()] += 1
            if total <= TRANSCRIPT_LIMIT:
                d = tr.to_dict()
                d["seed"] = cfg["seed"]
                d["session"] = t
                transcripts.append(d)
        sessions += args.trials
        accepted += ok
        by_backend[backend.value] = {
            "sessions": args.trials,
            "accepted": ok,
            "frequencies": {k: counts[k] / args.trials for k in sorted(counts)},
        }
    report.update(
        trials=args.trials,
        sessions=sessions,
        accepted=accepted,
        results=by_backend,
        transcripts=transcripts,
    )
    return report, EXIT_OK if accepted == sessions else EXIT_FAIL


def _dist_json(dist) -> dict:
    out = {}
    for k in sorted(dist):
        key = "|".join(k) if isinstance(k, tuple) else k
        out[key] = dist[k]
    return out


def cmd_enumerate(args, cfg) -> tuple[dict, int]:
    size = _require(cfg["size"], cfg["flag"])
    if size > MAX_ENUM:
        raise EnumerationBoundError(f"{cfg['flag']}={size} exceeds the enumeration bound {MAX_ENUM}")
    report = _base_report(args, cfg)
    results = []
    for backend in cfg["backends"]:
        for config in _configs(args, cfg, backend):
            if cfg["two_party"]:
                dist = enumerate_two_party(config)
                item = {"backend": backend.value, "p": config.password, "r": config.challenge}
            else:
                dist = enumerate_multiparty(config)
                item = {"backend": backend.value, "p": config.password}
            item["distribution"] = _dist_json(dist)
            results.append(item)
    report["results"] = results
    return report, EXIT_OK


def cmd_equiv(args, cfg) -> tuple[dict, int]:
    size = _require(cfg["size"], cfg["flag"])
    bound = TWO_PARTY_BOUND if cfg["two_party"] else MULTIPARTY_BOUND
    if size > bound:
        raise EnumerationBoundError(f"{cfg['flag']}={size} exceeds the equivalence bound {bound}")
    report = _base_report(args, cfg)
    checks = [backend_equivalence(c).to_dict() for c in _configs(args, cfg, Backend.QUANTUM)]
    passed = all(c["passed"] for c in checks)
    report.update(
        checks=checks,
        distance_tv=max(c["distance_tv"] for c in checks),
        tolerance=EQUIV_TOL,
        passed=passed,
    )
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_attack(args, cfg) -> tuple[dict, int]:
    if not cfg["two_party"]:
        raise UsageError("attack is defined for --protocol two_party only")
    size = _require(cfg["size"], cfg["flag"])
    if size > MAX_ENUM:
        raise EnumerationBoundError(f"--n={size} exceeds the enumeration bound {MAX_ENUM}")
    report = _base_report(args, cfg)
    target = Fraction(1, 2 ** size)
    checks = []
    for backend in cfg["backends"]:
        for config in _configs(args, cfg, backend):
            imp = impersonation_attack(config)
            view = eavesdropper_view(config)
            dist = total_variation(view, uniform_bits(size))
            checks.append({
                "backend": backend.value,
                "p": config.password,
                "r": config.challenge,
                "impersonation": float(imp),
                "impersonation_exact": str(imp),
                "eavesdropper": _dist_json(view),
                "distance_tv": dist,
                "passed": imp == target and dist <= EQUIV_TOL,
            })
    passed = all(c["passed"] for c in checks)
    report.update(checks=checks, passed=passed)
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_rewrite(args, cfg) -> tuple[dict, int]:
    if cfg["two_party"]:
        raise UsageError("rewrite is defined for --protocol multiparty only")
    size = _require(cfg["size"], cfg["flag"])
    if size > MAX_ENUM:
        raise EnumerationBoundError(f"--m={size} exceeds the enumeration bound {MAX_ENUM}")
    report = _base_report(args, cfg)
    rewrites = []
    for config in _configs(args, cfg, Backend.QUANTUM):
        item = hadamard_rewrite(describe_multiparty(config)).to_dict()
        item["p"] = config.password
        rewrites.append(item)
    passed = all(r["passed"] for r in rewrites)
    report.update(rewrites=rewrites, passed=passed)
    return report, EXIT_OK if passed else EXIT_FAIL


COMMANDS = {
    "run": cmd_run,
    "enumerate": cmd_enumerate,
    "equiv": cmd_equiv,
    "attack": cmd_attack,
    "rewrite": cmd_rewrite,
}


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(report, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for k in sorted(report):
            v = report[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(report, list):
        for i, v in enumerate(report):
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}- [{i}]")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{report}")
    return "\n".join(lines)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _resolve(args)
        report, status = COMMANDS[args.command](args, cfg)
    except (UsageError, EnumerationBoundError) as exc:
        print(f"vernamsim: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.output == "json":
        stdout.write(render_json(report))
    else:
        stdout.write(render_text(report) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
