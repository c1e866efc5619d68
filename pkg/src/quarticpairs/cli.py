"""Command-line front end.

Three subcommands:

  build <file>                 construct the tables for one pair (JSON in,
                               JSON report out, exit 0 iff all checks pass)
  verify --suite=NAME          run the symbolic identity suites
                               (universal, cech, or all)
  scan --bound=N --count=N --seed=N [--with-spectrum]
                               sample pairs and stream one CSV record each

Scan sampling uses Python's random.Random (Mersenne Twister), drawing the
twelve coefficients a11, a22, a33, a12, a13, a23, b11, ..., b23 in that
order per pair, so a fixed seed reproduces the byte-identical stream on
any platform.  count=0 instead walks the whole box [-bound, bound]^12 in
lexicographic order.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cech, oracle, universal
from .forms import (disc_binary_cubic, pair_from_json_dict,
                    pair_to_json_dict, resolvent_cubic_form)
from .rings import (check_associativity, check_resolvent_identity,
                    cubic_ring_from_binary_cubic, cubic_table_to_json_dict,
                    quartic_ring_from_pair, quartic_table_to_json_dict,
                    ring_discriminant)

SCAN_COLUMNS = ("a11", "a22", "a33", "a12", "a13", "a23",
                "b11", "b22", "b33", "b12", "b13", "b23",
                "quartic_disc",
                "res_a", "res_b", "res_c", "res_d",
                "disc_equal", "resolvent_identity")

# serial below this many records; the pool only pays off on long scans
_PARALLEL_THRESHOLD = 512


def _encode(v):
    # JSON-safe integers; CSV always goes through str() instead
    from .forms import encode_scalar
    return encode_scalar(v)


def cmd_build(path, stream=None):
    stream = stream or sys.stdout
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"build: cannot read {path}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"build: {path} is not valid JSON "
              f"(line {exc.lineno}, column {exc.colno}): {exc.msg}",
              file=sys.stderr)
        return 2
    try:
        pair = pair_from_json_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"build: {path}: {exc}", file=sys.stderr)
        return 2

    table = quartic_ring_from_pair(pair)
    resolvent = resolvent_cubic_form(pair)
    cubic = cubic_ring_from_binary_cubic(resolvent)
    quartic_disc = ring_discriminant(table)
    cubic_disc = disc_binary_cubic(resolvent)
    checks = {
        "quartic_associative": not check_associativity(table),
        "cubic_associative": not check_associativity(cubic),
        "resolvent_identity": check_resolvent_identity(pair, table),
        "disc_equality": quartic_disc == cubic_disc,
    }
    report = {
        "pair": pair_to_json_dict(pair),
        "quartic": quartic_table_to_json_dict(table),
        "cubic": cubic_table_to_json_dict(cubic),
        "resolvent": [_encode(c) for c in resolvent.coefficients()],
        "quartic_disc": _encode(quartic_disc),
        "resolvent_disc": _encode(cubic_disc),
        "checks": checks,
    }
    print(json.dumps(report, indent=2), file=stream)
    return 0 if all(checks.values()) else 1


def _verify_universal(stream):
    failed = []
    try:
        results = universal.verify_universal_identities()
    except universal.VerificationFailure as exc:
        print(f"universal {exc.identity}: FAIL ({exc.first_diff})",
              file=stream)
        return [exc.identity]
    mode = results.pop("disc_equality_mode", None)
    for name, status in results.items():
        suffix = f" ({mode})" if name == "disc_equality" and mode else ""
        print(f"universal {name}: {status}{suffix}", file=stream)
        if status != "pass":
            failed.append(name)
    return failed


def _verify_cech(stream):
    failed = []

    def emit(name, ok, detail=""):
        print(f"cech {name}: {'pass' if ok else 'FAIL'}"
              + (f" ({detail})" if detail else ""), file=stream)
        if not ok:
            failed.append(name)

    emit("h_expansions", cech.verify_h_expansion())
    lemma_ok = all(cech.verify_lemma_identity(m, n)
                   for m, n in ((1, 3), (2, 2), (3, 1),
                                (1, 4), (2, 3), (3, 2), (4, 1)))
    emit("lemma_identity", lemma_ok)
    relations = cech.verify_h_f_relations()
    bad = [k for k, v in relations.items() if not v]
    emit("h_f_relations", not bad, ", ".join(bad))
    cells = cech.verify_generator_table()
    bad = [c["row"] for c in cells if c["status"] != "pass"]
    emit("generator_table", not bad, ", ".join(bad))
    report = cech.verify_connecting_chart()
    bad = [r["row"] for r in report if r["status"] not in ("pass", "misprint")]
    noted = sum(1 for r in report if r["status"] == "misprint")
    emit("connecting_chart", not bad,
         ", ".join(bad) if bad else f"{noted} recorded misprints")
    mutations = cech.run_mutation_suite()
    missed = [name for name, caught in mutations.items() if not caught]
    emit("mutation_sensitivity", not missed,
         f"caught {len(mutations)}" if not missed
         else "missed: " + ", ".join(missed))
    return failed


def cmd_verify(suite, stream=None):
    stream = stream or sys.stdout
    if suite not in ("universal", "cech", "all"):
        print(f"verify: unknown suite {suite!r} "
              "(expected universal, cech, or all)", file=sys.stderr)
        return 2
    failed = []
    if suite in ("universal", "all"):
        failed += _verify_universal(stream)
    if suite in ("cech", "all"):
        failed += _verify_cech(stream)
    return 0 if not failed else 1


def _scan_record(task):
    coeffs, with_spectrum = task
    pair = pair_from_json_dict({"A": list(coeffs[:6]), "B": list(coeffs[6:])})
    table = quartic_ring_from_pair(pair)
    resolvent = resolvent_cubic_form(pair)
    disc = ring_discriminant(table)
    row = [str(c) for c in coeffs]
    row.append(str(disc))
    row.extend(str(c) for c in resolvent.coefficients())
    row.append(str(disc == disc_binary_cubic(resolvent)).lower())
    row.append(str(check_resolvent_identity(pair, table)).lower())
    if with_spectrum:
        try:
            row.append(str(oracle.verify_spectrum(pair)).lower())
        except oracle.Degenerate:
            row.append("skip")
        except oracle.ToleranceNotMet:
            row.append("false")
    return row


def _scan_tasks(bound, count, seed, with_spectrum):
    if count == 0:
        box = itertools.product(range(-bound, bound + 1), repeat=12)
        return ((coeffs, with_spectrum) for coeffs in box)
    rng = random.Random(seed)
    return (
        (tuple(rng.randint(-bound, bound) for _ in range(12)), with_spectrum)
        for _ in range(count))


def cmd_scan(bound, count, seed, with_spectrum=False, workers=None,
             stream=None):
    if bound < 1:
        print("scan: bound must be >= 1", file=sys.stderr)
        return 2
    if count < 0:
        print("scan: count must be >= 0", file=sys.stderr)
        return 2
    stream = stream or sys.stdout
    writer = csv.writer(stream, lineterminator="\n")
    columns = SCAN_COLUMNS + (("spectrum",) if with_spectrum else ())
    writer.writerow(columns)
    tasks = _scan_tasks(bound, count, seed, with_spectrum)
    parallel = (workers or 0) > 1 or (
        workers is None and count >= _PARALLEL_THRESHOLD)
    if parallel:
        # order is preserved by map, so the stream stays deterministic
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for row in pool.map(_scan_record, tasks, chunksize=64):
                writer.writerow(row)
    else:
        for task in tasks:
            writer.writerow(_scan_record(task))
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="quarticpairs",
        description="Quartic rings from pairs of ternary quadratic forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct tables for one pair")
    p_build.add_argument("file", help="path to a pair JSON file")

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("universal", "cech", "all"))

    p_scan = sub.add_parser("scan", help="stream CSV over sampled pairs")
    p_scan.add_argument("--bound", type=int, required=True,
                        help="coefficients drawn from [-bound, bound]")
    p_scan.add_argument("--count", type=int, required=True,
                        help="records to emit; 0 walks the whole box")
    p_scan.add_argument("--seed", type=int, required=True)
    p_scan.add_argument("--with-spectrum", action="store_true",
                        dest="with_spectrum")

    args = parser.parse_args(argv)
    if args.command == "build":
        return cmd_build(args.file)
    if args.command == "verify":
        return cmd_verify(args.suite)
    return cmd_scan(args.bound, args.count, args.seed, args.with_spectrum)


if __name__ == "__main__":
    sys.exit(main())
