"""Command line interface.

Exit codes: 0 = success / conclusive, 2 = completed but inconclusive,
1 = usage or input error. JSON output follows a fixed envelope
{"schema": 1, "command": ..., "input": ..., "result": ...} with every
integer serialized as a decimal string (values routinely exceed 64-bit
ranges). Scan output is a pure function of (lo, hi, effort): identical
bytes across reruns and worker counts.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import verdict as verdict_mod
from .discriminant import RESULTANT_CAP, discriminant_report, norm_sequence
from .errors import PreconditionError, ResourceLimitError
from .factor import EFFORT_PRESETS, Effort
from .orbit import constant_terms, tower_strict, valuation_profile
from .residue import (
    PEPIN_CAP,
    fermat_mod_pattern,
    fermat_number,
    known_fermat_primes,
    nonresidue_37_check,
)
from .verdict import (
    THEOREM_APPLIES,
    constructible_order,
    cos_minpoly,
    jr_verdict,
    nested_radical_check,
    nu7_exploration,
    reduce_m,
    window_elements_deg2,
)
from .wreath import agemo_rank, closure_order, count_index2_subgroups, minimal_generators

SCHEMA_VERSION = 1
CSV_HEADER = "nu,conclusion,scope,jr_upper_decimal,flags"


class _Parser(argparse.ArgumentParser):
    """argparse whose usage failures exit 1 (2 means 'inconclusive' here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _stringify(obj):
    """Copy a JSON-able structure with all ints rendered as decimal strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_stringify(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, frozenset):
        return [_stringify(x) for x in sorted(obj)]
    return obj


def canonical_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":"))


def _emit(args, command: str, input_doc: dict, result: dict, human: str) -> None:
    if args.json:
        doc = {
            "schema": SCHEMA_VERSION,
            "command": command,
            "input": _stringify(input_doc),
            "result": _stringify(result),
        }
        print(canonical_json(doc))
    else:
        print(human)


def _effort(args) -> Effort:
    return EFFORT_PRESETS[args.effort]


# ---------------------------------------------------------------------------
# verify


def _render_verdict(report) -> str:
    lines = [f"JR verdict for nu = {report.nu} (depth {report.depth})"]
    params = report.hypothesis.params
    lines.append(
        f"  decomposition: nu = 2^{params.two_adic_valuation} * {params.mu}"
        f"{' (perfect square)' if params.is_square else ''}"
    )
    for name, ok in report.hypothesis.clauses:
        mark = "pass" if ok else "FAIL"
        lines.append(f"  [{mark}] {name}")
    if report.hypothesis.scope:
        basis = report.hypothesis.residue.kernel_basis
        via = f" via square-free kernel {basis}" if basis else ""
        lines.append(f"  residue scope: {report.hypothesis.scope}{via}")
    if report.hypothesis.failed_prime:
        lines.append(f"  smallest violating Fermat prime: {report.hypothesis.failed_prime}")
    lines.append(
        f"  tower strict to depth {report.depth}: "
        + ("yes" if report.strict else f"no (c_{report.strict_witness} is a square)")
    )
    lines.append(
        "  sqrt(2) exclusion: "
        + ("certified" if report.sqrt2.certified else f"not certified ({report.sqrt2.reason})")
    )
    if report.sqrt2.mu_not_squarefree:
        lines.append("  note: odd part of nu is not square-free (uncharted territory flag)")
    for ob in report.obstructions:
        detail = "" if ob.status == "excluded" else f" ({ob.reason})"
        lines.append(f"  Fermat prime {ob.p}: {ob.status}{detail}")
    lines.append(f"  alpha = {report.alpha} = {report.alpha.decimal(6)}")
    lines.append(
        f"  JR upper bound ceil(alpha) + alpha = {report.jr_upper} "
        f"= {report.jr_upper.decimal(6)}"
    )
    lines.append(f"  conclusion: {report.conclusion}")
    for reason in report.reasons:
        lines.append(f"    - {reason}")
    for statement in report.statements:
        lines.append(f"    * {statement}")
    if report.finite_scope_caveat:
        lines.append(
            "  caveat: residue certificate covers the known Fermat primes only"
        )
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    report = jr_verdict(args.nu, depth=args.depth, effort=_effort(args))
    _emit(
        args,
        "verify",
        {"nu": args.nu, "depth": args.depth, "effort": args.effort},
        report.to_json(),
        _render_verdict(report),
    )
    return 0 if report.conclusive else 2


# ---------------------------------------------------------------------------
# scan


def _scan_record(nu: int, depth: int, effort: Effort) -> dict:
    report = jr_verdict(nu, depth=depth, effort=effort)
    flags = []
    if report.finite_scope_caveat:
        flags.append("finite-scope-caveat")
    if report.sqrt2.certified and report.sqrt2.mu_not_squarefree:
        flags.append("mu-not-squarefree")
    if report.conclusion != THEOREM_APPLIES:
        flags.extend(
            reason.replace(",", ";").replace(" ", "_") for reason in report.reasons
        )
    return {
        "nu": nu,
        "conclusion": report.conclusion,
        "scope": report.hypothesis.scope or "none",
        "jr_upper_decimal": report.jr_upper.decimal(6),
        "flags": "|".join(flags),
    }


def _record_to_csv(rec: dict) -> str:
    return (
        f"{rec['nu']},{rec['conclusion']},{rec['scope']},"
        f"{rec['jr_upper_decimal']},{rec['flags']}"
    )


def _cmd_scan(args) -> int:
    lo, hi = args.lo, args.hi
    if lo < 2 or hi < lo:
        print("scan range must satisfy 2 <= lo <= hi", file=sys.stderr)
        return 1
    effort = _effort(args)
    done: dict[int, dict] = {}
    journal = None
    if args.out:
        journal_path = args.out + ".partial"
        if os.path.exists(journal_path):
            with open(journal_path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    # A crash mid-write can truncate the final line; skip
                    # anything that does not parse as a complete entry.
                    try:
                        entry = json.loads(line)
                        rec = entry["record"]
                        rec["nu"] = int(rec["nu"])
                    except (ValueError, KeyError, TypeError):
                        continue
                    done[rec["nu"]] = rec
        journal = open(journal_path, "a", encoding="utf-8")

    todo = [nu for nu in range(lo, hi + 1) if nu not in done]
    try:
        if args.workers > 1:
            with ThreadPoolExecutor(max_workers=args.workers) as pool:
                for nu, rec in zip(todo, pool.map(
                    lambda v: _scan_record(v, args.depth, effort), todo
                )):
                    done[nu] = rec
                    if journal:
                        journal.write(json.dumps(
                            {"record": rec, "ts": time.time()}) + "\n")
                        journal.flush()
        else:
            for nu in todo:
                rec = _scan_record(nu, args.depth, effort)
                done[nu] = rec
                if journal:
                    journal.write(json.dumps({"record": rec, "ts": time.time()}) + "\n")
                    journal.flush()
    finally:
        if journal:
            journal.close()

    records = [done[nu] for nu in sorted(done) if lo <= nu <= hi]
    csv_lines = [CSV_HEADER] + [_record_to_csv(r) for r in records]
    csv_text = "\n".join(csv_lines) + "\n"

    if args.out:
        tmp = args.out + ".tmp"
        with open(tmp, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv_text)
        os.replace(tmp, args.out)
        os.remove(args.out + ".partial")

    if args.json:
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "scan",
            "input": _stringify({"lo": lo, "hi": hi, "depth": args.depth,
                                 "effort": args.effort}),
            "result": _stringify({"records": records}),
        }
        print(canonical_json(doc))
    elif not args.out:
        sys.stdout.write(csv_text)
    else:
        print(f"wrote {len(records)} records to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# remaining subcommands


def _cmd_disc(args) -> int:
    report = discriminant_report(args.nu, args.n)
    result = {
        "disc": report.disc,
        "oracle": report.oracle,
        "norms": list(report.norms),
        "oracle_ran": report.oracle is not None,
    }
    lines = [f"disc(x_{args.n}) over nu = {args.nu}: {report.disc}"]
    if report.oracle is not None:
        lines.append(f"  resultant oracle agrees: {report.oracle}")
    else:
        lines.append(f"  resultant oracle skipped (n > {RESULTANT_CAP})")
    lines.append("  norm ladder: " + ", ".join(str(x) for x in report.norms))
    _emit(args, "disc", {"nu": args.nu, "n": args.n}, result, "\n".join(lines))
    return 0


def _cmd_orbit(args) -> int:
    seq = constant_terms(args.nu, args.n)
    strict = tower_strict(args.nu, args.n)
    profiles = {}
    for p in (2, 3, 5, 7, 11, 13):
        prof = valuation_profile(args.nu, p, args.n)
        if prof.first_index is not None:
            profiles[p] = {
                "first_index": prof.first_index,
                "e": prof.e,
                "valuations": list(prof.valuations),
            }
    result = {
        "c": list(seq.c),
        "ell": list(seq.ell),
        "strict": strict.strict,
        "strict_witness": strict.witness,
        "valuation_profiles": profiles,
    }
    lines = [f"orbit constants for nu = {args.nu}:"]
    for i, (c, ell) in enumerate(zip(seq.c, seq.ell), start=1):
        lines.append(f"  c_{i} = {c}   ell_{i} = {ell}")
    lines.append(
        "  strict: " + ("yes" if strict.strict else f"no (c_{strict.witness} square)")
    )
    for p, prof in profiles.items():
        lines.append(
            f"  v_{p}: first index {prof['first_index']}, e = {prof['e']}, "
            f"profile {prof['valuations']}"
        )
    _emit(args, "orbit", {"nu": args.nu, "n": args.n}, result, "\n".join(lines))
    return 0


def _cmd_group(args) -> int:
    gens = minimal_generators(args.n)
    order = closure_order(gens)
    rank = agemo_rank(args.n)
    count = count_index2_subgroups(args.n)
    result = {
        "depth": args.n,
        "order": order,
        "generator_count": len(gens),
        "agemo_rank": rank,
        "index2_subgroups": count,
    }
    human = (
        f"iterated wreath product at depth {args.n}: order {order} = 2^{2**args.n - 1}\n"
        f"  minimal generators: {len(gens)}\n"
        f"  rank of G / G^2[G,G]: {rank}\n"
        f"  index-2 subgroups: {count} = 2^{rank} - 1"
    )
    _emit(args, "group", {"n": args.n}, result, human)
    return 0


def _cmd_fermat(args) -> int:
    rows = []
    for k in range(PEPIN_CAP + 1):
        fn = fermat_number(k)
        row = {"index": k, "primality": fn.primality}
        if k <= 4:
            row["value"] = fn.value
        if 1 <= k:
            mod7, mod3 = fermat_mod_pattern(k)
            row["mod7"], row["mod3"] = mod7, mod3
        rows.append(row)
    checks = {
        str(p): dict(zip(("three", "seven"), nonresidue_37_check(p)))
        for p in known_fermat_primes()
        if p > 3
    }
    result = {"numbers": rows, "nonresidue_checks": checks}
    lines = ["Fermat numbers through the Pepin cap:"]
    for row in rows:
        extra = f" mod7={row.get('mod7')} mod3={row.get('mod3')}" if "mod7" in row else ""
        lines.append(f"  F_{row['index']}: {row['primality']}{extra}")
    lines.append("3 and 7 are non-residues modulo every known Fermat prime > 3: "
                 + ("yes" if all(all(v.values()) for v in checks.values()) else "NO"))
    _emit(args, "fermat", {}, result, "\n".join(lines))
    return 0


def _cmd_cos(args) -> int:
    poly = cos_minpoly(args.m)
    decomp = constructible_order(args.m, _effort(args))
    result = {
        "m": args.m,
        "minpoly_ascending": poly,
        "degree": len(poly) - 1,
        "constructible": decomp.constructible,
        "two_exponent": decomp.two_exponent,
        "odd_primes": [[p, e] for p, e in decomp.odd_primes],
    }
    if decomp.constructible:
        result["components"] = reduce_m(args.m, _effort(args))
    lines = [
        f"2cos(2*pi/{args.m}): minimal polynomial degree {len(poly) - 1}",
        "  coefficients (ascending): " + ", ".join(str(c) for c in poly),
        f"  constructible order: {decomp.constructible}",
    ]
    if decomp.constructible:
        lines.append("  components: " + " * ".join(str(x) for x in result["components"]))
    _emit(args, "cos", {"m": args.m}, result, "\n".join(lines))
    if decomp.constructible is None:
        return 2
    return 0


def _cmd_explore7(args) -> int:
    report = nu7_exploration(args.depth, _effort(args))
    result = {
        "depth": report.depth,
        "constants": list(report.constants),
        "factor_status": list(report.factor_status),
        "independence": report.independence,
        "rank": report.rank,
        "sqrt2_status": report.sqrt2_status,
        "disclaimer": report.disclaimer,
    }
    lines = [f"nu = 7 exploration to depth {report.depth}:"]
    for i, (c, st) in enumerate(zip(report.constants, report.factor_status), start=1):
        lines.append(f"  c_{i} = {c} [{st}]")
    lines.append(f"  2-independence: {report.independence}"
                 + (f" (rank {report.rank})" if report.rank is not None else ""))
    lines.append(f"  sqrt(2) in level {report.depth}: {report.sqrt2_status}")
    lines.append(f"  {report.disclaimer}")
    _emit(args, "explore7", {"depth": args.depth}, result, "\n".join(lines))
    has_unknown = (
        report.independence == "unknown"
        or report.sqrt2_status == "unknown"
        or any(st != "complete" for st in report.factor_status)
    )
    return 2 if has_unknown else 0


def _cmd_window(args) -> int:
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        print(f"invalid window bound: {args.t!r}", file=sys.stderr)
        return 1
    elements = window_elements_deg2(args.nu, t, args.height)
    result = {
        "nu": args.nu,
        "t": str(t),
        "height": args.height,
        "elements": [[a, b] for a, b in elements],
        "count": len(elements),
    }
    lines = [
        f"degree <= 2 elements a + b*sqrt({args.nu}) with conjugates in (0, {t}):"
    ]
    for a, b in elements:
        lines.append(f"  ({a}, {b})")
    lines.append(f"  total: {len(elements)}")
    _emit(args, "window", {"nu": args.nu, "t": str(t), "height": args.height},
          result, "\n".join(lines))
    return 0


def _cmd_radical(args) -> int:
    ok = nested_radical_check(args.d)
    result = {"d": args.d, "verified": ok}
    human = (
        f"2cos(2*pi/2^{args.d + 1}) equals the {args.d - 1}-fold nested radical "
        f"sqrt(2 + sqrt(2 + ...)): verified"
    )
    _emit(args, "radical", {"d": args.d}, result, human)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jrtower", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    common.add_argument("--depth", type=int, default=5,
                        help="tower depth for verdicts (default 5)")
    common.add_argument("--effort", choices=sorted(EFFORT_PRESETS), default="default",
                        help="factorization budget preset")
    common.add_argument("--seedless", action="store_true", default=True,
                        help="deterministic mode (always on; flag kept for scripts)")
    common.add_argument("--out", help="output file (scan: CSV with resume journal)")
    common.add_argument("--workers", type=int, default=1,
                        help="worker threads for scan (default 1)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="full JR verdict for one nu")
    p.add_argument("nu", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="verdict records for a range")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("disc", parents=[common],
                       help="discriminant with oracle and norm ladder")
    p.add_argument("nu", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_disc)

    p = sub.add_parser("orbit", parents=[common],
                       help="orbit constants, strictness, valuation profiles")
    p.add_argument("nu", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("group", parents=[common],
                       help="wreath product order, rank, subgroup count")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("fermat", parents=[common],
                       help="Pepin table and non-residue checks")
    p.set_defaults(func=_cmd_fermat)

    p = sub.add_parser("cos", parents=[common],
                       help="cosine minimal polynomial and constructibility")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_cos)

    p = sub.add_parser("explore7", parents=[common],
                       help="square-class evidence for the open case nu = 7")
    p.set_defaults(func=_cmd_explore7)

    p = sub.add_parser("window", parents=[common],
                       help="degree <= 2 totally positive elements under t")
    p.add_argument("nu", type=int)
    p.add_argument("t", help="window bound (integer or fraction like 15/2)")
    p.add_argument("height", type=int, help="bound on the sqrt coefficient")
    p.set_defaults(func=_cmd_window)

    p = sub.add_parser("radical", parents=[common],
                       help="verify the nested-radical cosine identity")
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_radical)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, PreconditionError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
