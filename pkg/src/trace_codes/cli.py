"""Command-line front door: single verifications, sweeps and oracle suites.

Exit codes: 0 when every verdict matches (warnings allowed), 1 when some CWE
or suite comparison mismatches, 2 for configuration errors (bad parameters,
degenerate codes, no admissible sweep range).  Reports are deterministic:
re-parsing and re-serializing the JSON output is byte identical, and nothing
in a report depends on --threads.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import CodeSpec
from .cwe import (
    closed_terms,
    cwe_brute,
    cwe_closed,
    run_sweep,
    sweep_fields,
    table_closed,
    verify,
    weight_distribution_of,
)
from .errors import ParameterError
from .field import FieldParams, is_prime
from .suites import census_suite, character_suite, coulter_suite, legendre_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _hyphen(comp) -> str:
    return "-".join(str(v) for v in comp)


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trace-codes",
        description="Complete weight enumerators of trace-defined codes over GF(p^e), exact.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_spec=True):
        if with_spec:
            sp.add_argument("--p", type=int, required=True, help="odd prime")
            sp.add_argument("--e", type=int, help="even extension degree")
            sp.add_argument("--alpha", type=int, default=1, help="exponent in x^(p^alpha+1)")
        sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
        sp.add_argument("--out", help="write output to this path instead of stdout")
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("verify", help="verify one (p, e, alpha, a, c) spec")
    common(sp)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--mode", choices=["brute", "closed", "both"], default="both")

    sp = sub.add_parser("sweep", help="verify every admissible spec up to a size bound")
    sp.add_argument("--max-q", type=int, required=True, dest="max_q")
    sp.add_argument("--primes", default="3,5,7", help="comma-separated odd primes")
    common(sp, with_spec=False)

    sp = sub.add_parser("sums", help="run a character-sum oracle suite")
    sp.add_argument("--kind", required=True, choices=["legendre", "gauss", "coulter", "census"])
    common(sp)
    return parser


# ---------------------------------------------------------------------------
# verify


def _mode_report(spec: CodeSpec, mode: str, threads: int) -> tuple[dict, str]:
    if mode == "both":
        report = verify(spec, threads)
        return report.to_json_obj(), report.verdict
    obj = {"params": spec.field.to_json_obj(), "a": spec.a, "c": spec.c, "mode": mode}
    if mode == "brute":
        cwe = cwe_brute(spec, threads)
        obj["brute"] = cwe.to_json_obj()
        obj["brute_weights"] = [{"w": w, "A": a} for w, a in weight_distribution_of(cwe).items()]
    else:
        cwe = cwe_closed(spec)
        obj["closed"] = cwe.to_json_obj()
        obj["closed_terms"] = [
            {"label": t.label, "composition": list(t.composition), "frequency": t.frequency}
            for t in closed_terms(spec)
        ]
        obj["table_weights"] = [{"w": w, "A": a} for w, a in table_closed(spec).items()]
    obj["n"] = cwe.n
    return obj, "n/a"


def _verify_text(obj: dict, verdict: str) -> str:
    par = obj["params"]
    head = (
        f"p={par['p']} e={par['e']} alpha={par['alpha']} d={par['d']} "
        f"a={obj['a']} c={obj['c']} n={obj['n']}"
    )
    if "theorem" in obj:
        head += f" theorem={obj['theorem']}"
    lines = [head]
    if "brute" in obj and "closed" in obj:
        closed = {tuple(t["composition"]): t["frequency"] for t in obj["closed"]["terms"]}
        brute = {tuple(t["composition"]): t["frequency"] for t in obj["brute"]["terms"]}
        rows = [
            [_hyphen(k), brute.get(k, 0), closed.get(k, 0)]
            for k in sorted(set(brute) | set(closed))
        ]
        lines.append(_table(rows, ["composition", "brute", "closed"]).rstrip())
        bw = {r["w"]: r["A"] for r in obj["brute_weights"]}
        tw = {r["w"]: r["A"] for r in obj["table_weights"]}
        wrows = [[w, bw.get(w, 0), tw.get(w, 0)] for w in sorted(set(bw) | set(tw))]
        lines.append(_table(wrows, ["w", "A_brute", "A_table"]).rstrip())
        lines.append(f"verdict: {verdict}")
    else:
        cwe = obj.get("brute") or obj.get("closed")
        rows = [[_hyphen(t["composition"]), t["frequency"]] for t in cwe["terms"]]
        lines.append(_table(rows, ["composition", "frequency"]).rstrip())
        weights = obj.get("brute_weights") or obj.get("table_weights")
        lines.append(_table([[r["w"], r["A"]] for r in weights], ["w", "A"]).rstrip())
    return "\n".join(lines) + "\n"


def _verify_csv(obj: dict) -> str:
    cwe = obj.get("brute") or obj.get("closed")
    lines = ["composition,frequency"]
    for term in cwe["terms"]:
        lines.append(f"{_hyphen(term['composition'])},{term['frequency']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    _require(args, "e")
    field = FieldParams(args.p, args.e, args.alpha)
    spec = CodeSpec(field, args.a, args.c)
    obj, verdict = _mode_report(spec, args.mode, args.threads)
    if args.format == "json":
        _emit(dump_json(obj), args.out)
    elif args.format == "csv":
        _emit(_verify_csv(obj), args.out)
    else:
        _emit(_verify_text(obj, verdict), args.out)
    if args.mode == "both" and verdict != "match":
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep


def cmd_sweep(args) -> int:
    primes = []
    for tok in args.primes.split(","):
        tok = tok.strip()
        if tok:
            primes.append(int(tok))
    for p in primes:
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise ParameterError(f"p must be an odd prime, got {p}")
    if not sweep_fields(primes, args.max_q):
        raise ParameterError("no admissible parameters in the requested range")
    rows = run_sweep(primes, args.max_q, args.threads)
    all_match = all(r["verdict"] == "match" for r in rows)
    header = ["p", "e", "alpha", "a", "c", "theorem", "n", "verdict"]
    if args.format == "json":
        _emit(dump_json({"rows": rows, "all_match": all_match}), args.out)
    elif args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(r[h]) for h in header) for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_table([[r[h] for h in header] for r in rows], header), args.out)
    if not all_match:
        for r in rows:
            if r["verdict"] != "match":
                print(f"mismatch: {r}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# sums


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ParameterError(f"--{name} is required for this suite")


def cmd_sums(args) -> int:
    if args.kind == "legendre":
        suite = legendre_suite(args.p)
        ok = suite.passed
        if args.format == "json":
            _emit(dump_json({"p": suite.p, "rows": suite.rows, "pass": ok}), args.out)
        elif args.format == "csv":
            lines = ["kind,args,brute,closed,status"]
            for r in suite.rows:
                status = "pass" if r["brute"] == r["closed"] else "FAIL"
                bv = _hyphen(r["brute"]) if isinstance(r["brute"], list) else str(r["brute"])
                cv = _hyphen(r["closed"]) if isinstance(r["closed"], list) else str(r["closed"])
                lines.append(f"{r['kind']},{_hyphen(r['args'])},{bv},{cv},{status}")
            _emit("\n".join(lines) + "\n", args.out)
        else:
            rows = [
                [r["kind"], _hyphen(r["args"]), str(r["brute"]), str(r["closed"]),
                 "pass" if r["brute"] == r["closed"] else "FAIL"]
                for r in suite.rows
            ]
            _emit(_table(rows, ["kind", "args", "brute", "closed", "status"]), args.out)
        return EXIT_OK if ok else EXIT_MISMATCH

    _require(args, "e")
    field = FieldParams(args.p, args.e, args.alpha)

    if args.kind == "gauss":
        suite = character_suite(field)
        obj = {
            "params": field.to_json_obj(),
            "orthogonality_failures": suite.orthogonality_failures,
            "gauss_sum": suite.gauss_value.to_json_obj(),
            "gauss_identity": suite.gauss_identity_ok,
            "pass": suite.passed,
        }
        if args.format == "json":
            _emit(dump_json(obj), args.out)
        else:
            rows = [
                ["orthogonality", "all b", "0 failures" if suite.orthogonality_failures == 0 else f"{suite.orthogonality_failures} failures",
                 "pass" if suite.orthogonality_failures == 0 else "FAIL"],
                ["gauss identity", "G^2 = eta(-1) q", str(suite.gauss_value.to_json_obj()["zeta_coeffs"]),
                 "pass" if suite.gauss_identity_ok else "FAIL"],
            ]
            _emit(_table(rows, ["check", "scope", "value", "status"]), args.out)
        return EXIT_OK if suite.passed else EXIT_MISMATCH

    if args.kind == "census":
        suite = census_suite(field)
        census_json = {("unsolvable" if k is None else str(k)): v for k, v in suite.census.items()}
        expected_json = {("unsolvable" if k is None else str(k)): v for k, v in suite.expected.items()}
        dsets = []
        for a in range(field.p):
            size = int(field.tables.trace_class_mask(a).sum()) - (1 if a == 0 else 0)
            dsets.append({"a": a, "n": size})
        obj = {
            "params": field.to_json_obj(),
            "defining_sets": dsets,
            "census": census_json,
            "expected": expected_json,
            "pass": suite.passed,
        }
        if args.format == "json":
            _emit(dump_json(obj), args.out)
        else:
            rows = [
                [k, census_json[k], expected_json.get(k, "-"),
                 "pass" if census_json[k] == expected_json.get(k) else "FAIL"]
                for k in sorted(census_json)
            ]
            _emit(_table(rows, ["class", "count", "expected", "status"]), args.out)
        return EXIT_OK if suite.passed else EXIT_MISMATCH

    if args.kind == "coulter":
        suite = coulter_suite(field)
        obj = {
            "params": field.to_json_obj(),
            "pairs": suite.pairs,
            "matches": suite.matches,
            "warnings": suite.warning_rows(),
            "violations": suite.violations,
            "pass": suite.passed,
        }
        if args.format == "json":
            _emit(dump_json(obj), args.out)
        else:
            rows = [["all", suite.pairs, suite.matches, "pass" if suite.passed else "FAIL"]]
            text = _table(rows, ["scope", "pairs", "matches", "status"])
            for w in suite.warning_rows():
                text += (
                    f"warning: case {w['case']}: {w['count']} sign-flipped pairs, "
                    f"e.g. a_log={w['example']['a_log']} b_log={w['example']['b_log']}\n"
                )
            for v in suite.violations[:10]:
                text += f"VIOLATION: {v}\n"
            _emit(text, args.out)
        return EXIT_OK if suite.passed else EXIT_MISMATCH

    raise ParameterError(f"unknown suite kind {args.kind}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        return cmd_sums(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entry() -> None:  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
