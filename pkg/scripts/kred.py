import argparse
import csv
import io
import logging
import sys
import time
from dataclasses import dataclass
from typing import Any, Optional

import sympy

from src.arith import OddPrime
from src.configs.config import (DEFAULT_MAX_PERIOD, DEFAULT_WORKERS,
                                TOOL_NAME, TOOL_VERSION)
from src.configs.path_config import default_state_dir
from src.core import (RealificationStatus, SubstitutionMode, Theory,
                      base_series, realification_status,
                      realification_target, verify_finite_identity)
from src.errors import (InvalidPrime, KredError, PrimalityUndecided,
                        StateCorruption)
from src.formulas import (bernoulli_from_k, bernoulli_oracle, formula,
                          formula_residues)
from src.periodicity import reduce_with_state, scan, scan_prime
from src.reproduction import SUSPECTED_TYPO, PaperSuite, paper_display
from src.utils.output import (OutputEnvelope, Timing, coefficients_csv,
                              coefficients_text)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_STATE = 3


class UsageError(Exception):
    pass


@dataclass
class Rendered:
    payload: Any
    text: str
    csv: Optional[str] = None
    theory: Optional[str] = None
    p: Optional[int] = None
    offset: Optional[int] = None
    exit_code: int = EXIT_OK


def _rows_csv(header: list, rows: list) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer (got {value})")
    return n


def _natural(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer (got {value})")
    return n


def _term(value: str) -> tuple[int, int]:
    try:
        exponent, coeff = value.split(":")
        return int(exponent), int(coeff)
    except ValueError:
        raise argparse.ArgumentTypeError(f"terms are written exponent:coefficient (got {value})")


def _series_command(theory: Theory, args) -> Rendered:
    p = OddPrime.of(args.p)
    values = base_series(theory, p, args.n).to_list()
    return Rendered(
        payload={"coefficients": values},
        text=coefficients_text(values, 0, theory.generator),
        csv=coefficients_csv(values, 0),
        theory=theory.value,
        p=p.value,
        offset=0,
    )


def cmd_kseries(args) -> Rendered:
    return _series_command(Theory.COMPLEX, args)


def cmd_mseries(args) -> Rendered:
    return _series_command(Theory.REAL, args)


def cmd_reduce(args) -> Rendered:
    theory = Theory.parse(args.theory)
    p = OddPrime.of(args.p)
    series = reduce_with_state(
        theory, p, args.n, args.mode, args.state, show_progress=args.show_progress
    )
    values = list(series.balanced)
    return Rendered(
        payload={"mode": series.mode.value, "coefficients": values},
        text=coefficients_text(values, series.base_exponent, theory.generator),
        csv=coefficients_csv(values, series.base_exponent),
        theory=theory.value,
        p=p.value,
        offset=series.base_exponent,
    )


def cmd_formula(args) -> Rendered:
    theory = Theory.parse(args.theory)
    entry = formula(theory, args.n)
    name = "K" if theory is Theory.COMPLEX else "M"
    payload = {
        "n": entry.n,
        "display": entry.display(),
        "expanded": str(entry.formula),
        "coefficients": [str(c) for c in entry.formula.coeffs],
        "min_valid_p": entry.min_valid_p,
    }
    text = (
        f"{name}_{entry.n}(p) = {entry.display()}    (valid for p >= {entry.min_valid_p})\n"
        f"expanded: {entry.formula}\n"
    )
    rows = [[k, str(c)] for k, c in enumerate(entry.formula.coeffs)]
    return Rendered(payload, text, _rows_csv(["power", "coefficient"], rows), theory=theory.value)


def cmd_bernoulli(args) -> Rendered:
    rows, lines, mismatches = [], [], 0
    for n in range(1, args.n + 1) if args.all else [args.n]:
        value = bernoulli_from_k(n).value
        row = {"n": n, "value": str(value)}
        line = f"B_{n} = {value}"
        if args.check:
            match = value == bernoulli_oracle(n).value
            mismatches += not match
            row["oracle"] = "MATCH" if match else "MISMATCH"
            line += f"    oracle {row['oracle']}"
        rows.append(row)
        lines.append(line)
    header = list(rows[0])
    return Rendered(
        payload={"values": rows},
        text="\n".join(lines) + "\n",
        csv=_rows_csv(header, [[r[k] for k in header] for r in rows]),
        exit_code=EXIT_INTERNAL if mismatches else EXIT_OK,
    )


def _scan_primes(args) -> list[int]:
    primes = list(args.p or [])
    if args.primes_up_to:
        primes += [int(q) for q in sympy.primerange(3, args.primes_up_to + 1)]
    if not primes:
        raise UsageError("give at least one prime with -p or --primes-up-to")
    return primes


def cmd_period(args) -> Rendered:
    theory = Theory.parse(args.theory)
    primes = _scan_primes(args)
    if args.state:
        if len(primes) != 1:
            raise UsageError("--state takes a single prime; use --out-dir for several")
        reports = [
            scan_prime(
                theory, primes[0], args.max_terms, None, args.mode, args.max_period,
                state_file=args.state, show_progress=args.show_progress,
            )
        ]
    else:
        reports = scan(
            theory,
            primes,
            args.max_terms,
            args.out_dir or default_state_dir(),
            args.mode,
            args.workers,
            args.max_period,
            show_progress=args.show_progress,
        )
    rows = [r.to_dict() for r in reports]
    header = ["p", "window", "outcome", "preperiod", "period", "certificate_status"]
    return Rendered(
        payload={"reports": rows},
        text="\n".join(str(r) for r in reports) + "\n",
        csv=_rows_csv(header, [[row.get(k, "") for k in header] for row in rows]),
        theory=theory.value,
        p=reports[0].p if len(reports) == 1 else None,
    )


def cmd_verify_paper(args) -> Rendered:
    suite = PaperSuite(prime_bound=args.prime_bound, formula_prime_bound=args.formula_prime_bound)
    results = suite.run()
    width = max(len(r.name) for r in results)
    lines = [f"{r.name:<{width}}  {r.status}{'  ' + r.detail if r.detail else ''}" for r in results]
    passed = PaperSuite.passed(results)
    typos = sum(r.status == SUSPECTED_TYPO for r in results)
    lines.append(
        f"{sum(r.status == 'PASS' for r in results)}/{len(results)} passed"
        + (f", {typos} suspected transcription issue(s)" if typos else "")
    )
    rows = [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]
    return Rendered(
        payload={"checks": rows, "passed": passed},
        text="\n".join(lines) + "\n",
        csv=_rows_csv(["name", "status", "detail"], [list(r.values()) for r in rows]),
        exit_code=EXIT_OK if passed else EXIT_INTERNAL,
    )


def cmd_realification(args) -> Rendered:
    p = OddPrime.of(args.p)
    status = realification_status(p)
    target = realification_target(p)
    text = f"w*f_{p}(w) at w = x + 1/x - 2: {status.value}"
    if status is RealificationStatus.CLOSED_FORM:
        text += f"\n  = x^{-(p.value + 1) // 2}*(x-1)*(x^{p}-1) = {target}"
    return Rendered(
        payload={"status": status.value, "target": str(target)},
        text=text + "\n",
        theory=Theory.REAL.value,
        p=p.value,
        exit_code=EXIT_OK if status is RealificationStatus.CLOSED_FORM else EXIT_INTERNAL,
    )


def cmd_residues(args) -> Rendered:
    theory = Theory.parse(args.theory)
    p = OddPrime.of(args.p)
    rows = formula_residues(theory, p, args.n)
    header = ["n", "direct", "direct_residue", "formula", "formula_residue"]
    lines = [
        f"n={r['n']}: direct {r['direct']} -> {r['direct_residue']}"
        + (f", formula {r['formula']} -> {r['formula_residue']}" if "formula" in r else ", formula not valid")
        for r in rows
    ]
    return Rendered(
        payload={"rows": rows},
        text="\n".join(lines) + "\n",
        csv=_rows_csv(header, [[r.get(k, "") for k in header] for r in rows]),
        theory=theory.value,
        p=p.value,
    )


def cmd_identity(args) -> Rendered:
    theory = Theory.parse(args.theory)
    p = OddPrime.of(args.p)
    try:
        if args.paper_display:
            terms = paper_display(theory, p.value)
        elif args.terms:
            terms = args.terms
        else:
            raise UsageError("give --terms exponent:coefficient ... or --paper-display")
        holds = verify_finite_identity(theory, p, terms)
    except ValueError as e:
        raise UsageError(str(e)) from e
    verdict = "HOLDS" if holds else "DOES NOT HOLD"
    return Rendered(
        payload={"terms": [list(t) for t in terms], "holds": holds},
        text=f"{p}*{theory.generator} = sum of {len(terms)} terms: {verdict}\n",
        csv=_rows_csv(["exponent", "coefficient"], [list(t) for t in terms]),
        theory=theory.value,
        p=p.value,
        exit_code=EXIT_OK if holds else EXIT_INTERNAL,
    )


COMMANDS = {
    "kseries": cmd_kseries,
    "mseries": cmd_mseries,
    "reduce": cmd_reduce,
    "formula": cmd_formula,
    "bernoulli": cmd_bernoulli,
    "period": cmd_period,
    "scan": cmd_period,
    "verify-paper": cmd_verify_paper,
    "realification": cmd_realification,
    "residues": cmd_residues,
    "identity": cmd_identity,
}


def parse_args(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr.")
    common.add_argument("--quiet", action="store_true", help="Disable progress bars.")

    parser = argparse.ArgumentParser(
        prog=TOOL_NAME, description="Complete reduction in the K-theory of lens spaces"
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("kseries", "K_{p,n} series"), ("mseries", "M_{p,n} series")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("-p", type=str, required=True)
        p.add_argument("-n", type=_positive, required=True)

    p = sub.add_parser("reduce", parents=[common], help="Complete reduction of p*X")
    p.add_argument("--theory", choices=[t.value for t in Theory], default=Theory.COMPLEX.value)
    p.add_argument("-p", type=str, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--mode", choices=[m.value for m in SubstitutionMode], default=SubstitutionMode.SELF.value)
    p.add_argument("--state", type=str, default=None, help="Resumable state file.")

    p = sub.add_parser("formula", parents=[common], help="K_n / M_n as a polynomial in p")
    p.add_argument("--theory", choices=[t.value for t in Theory], default=Theory.COMPLEX.value)
    p.add_argument("-n", type=_natural, required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="B_n from the leading coefficient of K_n")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--check", action="store_true", help="Compare with the recurrence oracle.")
    p.add_argument("--all", action="store_true", help="Report every B_1..B_n.")

    for name in ("period", "scan"):
        p = sub.add_parser(name, parents=[common], help="Look for and certify eventual periods")
        p.add_argument("--theory", choices=[t.value for t in Theory], default=Theory.COMPLEX.value)
        p.add_argument("-p", type=str, nargs="+", default=None)
        p.add_argument("--primes-up-to", type=_positive, default=None)
        p.add_argument("--max-terms", type=_positive, default=1000)
        p.add_argument("--max-period", type=_positive, default=DEFAULT_MAX_PERIOD)
        p.add_argument("--mode", choices=[m.value for m in SubstitutionMode], default=SubstitutionMode.SELF.value)
        p.add_argument("--state", type=str, default=None)
        p.add_argument("--out-dir", type=str, default=None, help="Defaults to $KRED_STATE_DIR or results/state.")
        p.add_argument("--workers", type=_positive, default=DEFAULT_WORKERS)

    p = sub.add_parser("verify-paper", parents=[common], help="Re-derive every published value")
    p.add_argument("--prime-bound", type=_positive, default=31)
    p.add_argument("--formula-prime-bound", type=_positive, default=101)

    p = sub.add_parser("realification", parents=[common], help="Realification identity for w*f_p(w)")
    p.add_argument("-p", type=str, required=True)

    p = sub.add_parser("residues", parents=[common], help="Formula table read mod p")
    p.add_argument("--theory", choices=[t.value for t in Theory], default=Theory.COMPLEX.value)
    p.add_argument("-p", type=str, required=True)
    p.add_argument("-n", type=_natural, required=True)

    p = sub.add_parser("identity", parents=[common], help="Check p*X = sum of terms modulo the relation")
    p.add_argument("--theory", choices=[t.value for t in Theory], default=Theory.COMPLEX.value)
    p.add_argument("-p", type=str, required=True)
    p.add_argument("--terms", type=_term, nargs="+", default=None)
    p.add_argument("--paper-display", action="store_true")

    return parser.parse_args(argv)


def render(args, argv: list, result: Rendered, elapsed_ms: int) -> str:
    if args.format == "text":
        return result.text
    if args.format == "csv":
        if result.csv is None:
            raise UsageError(f"{args.command} has no csv output")
        return result.csv
    envelope = OutputEnvelope(
        command=[TOOL_NAME, *argv],
        theory=result.theory,
        p=result.p,
        offset=result.offset,
        payload=result.payload,
        timing=Timing(elapsed_ms=str(elapsed_ms)),
    )
    return envelope.to_json() + "\n"


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parse_args(argv)
    logging.basicConfig(
        format="%(asctime)s - %(levelname)s - %(message)s",
        level=logging.INFO if args.verbose else logging.WARNING,
    )
    args.show_progress = not args.quiet and sys.stderr.isatty()

    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
        sys.stdout.write(render(args, argv, result, int((time.perf_counter() - start) * 1000)))
    except (InvalidPrime, PrimalityUndecided, UsageError) as e:
        print(f"{TOOL_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except StateCorruption as e:
        print(f"{TOOL_NAME}: state corruption: {e}", file=sys.stderr)
        return EXIT_STATE
    except KredError as e:
        logging.error(f"{type(e).__name__}: {e}")
        return EXIT_INTERNAL
    except Exception as e:
        logging.error(f"An unexpected error occurred: {e}", exc_info=True)
        return EXIT_INTERNAL
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
