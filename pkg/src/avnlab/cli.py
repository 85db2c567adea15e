"""Command-line entry point: reproducible verification runs and reports.

Subcommands: verify | lhv | ks | simulate | all.  Exit codes: 0 success,
1 verification failure, 2 internal invariant breach, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ks, lhv, simulate
from .functional import (
    EXPECTED_SIGNS,
    operator_o_check,
    verify_nine_identities,
)
from .pauli import parse
from .states import build_psi

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVARIANT = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def run_verify(state=None) -> dict:
    """Exact checks of the state-side claims; `state` is injectable for
    negative-control tests."""
    if state is None:
        state = build_psi()
    signs = verify_nine_identities(state)
    failures = [
        f"identity {i + 1}: expected {want:+d}, got {got}"
        for i, (want, got) in enumerate(zip(EXPECTED_SIGNS, signs))
        if got != want
    ]

    eigen_ok = operator_o_check(state)
    if not eigen_ok:
        failures.append("operator sum does not map the state to 9x itself")

    identity_checks = []
    for lhs_a, lhs_b, rhs in (("z1z2", "x1x2", "-y1y2"), ("z3x4", "x3z4", "y3y4")):
        product = parse(lhs_a, 4) * parse(lhs_b, 4)
        ok = product == parse(rhs, 4)
        identity_checks.append(
            {"lhs": f"{lhs_a}·{lhs_b}", "rhs": rhs, "product": product.label, "ok": ok}
        )
        if not ok:
            failures.append(f"operator identity {lhs_a}·{lhs_b} != {rhs}")

    return {
        "signs": signs,
        "expected_signs": list(EXPECTED_SIGNS),
        "sign_product": None if any(s is None for s in signs) else _prod(signs),
        "eigenvalue_nine": eigen_ok,
        "operator_identities": identity_checks,
        "failures": failures,
        "all_ok": not failures,
    }


def _prod(values):
    out = 1
    for v in values:
        out *= v
    return out


def run_lhv() -> dict:
    report = lhv.certificate()
    report["all_ok"] = (
        report["local_bound"] == 7 and report["satisfying_count"] == 0
    )
    return report


def run_ks() -> dict:
    return ks.certificate()


def run_simulate(shots, seed, visibility, efficiency) -> dict:
    noise = simulate.NoiseModel(visibility, efficiency)
    report = simulate.estimate_F(shots, noise, seed)
    report["all_ok"] = True  # statistical report; no pass/fail gate
    return report


def _emit(report, args):
    if args.json:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(report, args.command)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_text(report, command) -> str:
    lines = [f"[{command}]"]
    if command == "verify":
        lines.append(f"  nine signs: {report['signs']}  (product {report['sign_product']})")
        lines.append(f"  eigenvalue-nine check: {report['eigenvalue_nine']}")
        for check in report["operator_identities"]:
            lines.append(f"  {check['lhs']} = {check['product']}  (want {check['rhs']}): {check['ok']}")
        for failure in report["failures"]:
            lines.append(f"  FAIL {failure}")
    elif command == "lhv":
        lines.append(f"  parity product: {report['parity_product']}")
        lines.append(f"  satisfying assignments: {report['satisfying_count']} of {4096}")
        lines.append(f"  local bound: {report['local_bound']}  quantum value: {report['quantum_value']}")
        lines.append(f"  critical visibility: {report['visibility_threshold_exact']}")
        witness = "".join("-" if report["witness"][k] < 0 else "+" for k in report["id_order"])
        lines.append(f"  witness ({' '.join(report['id_order'])}): {witness}")
    elif command == "ks":
        lines.append(ks.render_table(ks.KsTable.canonical(), report["structure"]))
        c = report["contradiction"]
        lines.append(f"  parity product: {c['parity_product']}")
        lines.append(
            f"  satisfying assignments: {c['exhaustive_count_satisfying_all']}"
            f" of {c['assignments_checked']}"
        )
        lines.append(
            f"  eigenfamily: {len(report['eigenfamily'])} states,"
            f" sign products {'all -1' if all(r['sign_product'] == -1 for r in report['eigenfamily']) else 'MIXED'}"
        )
    elif command == "simulate":
        for r in report["records"]:
            lines.append(
                f"  term {r['term_index']} ({r['label']}): "
                f"{r['estimate']:+.5f} ± {r['standard_error']:.5f} "
                f"[{r['shots_retained']}/{r['shots_requested']} shots]"
            )
        lines.append(
            f"  F = {report['F_estimate']:.5f} ± {report['F_standard_error']:.5f}"
            f"  (local bound {report['local_bound']}, quantum value {report['quantum_value']})"
        )
        lines.append(f"  violates local bound: {report['violates_local_bound']}")
    elif command == "all":
        for key in ("verify", "lhv", "ks", "simulate"):
            lines.append(_render_text(report[key], key))
    lines.append(f"  result: {'PASS' if report.get('all_ok') else 'FAIL'}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="avnlab", description=__doc__)
    parser.add_argument("command", choices=["verify", "lhv", "ks", "simulate", "all"])
    parser.add_argument("--shots", type=int, default=100000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--visibility", type=float, default=1.0)
    parser.add_argument("--efficiency", type=float, default=1.0)
    parser.add_argument("--json", action="store_true", help="emit a JSON certificate")
    parser.add_argument("--out", metavar="PATH", help="write the report to a file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.shots <= 0:
        build_parser().error("--shots must be positive")
    try:
        if args.command == "verify":
            report = run_verify()
        elif args.command == "lhv":
            report = run_lhv()
        elif args.command == "ks":
            report = run_ks()
        elif args.command == "simulate":
            report = run_simulate(
                args.shots, args.seed, args.visibility, args.efficiency
            )
        else:
            report = {
                "verify": run_verify(),
                "lhv": run_lhv(),
                "ks": run_ks(),
                "simulate": run_simulate(
                    args.shots, args.seed, args.visibility, args.efficiency
                ),
            }
            report["all_ok"] = all(
                report[k]["all_ok"] for k in ("verify", "lhv", "ks", "simulate")
            )
    except ValueError as exc:
        build_parser().error(str(exc))
    except AssertionError as exc:
        sys.stderr.write(f"internal invariant breach: {exc}\n")
        return EXIT_INVARIANT

    _emit(report, args)
    return EXIT_OK if report.get("all_ok") else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
