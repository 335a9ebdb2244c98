"""Command-line front end: check descriptors, generate examples, run suites.

Exit codes: 0 all requested checks passed, 1 a check failed or a suite
row disagreed, 2 unparseable input or invalid parameters, 3 a resource
cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .algebras import (build_b_symmetric_truncation, build_truncated_poly,
                       build_twisted_group_algebra, check_quantum_commutativity,
                       check_strong_grading, strong_grading_window)
from .commutation import check_cqt_axioms
from .descriptors import (Descriptor, dump_descriptor, factor_from_dict,
                          load_descriptor)
from .errors import CapExceededError, DescriptorError, QgradedError
from .galois import check_equivalence_theorem, is_galois
from .group_hopf import check_hopf_axioms
from .groups import GradingGroup

DEFAULT_MAX_GROUP_ORDER = 256
DEFAULT_MAX_BETA_N = 4

EXPECT_TOKENS = {
    "strong": ("grading.strong", True),
    "not-strong": ("grading.strong", False),
    "galois": ("galois.bijective", True),
    "not-galois": ("galois.bijective", False),
    "quantum-commutative": ("algebra.quantum-commutativity", True),
    "not-quantum-commutative": ("algebra.quantum-commutativity", False),
}


@dataclass
class RunConfig:
    """Validated run parameters for one CLI invocation."""

    command: str
    inputs: list[str] = field(default_factory=list)
    report_path: str | None = None
    expect: dict[str, bool] = field(default_factory=dict)
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    max_beta_n: int = DEFAULT_MAX_BETA_N
    verbose: bool = False

    def __post_init__(self):
        if self.max_group_order < 1 or self.max_beta_n < 1:
            raise ValueError("resource caps must be positive")


def _row(check_id: str, verdict: bool, expected: bool = True,
         witness: str | None = None, note: str | None = None) -> dict:
    out = {"id": check_id, "verdict": verdict, "expected": expected,
           "passed": verdict == expected}
    if witness is not None:
        out["witness"] = witness
    if note is not None:
        out["note"] = note
    return out


def _rows_from_report(report, expect: dict[str, bool]) -> list[dict]:
    rows = []
    for r in report.results:
        expected = expect.get(r.check_id, True)
        rows.append(_row(r.check_id, r.passed, expected, r.witness, r.note))
    return rows


def _check_descriptor(desc: Descriptor, cfg: RunConfig) -> list[dict]:
    group = desc.group
    if group.is_finite and group.order > cfg.max_group_order:
        raise CapExceededError(
            f"group order {group.order} exceeds the cap {cfg.max_group_order}")
    rows = _rows_from_report(check_hopf_axioms(group), cfg.expect)
    if desc.factor is not None:
        rows += _rows_from_report(check_cqt_axioms(desc.factor), cfg.expect)
    if desc.algebra is not None:
        algebra = desc.algebra
        rows += _rows_from_report(algebra.validation_report(), cfg.expect)
        structural_ok = all(r["passed"] for r in rows[-3:])
        if desc.factor is not None:
            qc = check_quantum_commutativity(algebra, desc.factor)
            witness = None
            if qc.witness_pair:
                witness = f"({qc.witness_pair[0]}, {qc.witness_pair[1]})"
            rows.append(_row("algebra.quantum-commutativity",
                             qc.quantum_commutative,
                             cfg.expect.get("algebra.quantum-commutativity", True),
                             witness))
        if not structural_ok:
            rows.append(_row("grading.strong", False,
                             note="skipped: algebra failed structural validation"))
        elif group.is_finite:
            strong = check_strong_grading(algebra)
            witness = None
            if strong.witness_pair:
                g, h = strong.witness_pair
                witness = f"pair ({g}, {h}), missing {strong.missing}"
            rows.append(_row("grading.strong", strong.strong,
                             cfg.expect.get("grading.strong", True), witness))
            galois = is_galois(algebra)
            witness = None
            if not galois.galois:
                if galois.kernel_witness is not None:
                    witness = "kernel: " + galois.describe_kernel(algebra)
                else:
                    witness = f"cokernel at {galois.cokernel_witness}"
            rows.append(_row("galois.bijective", galois.galois,
                             cfg.expect.get("galois.bijective", True), witness,
                             note=f"rank {galois.rank} of "
                                  f"{galois.domain_dim} -> {galois.codomain_dim}"))
            rows.append(_row("equivalence.agreement",
                             strong.strong == galois.galois,
                             note="strong grading and Galois verdicts must coincide"))
        else:
            window = strong_grading_window(algebra)
            spanned = sum(1 for w in window if w.spanned)
            rows.append(_row(
                "grading.window-evidence", True,
                note=f"infinite grading group: no verdict; {spanned}/{len(window)} "
                     f"grade pairs spanned within the truncated basis"))
    return rows


def cmd_check(cfg: RunConfig) -> int:
    path = cfg.inputs[0]
    try:
        desc = load_descriptor(path, validate_algebra=False)
    except DescriptorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        rows = _check_descriptor(desc, cfg)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report = {"input": Path(path).name,
              "passed": all(r["passed"] for r in rows),
              "checks": rows}
    if cfg.report_path:
        _write_json(cfg.report_path, report)
    for r in rows:
        if cfg.verbose or not r["passed"]:
            mark = "PASS" if r["passed"] else "FAIL"
            extra = "" if r["verdict"] == r["expected"] else \
                f" (verdict {r['verdict']}, expected {r['expected']})"
            print(f"{mark} {r['id']}{extra}")
    print(f"{'OK' if report['passed'] else 'FAILED'}: "
          f"{sum(r['passed'] for r in rows)}/{len(rows)} checks passed")
    return 0 if report["passed"] else 1


def _parse_matrix(text: str, name: str) -> list[list[int]]:
    try:
        m = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{name} is not valid JSON: {exc}")
    if not (isinstance(m, list) and all(
            isinstance(row, list) and all(isinstance(x, int) for x in row)
            for row in m)):
        raise ValueError(f"{name} must be a JSON matrix of integers")
    return m


def _build_from_args(args) -> Descriptor:
    if args.builder == "truncated-poly":
        algebra = build_truncated_poly(args.m)
        return Descriptor(algebra.group, None, algebra)

    N = args.N
    if N < 1:
        raise ValueError("N must be >= 1")
    sigma = _parse_matrix(args.sigma, "sigma") if args.sigma else \
        [[0] * N for _ in range(N)]
    omega = _parse_matrix(args.omega, "omega") if args.omega else \
        [[0] * N for _ in range(N)]
    group = GradingGroup(N, ()) if args.n == 0 else GradingGroup(0, (args.n,) * N)
    factor = factor_from_dict(group, {"sigma": sigma, "omega": omega, "q": args.q})
    if args.builder == "twisted-group-algebra":
        if args.n == 0:
            raise ValueError("twisted-group-algebra requires a finite group (n >= 2)")
        algebra = build_twisted_group_algebra(group, factor)
    else:
        algebra = build_b_symmetric_truncation(factor, args.max_degree)
    return Descriptor(group, factor, algebra)


def cmd_generate(cfg: RunConfig, args) -> int:
    try:
        desc = _build_from_args(args)
    except (ValueError, DescriptorError, QgradedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dump_descriptor(desc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if cfg.verbose:
            print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_suite(cfg: RunConfig) -> int:
    directory = Path(cfg.inputs[0])
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return 2
    files = sorted(directory.glob("*.json"))
    rows = []
    for path in files:
        started = time.monotonic()
        row = {"file": path.name, "strong": None, "galois": None,
               "agree": None, "error": None}
        try:
            desc = load_descriptor(str(path))
            if desc.algebra is None:
                row["error"] = "no algebra in descriptor"
            elif (desc.group.is_finite
                  and desc.group.order > cfg.max_group_order):
                row["error"] = (f"group order {desc.group.order} exceeds "
                                f"the cap {cfg.max_group_order}")
            else:
                eq = check_equivalence_theorem(desc.algebra)
                row["strong"] = eq.strong.strong
                row["galois"] = eq.galois.galois
                row["agree"] = eq.agree
        except QgradedError as exc:
            row["error"] = str(exc)
        row["seconds"] = round(time.monotonic() - started, 3)
        rows.append(row)

    def cell(v):
        return "-" if v is None else ("yes" if v is True else
                                      ("no" if v is False else str(v)))

    width = max([len(r["file"]) for r in rows], default=10)
    print(f"{'descriptor':<{width}}  {'strong':>6}  {'galois':>6}  "
          f"{'agree':>5}  {'seconds':>7}")
    for r in rows:
        print(f"{r['file']:<{width}}  {cell(r['strong']):>6}  "
              f"{cell(r['galois']):>6}  {cell(r['agree']):>5}  "
              f"{r['seconds']:>7.3f}" + (f"  ERROR: {r['error']}" if r["error"] else ""))
    if cfg.report_path:
        _write_json(cfg.report_path, {
            "rows": [{k: v for k, v in r.items() if k != "seconds"}
                     for r in rows]})
    bad = any(r["error"] is not None or r["agree"] is False for r in rows)
    return 1 if bad else 0


def _write_json(path: str, payload: dict):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgraded",
        description="Build and verify group-graded algebras with "
                    "commutation-factor symmetry.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--report", dest="report", default=None,
                       help="write a JSON report to this path")
        p.add_argument("--max-group-order", type=int,
                       default=DEFAULT_MAX_GROUP_ORDER)
        p.add_argument("--max-beta-n", type=int, default=DEFAULT_MAX_BETA_N)
        p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("check", help="run all applicable checks on a descriptor")
    p.add_argument("file")
    p.add_argument("--expect", action="append", default=[],
                   choices=sorted(EXPECT_TOKENS),
                   help="assert a verdict instead of requiring it to be true")
    add_common(p)

    p = sub.add_parser("generate", help="write a descriptor for a built-in family")
    p.add_argument("builder", choices=["twisted-group-algebra",
                                       "truncated-poly", "b-symmetric"])
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--n", type=int, default=0,
                   help="torsion order of the grading group (0 = free)")
    p.add_argument("--N", type=int, default=1, help="number of generators")
    p.add_argument("--m", type=int, default=2,
                   help="truncation order for truncated-poly")
    p.add_argument("--sigma", default=None, help="JSON integer matrix")
    p.add_argument("--omega", default=None, help="JSON integer matrix")
    p.add_argument("--q", default="1", help="scalar in the canonical grammar")
    p.add_argument("--max-degree", type=int, default=2)
    add_common(p)

    p = sub.add_parser("suite", help="run the equivalence suite over a "
                                     "directory of descriptors")
    p.add_argument("directory")
    add_common(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        expect = {}
        for token in getattr(args, "expect", []):
            check_id, verdict = EXPECT_TOKENS[token]
            expect[check_id] = verdict
        # strong grading and the Galois property must agree, so an
        # expectation on one side carries over to the other
        for a, b in (("grading.strong", "galois.bijective"),
                     ("galois.bijective", "grading.strong")):
            if a in expect and b not in expect:
                expect[b] = expect[a]
        cfg = RunConfig(
            command=args.command,
            inputs=[getattr(args, "file", None) or getattr(args, "directory", "")],
            report_path=args.report,
            expect=expect,
            max_group_order=args.max_group_order,
            max_beta_n=args.max_beta_n,
            verbose=args.verbose)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "check":
        return cmd_check(cfg)
    if args.command == "generate":
        return cmd_generate(cfg, args)
    return cmd_suite(cfg)


if __name__ == "__main__":
    sys.exit(main())
