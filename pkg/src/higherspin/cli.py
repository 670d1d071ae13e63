"""Command-line front end.

Every rational is printed exactly: ``p/q`` in tables and csv, a
``["p", "q"]`` string pair in json.  Exit codes: 0 ok, 1 a verification
failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .branching import FAMILY_KIND, BundleKind, branch, make_bundle
from .errors import HigherSpinError
from .killing import killing_forms, killing_space_dim
from .rep_core import AlgebraDescriptor, format_rational, format_weight, parse_weight, validate_weight, weyl_dim
from .spectra import OperatorKind, applicable_ops, spectrum_table
from .suites import SUITES, Grid, run_suites

SPECTRUM_COLUMNS = ["family", "n", "j", "k", "s", "weight", "dim", "mult", "op", "eig_num", "eig_den"]


class UsageError(Exception):
    pass


def rational_pair(x: Fraction) -> list:
    return [str(x.numerator), str(x.denominator)]


def weight_pairs(w) -> list:
    return [rational_pair(x) for x in w]


# ---------------------------------------------------------------------------
# documents


class Document:
    """What every command produces before it is rendered."""

    def __init__(self, command: str, params: dict, columns: list):
        self.command = command
        self.params = params
        self.columns = columns
        self.lines: list = []  # dicts keyed by column, raw python values
        self.violations: list = []
        self.footer: list = []

    @property
    def status(self) -> str:
        return "violated" if self.violations else "ok"

    def to_json(self) -> str:
        def enc(value):
            if isinstance(value, Fraction):
                return rational_pair(value)
            if isinstance(value, tuple):
                return weight_pairs(value)
            return value

        lines = []
        for line in self.lines:
            out = {}
            for key, value in line.items():
                if key in ("eig_num", "eig_den"):
                    continue
                out[key] = enc(value)
            lines.append(out)
        doc = {
            "command": self.command,
            "params": self.params,
            "lines": lines,
            "status": self.status,
            "violations": self.violations,
        }
        return json.dumps(doc, indent=2) + "\n"

    @staticmethod
    def _cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, Fraction):
            return format_rational(value)
        if isinstance(value, tuple):
            return format_weight(value)
        return str(value)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for line in self.lines:
            writer.writerow([self._cell(line.get(col)) for col in self.columns])
        return buf.getvalue()

    def to_table(self) -> str:
        cols = [c for c in self.columns if c not in ("eig_num", "eig_den")]
        if "eig_num" in self.columns:
            cols.append("eig")
        rows = [[self._cell(line.get(c)) for c in cols] for line in self.lines]
        widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(cols)]
        out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
        out.append("  ".join("-" * w for w in widths))
        for r in rows:
            out.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        out.extend(self.footer)
        out.append(f"status: {self.status}")
        out.extend(f"violation: {v}" for v in self.violations)
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "table": self.to_table}[fmt]()


# ---------------------------------------------------------------------------
# commands


def _parse_weight_for(n: int, text: str):
    try:
        entries = parse_weight(text)
        return validate_weight(AlgebraDescriptor(n), entries)
    except (ValueError, HigherSpinError) as exc:
        raise UsageError(str(exc)) from None


def cmd_spectrum(args) -> Document:
    kind = BundleKind(args.space)
    s_free = kind in (BundleKind.FORM, BundleKind.SPINOR_FORM)
    if args.s is not None and s_free:
        raise UsageError(f"--s does not apply to the {kind.value} space")
    try:
        bundle = make_bundle(kind, args.n, args.j)
    except (ValueError, HigherSpinError) as exc:
        raise UsageError(str(exc)) from None
    if args.k_max < 0:
        raise UsageError("--k-max must be non-negative")
    if args.s is not None and not 0 <= args.s <= args.j:
        raise UsageError(f"--s must lie in 0..{args.j}")

    families = [f for f, k in FAMILY_KIND.items() if k is kind]
    ops_for_space = [op for op in OperatorKind if all(op in applicable_ops(f) for f in families)]
    skip_u = kind is BundleKind.SYM and args.n == 3 and not args.extrapolate_n3
    if args.op:
        try:
            ops = [OperatorKind.parse(args.op)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if ops[0] not in ops_for_space:
            raise UsageError(f"operator {ops[0].value} does not act on the {kind.value} space")
        if skip_u and ops[0] is OperatorKind.U:
            raise UsageError("U on symmetric tensors over S^3 needs --extrapolate-n3")
    else:
        ops = [op for op in ops_for_space if not (skip_u and op is OperatorKind.U)]

    params = {
        "space": kind.value,
        "n": args.n,
        "j": args.j,
        "k_max": args.k_max,
        "s": args.s,
        "op": [op.value for op in ops],
        "curvature": rational_pair(Fraction(1)),
        "extrapolate_n3": bool(args.extrapolate_n3),
    }
    doc = Document("spectrum", params, SPECTRUM_COLUMNS)
    tables = [spectrum_table(bundle, op, args.k_max, extrapolate_n3=args.extrapolate_n3) for op in ops]
    for rows in zip(*tables):
        for line in rows:
            m = line.member
            if args.s is not None and m.s != args.s:
                continue
            doc.lines.append({
                "family": m.family.value,
                "n": m.n,
                "j": m.j,
                "k": m.k,
                "s": m.s,
                "weight": m.parent_weight,
                "dim": line.dim,
                "mult": line.multiplicity,
                "op": line.op.value,
                "eig": line.eigenvalue,
                "eig_num": line.eigenvalue.numerator,
                "eig_den": line.eigenvalue.denominator,
            })
    return doc


def cmd_verify(args) -> Document:
    try:
        grid = Grid(args.n_min, args.n_max, args.j_max, args.k_max, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    names = list(SUITES) if args.suite == "all" else [args.suite]
    params = {
        "suite": args.suite,
        "n_min": grid.n_min,
        "n_max": grid.n_max,
        "j_max": grid.j_max,
        "k_max": grid.k_max,
        "seed": grid.seed,
    }
    doc = Document("verify", params, ["suite", "checks", "violations"])
    total = 0
    for res in run_suites(names, grid):
        total += res.checks
        doc.lines.append({"suite": res.name, "checks": res.checks, "violations": len(res.violations)})
        doc.violations.extend(f"[{res.name}] {v}" for v in res.violations)
    doc.lines.append({"suite": "total", "checks": total, "violations": len(doc.violations)})
    doc.footer.append(f"checks: {total}")
    return doc


def cmd_branch(args) -> Document:
    parent = _parse_weight_for(args.n, args.weight)
    if args.n < 4:
        raise UsageError("branching needs a parent algebra so(n) with n >= 4")
    children = branch(parent).children
    params = {"n": args.n, "weight": weight_pairs(parent.weight)}
    doc = Document("branch", params, ["algebra", "weight", "dim"])
    for child in children:
        doc.lines.append({"algebra": str(child.algebra), "weight": child.weight, "dim": weyl_dim(child)})
    total = sum(weyl_dim(c) for c in children)
    doc.footer.append(f"parent {parent}: dim {weyl_dim(parent)}; children total {total}")
    if total != weyl_dim(parent):
        doc.violations.append(f"dimension not conserved: {total} != {weyl_dim(parent)}")
    return doc


def cmd_dim(args) -> Document:
    label = _parse_weight_for(args.n, args.weight)
    doc = Document("dim", {"n": args.n, "weight": weight_pairs(label.weight)}, ["algebra", "weight", "dim"])
    doc.lines.append({"algebra": str(label.algebra), "weight": label.weight, "dim": weyl_dim(label)})
    return doc


def cmd_killing(args) -> Document:
    try:
        kd = killing_space_dim(args.n, args.degree)
    except (ValueError, HigherSpinError) as exc:
        raise UsageError(str(exc)) from None
    doc = Document("killing", {"n": args.n, "degree": args.degree}, ["piece", "i", "weight", "dim"])
    for i in range(args.degree // 2 + 1):
        for piece in kd.primitive_pieces if i == 0 else killing_space_dim(args.n, args.degree - 2 * i).primitive_pieces:
            doc.lines.append({"piece": f"g^{i} P^{args.degree - 2 * i}", "i": i, "weight": piece.weight, "dim": piece.dim})
    doc.lines.append({"piece": "total", "i": None, "weight": None, "dim": kd.total_dim})
    if args.degree <= args.n // 2:
        kf = killing_forms(args.n, args.degree)
        doc.lines.append({"piece": "killing-forms", "i": None, "weight": kf.killing[0].weight, "dim": kf.killing_dim})
        doc.lines.append({"piece": "co-killing-forms", "i": None, "weight": kf.co_killing[0].weight, "dim": kf.co_killing_dim})
    return doc


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higherspin",
        description="Exact spectra and identities for higher spin fields on round spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    p = sub.add_parser("spectrum", help="eigenvalue table of one bundle")
    p.add_argument("--space", required=True, choices=[k.value for k in BundleKind])
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--j", type=int, required=True, help="spin / tensor / form degree")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--op", help="one of " + ", ".join(o.value for o in OperatorKind) + " (default: all)")
    p.add_argument("--s", type=int, help="keep only members with this s (spinor and sym spaces)")
    p.add_argument("--extrapolate-n3", action="store_true", help="evaluate U*U on Sym_0^j over S^3")
    add_format(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--j-max", type=int, default=4)
    p.add_argument("--k-max", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("branch", help="restrict an so(n) irrep to so(n-1)")
    p.add_argument("--n", type=int, required=True, help="n of the parent algebra so(n)")
    p.add_argument("--weight", required=True, help='highest weight, e.g. "5/2,3/2,1/2"')
    add_format(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("dim", help="Weyl dimension of an so(n) irrep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)
    add_format(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("killing", help="Killing tensors and Killing forms on S^n")
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--degree", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_killing)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    except (ValueError, HigherSpinError) as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    sys.stdout.write(doc.render(args.format))
    return 0 if doc.status == "ok" else 1
