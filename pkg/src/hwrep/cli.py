"""Command-line front end: enumeration, tables, matrices, fusion, fourier, verify.

Exit codes: 0 success, 1 verification failure, 2 invalid input.  With fixed
inputs and seed the emitted bytes are identical across runs (timings are
opt-in via --timings for that reason).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .characters import character_table
from .errors import HwError, NonCanonicalLabelError, ParameterError, ResourceLimitError
from .fourier import fourier_FD, matrix_to_json, verify_fourier_relations
from .fusion import FusionRow, fuse, fusion_table
from .group import GroupElement, GroupParams, enumerate_classes
from .reps import IrrepLabel, MonomialMatrix, enumerate_irreps, irrep_matrix
from .verify import run_verification

FORMATS = ("pretty", "json", "csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hw",
        description="Exact irreps, characters, fusion rules and Fourier transforms of HW(2^s).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--s", type=int, required=True, help="number of qubits (N = 2^s)")
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--out", type=Path, default=None, help="write output to this file")

    p = sub.add_parser("irreps", help="enumerate canonical irrep labels")
    common(p)

    p = sub.add_parser("classes", help="enumerate conjugacy classes")
    common(p)

    p = sub.add_parser("chartable", help="emit the exact character table")
    common(p)
    p.add_argument("--figures", action="store_true", help="render a heatmap next to --out")

    p = sub.add_parser("matrix", help="evaluate one irrep matrix exactly")
    common(p)
    p.add_argument("--label", required=True, help="canonical label 'p,q,r'")
    p.add_argument("--element", required=True, help="group element 'm,n,l'")

    p = sub.add_parser("fuse", help="tensor-product decomposition (pair or full table)")
    common(p)
    p.add_argument("--left", help="label 'p,q,r'")
    p.add_argument("--right", help="label 'p,q,r'")

    p = sub.add_parser("fourier", help="Fourier diagonalization report for one irrep")
    common(p)
    p.add_argument("--label", required=True, help="canonical label 'p,q,r'")

    p = sub.add_parser("verify", help="run the verification suite")
    common(p)
    p.add_argument("--verify-level", choices=("full", "sampled"), default="full")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--timings", action="store_true", help="include elapsed times (non-deterministic)")
    p.add_argument("--figures", action="store_true", help="render a residual chart next to --out")

    return parser


def _to_json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_irreps(args) -> tuple[str, bool]:
    labels = enumerate_irreps(args.s)
    if args.format == "json":
        return _to_json_text([label.to_json() for label in labels]), False
    if args.format == "csv":
        rows = [
            [label.p, label.q, label.r, label.t, label.dim, label.to_json()["faithful"]]
            for label in labels
        ]
        return _csv_text(["p", "q", "r", "t", "dim", "faithful"], rows), False
    lines = [f"irreps of HW(2^{args.s}): {len(labels)}"]
    for label in labels:
        info = label.to_json()
        tag = "faithful" if info["faithful"] else "non-faithful"
        lines.append(f"  ({label})  t={label.t} dim={label.dim} {tag}")
    return "\n".join(lines) + "\n", False


def _cmd_classes(args) -> tuple[str, bool]:
    classes = enumerate_classes(GroupParams(args.s))
    if args.format == "json":
        payload = [
            {**cls.to_json(), "members": [str(g) for g in cls.members()]} for cls in classes
        ]
        return _to_json_text(payload), False
    if args.format == "csv":
        rows = [
            [cls.representative.m, cls.representative.n, cls.representative.l, cls.k, cls.size]
            for cls in classes
        ]
        return _csv_text(["m", "n", "l", "k", "size"], rows), False
    lines = [f"conjugacy classes of HW(2^{args.s}): {len(classes)}"]
    for cls in classes:
        lines.append(f"  rep=({cls.representative}) k={cls.k} size={cls.size}")
    return "\n".join(lines) + "\n", False


def _cmd_chartable(args) -> tuple[str, bool]:
    table = character_table(args.s)
    if args.figures:
        _render_figure(args, lambda path: _character_figure(table, path))
    if args.format == "json":
        return _to_json_text(table.to_json()), False
    if args.format == "csv":
        return table.to_csv_text(), False
    lines = [f"character table of HW(2^{args.s}): {len(table.irreps)} x {len(table.classes)}"]
    for label, row in zip(table.irreps, table.values):
        cells = " ".join(f"{str(cell):>8s}" for cell in row)
        lines.append(f"  ({label}): {cells}")
    return "\n".join(lines) + "\n", False


def _cmd_matrix(args) -> tuple[str, bool]:
    params = GroupParams(args.s)
    label = IrrepLabel.parse(args.label, args.s)
    element = GroupElement.parse(args.element, params)
    matrix = irrep_matrix(label, element)
    if args.format == "json":
        return _to_json_text(matrix.to_json()), False
    if args.format == "csv":
        rows = [[k, matrix.sigma[k], matrix.exps[k]] for k in range(matrix.dim)]
        return _csv_text(["row", "col", "exp"], rows), False
    return _matrix_pretty(label, element, matrix), False


def _matrix_pretty(label: IrrepLabel, element: GroupElement, matrix: MonomialMatrix) -> str:
    lines = [
        f"Gamma^({label})(z^{element.m} x^{element.n} y^{element.l}), "
        f"dim {matrix.dim}, w = exp(2*pi*i/{matrix.root_modulus})"
    ]
    width = max(len(f"w^{e}") for e in matrix.exps) + 1
    for k in range(matrix.dim):
        cells = ["." .rjust(width)] * matrix.dim
        cells[matrix.sigma[k]] = f"w^{matrix.exps[k]}".rjust(width)
        lines.append("  [" + " ".join(cells) + "]")
    return "\n".join(lines) + "\n"


def _fusion_rows_payload(rows: list[FusionRow]):
    return [row.to_json() for row in rows]


def _cmd_fuse(args) -> tuple[str, bool]:
    if (args.left is None) != (args.right is None):
        raise ParameterError("--left and --right must be given together")
    if args.left is not None:
        left = IrrepLabel.parse(args.left, args.s)
        right = IrrepLabel.parse(args.right, args.s)
        rows = [FusionRow(left, right, tuple(fuse(left, right)))]
    else:
        rows = list(fusion_table(args.s).rows)
    if args.format == "json":
        payload = _fusion_rows_payload(rows)
        return _to_json_text(payload[0] if args.left is not None else payload), False
    if args.format == "csv":
        flat = [
            [str(row.left), str(row.right), str(term.label), term.multiplicity]
            for row in rows
            for term in row.terms
        ]
        return _csv_text(["left", "right", "term", "mult"], flat), False
    lines = []
    for row in rows:
        terms = " (+) ".join(f"{t.multiplicity}*({t.label})" for t in row.terms)
        lines.append(f"({row.left}) (x) ({row.right}) = {terms}")
    return "\n".join(lines) + "\n", False


def _cmd_fourier(args) -> tuple[str, bool]:
    label = IrrepLabel.parse(args.label, args.s)
    report = verify_fourier_relations(label)
    failed = not report["passed"]
    if args.format == "json":
        payload = dict(report)
        payload["F_D"] = matrix_to_json(fourier_FD(label))
        return _to_json_text(payload), failed
    if args.format == "csv":
        rows = [["label", report["label"]], ["dim", report["dim"]], ["passed", report["passed"]]]
        rows += [[k, f"{v:.3e}"] for k, v in sorted(report["residuals"].items())]
        rows += [[k, f"{v:.3e}"] for k, v in sorted(report["informational"].items())]
        return _csv_text(["name", "value"], rows), failed
    lines = [
        f"fourier relations for ({report['label']}), dim {report['dim']}:",
        f"  orientation {report['orientation']} with rhs {report['conjugation_rhs']}",
    ]
    for key, value in sorted(report["residuals"].items()):
        lines.append(f"  {key:24s} {value:.3e}")
    for key, value in sorted(report["informational"].items()):
        lines.append(f"  [info] {key:36s} {value:.3e}")
    lines.append(f"  passed: {report['passed']}")
    return "\n".join(lines) + "\n", failed


def _cmd_verify(args) -> tuple[str, bool]:
    report = run_verification(args.s, level=args.verify_level, seed=args.seed)
    if args.figures:
        _render_figure(args, lambda path: _verify_figure(report, path))
    failed = not report.passed
    if args.format == "json":
        return _to_json_text(report.to_json(timings=args.timings)), failed
    if args.format == "csv":
        rows = [[c.name, c.status] for c in report.checks]
        rows.append(["overall", "pass" if report.passed else "fail"])
        return _csv_text(["check", "status"], rows), failed
    return "\n".join(report.pretty_lines(timings=args.timings)) + "\n", failed


def _character_figure(table, path: str) -> None:
    from . import plots

    plots.character_table_figure(table, path)


def _verify_figure(report, path: str) -> None:
    from . import plots

    plots.verify_report_figure(report, path)


def _render_figure(args, render) -> None:
    if args.out is None:
        raise ParameterError("--figures requires --out to name the figure file")
    render(str(args.out.with_suffix(".png")))


_DISPATCH = {
    "irreps": _cmd_irreps,
    "classes": _cmd_classes,
    "chartable": _cmd_chartable,
    "matrix": _cmd_matrix,
    "fuse": _cmd_fuse,
    "fourier": _cmd_fourier,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    if args.s < 1:
        print(f"error: --s must be >= 1, got {args.s}", file=sys.stderr)
        return 2
    try:
        text, failed = _DISPATCH[args.command](args)
    except (ParameterError, ResourceLimitError, NonCanonicalLabelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HwError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
