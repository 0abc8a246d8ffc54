"""Command-line front end.

Exit codes: 0 = success, 1 = a checked mathematical property failed
(a violation found, a bound check failed), 2 = input or parse error.
Reports are schema-stable JSON (sorted keys); certified quantities always
carry their enclosure next to the 10-significant-digit decimal.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from ._kernels import BACKEND, CapExceeded
from .classify import classify, is_salem_like, sqrt_min_poly
from .curvegraph import curve_graph_report
from .families import (
    ALL_FORMS,
    enumerate_admissible,
    monotonicity_scan,
    verify_low_degree_exceptions,
)
from .matrices import (
    IntMatrix,
    char_poly,
    determinant,
    in_glnz,
    is_primitive,
    matrix_from_json,
    normalized_spectral_radius,
    spectral_radius,
)
from .poly import IntPolynomial, poly_from_json, poly_to_json
from .roots import (
    DEFAULT_TOL,
    cauchy_root_bound,
    compare_enclosures,
    compare_power_to_silver_squared,
    largest_real_root,
    real_roots_in_interval,
    silver_ratio_squared,
    unit_circle_root_count,
)
from .search import BudgetExceededError, SearchConfig, run_search
from .sharpness import build_example, convergence_table
from .traintrack import track_from_json, track_report

SCOPE_NOTE = (
    "finite desk-scale verification; the underlying theorems cover all "
    "dimensions n >= 4 and all k"
)


class InputError(ValueError):
    """Bad user input: malformed JSON, missing file, out-of-range flag."""


def _load_json_arg(value: str) -> dict:
    """Accept inline JSON or a path to a JSON file."""
    text = value
    candidate = Path(value)
    if not value.lstrip().startswith("{") and candidate.exists():
        text = candidate.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON (inline or file): {exc}") from exc


def _parse_poly(value: str) -> IntPolynomial:
    data = _load_json_arg(value)
    try:
        return poly_from_json(data)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad polynomial: {exc}") from exc


def _parse_matrix(value: str) -> IntMatrix:
    data = _load_json_arg(value)
    try:
        return matrix_from_json(data)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad matrix: {exc}") from exc


def _parse_range(value: str) -> list[int]:
    """'2..40' or a single integer or comma list."""
    if ".." in value:
        lo, hi = value.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    if "," in value:
        return [int(v) for v in value.split(",")]
    return [int(value)]


def _emit(payload: dict, args) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    elif fmt == "csv":
        rows = payload.get("table")
        if rows is None:
            raise InputError("csv format applies only to table-producing commands")
        header = list(rows[0].keys()) if rows else []
        lines = [",".join(header)]
        lines += [",".join(str(r[h]) for h in header) for r in rows]
        text = "\n".join(lines)
    else:  # text
        text = "\n".join(_as_text(payload))
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _as_text(payload, prefix="") -> list[str]:
    lines = []
    if isinstance(payload, dict):
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{prefix}{k}:")
                lines += _as_text(v, prefix + "  ")
            else:
                lines.append(f"{prefix}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines += _as_text(v, prefix + "  ")
            else:
                lines.append(f"{prefix}- {v}")
    else:
        lines.append(f"{prefix}{payload}")
    return lines


def _spectral_class_json(sc, tol: Fraction) -> dict:
    p = sc.polynomial
    root = None
    if p.degree() >= 1 and real_roots_in_interval(p, 0, cauchy_root_bound(p)) >= 1:
        root = largest_real_root(p, tol)
    return {
        "polynomial": poly_to_json(p),
        "reciprocal": sc.reciprocal,
        "skew_reciprocal": sc.skew_reciprocal,
        "cyclotomic_part": poly_to_json(sc.cyclotomic_part),
        "core": poly_to_json(sc.core),
        "skew_up_to_cyclotomic": sc.skew_up_to_cyclotomic,
        "parity_ok": sc.parity_ok,
        "degenerate": sc.degenerate,
        "largest_real_root": root.to_json() if root else None,
    }


# -- subcommands --------------------------------------------------------


def _cmd_classify(args) -> int:
    p = _parse_poly(args.poly)
    if p.is_zero():
        raise InputError("cannot classify the zero polynomial")
    _emit(_spectral_class_json(classify(p), args.tol), args)
    return 0


def _cmd_matrix(args) -> int:
    m = _parse_matrix(args.file or args.matrix)
    report = is_primitive(m)
    chi = char_poly(m)
    payload = {
        "n": m.n,
        "char_poly": poly_to_json(chi),
        "primitivity": {
            "nonnegative": report.nonnegative,
            "strongly_connected": report.strongly_connected,
            "period": report.period,
            "primitive": report.primitive,
        },
        "det": str(determinant(m)),
        "in_glnz": in_glnz(m),
        "spectral_class": _spectral_class_json(classify(chi), args.tol),
    }
    try:
        rho = spectral_radius(m, args.tol)
        payload["spectral_radius"] = rho.to_json()
        payload["normalized_spectral_radius"] = normalized_spectral_radius(
            m, args.tol
        ).to_json()
    except ArithmeticError as exc:
        payload["spectral_radius"] = None
        payload["normalized_spectral_radius"] = None
        payload["spectral_radius_error"] = str(exc)
    _emit(payload, args)
    return 0


def _cmd_curve_graph(args) -> int:
    m = _parse_matrix(args.matrix or args.file)
    if not m.is_nonnegative():
        raise InputError("curve graphs need a nonnegative matrix")
    payload = curve_graph_report(m, args.tol)
    _emit(payload, args)
    return 0 if payload["identity_ok"] else 1


def _cmd_family(args) -> int:
    if args.scan:
        ds = _parse_range(args.d) if args.d else None
        result = monotonicity_scan(args.scan, args.n, ds, args.tol)
        payload = {
            "branch": result.branch,
            "n": result.n,
            "strictly_increasing": result.strictly_increasing,
            "table": [
                {
                    "params": "/".join(map(str, pt.params)),
                    "polynomial": str(pt.polynomial),
                    "normalized": pt.normalized.decimal(),
                }
                for pt in result.points
            ],
            "scope_note": SCOPE_NOTE,
        }
        _emit(payload, args)
        return 0 if result.strictly_increasing else 1
    forms = ALL_FORMS if args.forms in (None, "all") else tuple(args.forms.split(","))
    reports = enumerate_admissible(args.n, forms, args.tol)
    threshold = silver_ratio_squared(args.tol)
    below = [
        r for r in reports if compare_power_to_silver_squared(r.root, args.n) < 0
    ]
    payload = {
        "n": args.n,
        "forms": list(forms),
        "count": len(reports),
        "minimum": reports[0].normalized.decimal() if reports else None,
        "bound": threshold.decimal(),
        "below_bound": [str(r.polynomial) for r in below],
        "table": [
            {
                "polynomial": str(r.polynomial),
                "normalized": r.normalized.decimal(),
            }
            for r in reports
        ],
        "scope_note": SCOPE_NOTE,
    }
    _emit(payload, args)
    return 1 if (args.n >= 4 and below) else 0


def _cmd_sharpness(args) -> int:
    tol = args.tol
    if args.table:
        ks = _parse_range(args.table)
        rows = []
        for k in range(min(ks), max(ks) + 1):
            ex = build_example(k, tol)
            rows.append(
                {
                    "k": k,
                    "p_k": ex.p_k,
                    "q_k": ex.q_k,
                    "char_poly": str(ex.char_poly),
                    "normalized": ex.normalized.decimal(),
                }
            )
        payload = {"table": rows, "limit": silver_ratio_squared(tol).decimal(), "scope_note": SCOPE_NOTE}
        _emit(payload, args)
        return 0
    ex = build_example(args.k, tol)
    payload = {
        "k": ex.k,
        "p_k": ex.p_k,
        "q_k": ex.q_k,
        "char_poly": poly_to_json(ex.char_poly),
        "matrix": [[str(e) for e in row] for row in ex.matrix.rows],
        "root": ex.root.to_json(),
        "normalized": ex.normalized.to_json(),
        "exceeds_bound": True,  # build_example certifies this
    }
    _emit(payload, args)
    return 0


def _cmd_traintrack(args) -> int:
    data = _load_json_arg(args.file)
    try:
        track = track_from_json(data)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(track_report(track), args)
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(n=args.n, max_entry=args.max_entry, tol=args.tol)
    result = run_search(cfg, threads=args.threads)
    payload = {
        "n": cfg.n,
        "max_entry": cfg.max_entry,
        "count_scanned": result.count_scanned,
        "count_qualifying": result.count_qualifying,
        "classes": [
            {
                "char_poly": str(c.char_poly),
                "normalized": c.normalized.decimal(),
                "matrices": c.matrix_count,
            }
            for c in result.classes
        ],
        "minimum": None
        if result.minimum is None
        else {
            "char_poly": str(result.minimum.char_poly),
            "normalized": result.minimum.normalized.decimal(),
            "matrix": [[str(e) for e in row] for row in result.minimum.least_matrix.rows],
        },
        "violations": [
            {
                "char_poly": str(c.char_poly),
                "normalized": c.normalized.decimal(),
                "matrices": c.matrix_count,
            }
            for c in result.violations
        ],
        "bound": silver_ratio_squared(args.tol).decimal(),
        "scope_note": result.scope_note,
    }
    _emit(payload, args)
    return 1 if (args.n >= 4 and result.violations) else 0


# -- reproduction targets -------------------------------------------------


def _repro_set_theorem(tol: Fraction) -> tuple[dict, bool]:
    checks = []

    mu = largest_real_root(IntPolynomial((-1, -1, 1)), tol)
    sigma = largest_real_root(IntPolynomial((-1, -2, 1)), tol)
    mu2 = largest_real_root(IntPolynomial((1, -3, 1)), tol)
    ordering = (
        compare_enclosures(mu, sigma) == -1 and compare_enclosures(sigma, mu2) == -1
    )
    checks.append(
        {
            "check": "ordering mu < sigma < mu^2",
            "values": [mu.decimal(), sigma.decimal(), mu2.decimal()],
            "pass": ordering,
        }
    )

    q4, irr4 = sqrt_min_poly(4, 1)
    q5, irr5 = sqrt_min_poly(5, 1)
    q3, irr3 = sqrt_min_poly(3, 1)
    factor_check = IntPolynomial((-1, -1, 1)) * IntPolynomial((-1, 1, 1)) == q3
    checks.append(
        {
            "check": "square-root minimal polynomials",
            "values": [str(q4), str(q5), f"{q3} reducible"],
            "pass": irr4 and irr5 and (not irr3) and factor_check,
        }
    )

    lehmer = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
    lt = IntPolynomial((1, -1, -1, -1, 1))
    counts = (unit_circle_root_count(lehmer)[0], unit_circle_root_count(lt)[0])
    salem = is_salem_like(lehmer) and is_salem_like(lt)
    checks.append(
        {
            "check": "salem property and unit-circle counts (8, 2)",
            "values": list(counts),
            "pass": salem and counts == (8, 2),
        }
    )

    lehmer9 = largest_real_root(lehmer, tol).powered(9)
    lt3 = largest_real_root(lt, tol).powered(3)
    near = (
        abs(float(lehmer9.midpoint) - 4.311) < 1e-3
        and abs(float(lt3.midpoint) - 5.107) < 1e-3
    )
    checks.append(
        {
            "check": "normalized values ~4.311 and ~5.107",
            "values": [lehmer9.decimal(), lt3.decimal()],
            "pass": near,
        }
    )
    ok = all(c["pass"] for c in checks)
    return {"target": "set-theorem", "checks": checks, "pass": ok}, ok


def _repro_thm_main(tol: Fraction, threads: int) -> tuple[dict, bool]:
    checks = []
    threshold = silver_ratio_squared(tol)
    bound = float(threshold.midpoint)

    minima = {}
    min_floats = {}
    ok_family = True
    for n in (4, 5, 6, 7, 8, 9, 10, 12):
        reports = enumerate_admissible(n, tol=tol)
        if reports:
            value = float(reports[0].normalized.midpoint)
            minima[str(n)] = reports[0].normalized.decimal()
            min_floats[n] = value
            if value < bound - 1e-9:
                ok_family = False
        else:
            minima[str(n)] = None
    mu4 = 6.854101966249685
    at4 = 4 in min_floats and abs(min_floats[4] - mu4) < 1e-9
    ok_family = ok_family and at4
    checks.append(
        {
            "check": "family minima >= 5.8284271247 (n=4 minimum = mu^4)",
            "values": minima,
            "pass": ok_family,
        }
    )

    result = run_search(SearchConfig(n=4, max_entry=1, tol=tol), threads=threads)
    ok_search = not result.violations and result.minimum is not None
    checks.append(
        {
            "check": "exhaustive n=4, entries {0,1}: zero violations",
            "values": {
                "qualifying": result.count_qualifying,
                "minimum": result.minimum.normalized.decimal() if result.minimum else None,
            },
            "pass": ok_search,
        }
    )

    rows = convergence_table(40, tol)
    p2 = float(rows[0].normalized.midpoint)
    ok_sharp = abs(p2 - mu4) < 1e-9 and all(r.residual < 1e-9 for r in rows)
    checks.append(
        {
            "check": "sharpness family k=2..40 built and certified above the bound",
            "values": {"P_2": rows[0].normalized.decimal(), "P_40": rows[-1].normalized.decimal()},
            "pass": ok_sharp,
        }
    )

    low = verify_low_degree_exceptions(tol)
    checks.append(
        {
            "check": "low-degree exceptions mu^2, mu^3 below the bound",
            "values": {"mu^2": low.mu_squared.decimal(), "mu^3": low.mu_cubed.decimal()},
            "pass": low.ok,
        }
    )

    ok = all(c["pass"] for c in checks)
    payload = {
        "target": "thm-main",
        "bound": "5.8284271247",
        "checks": checks,
        "pass": ok,
        "scope_note": SCOPE_NOTE,
    }
    return payload, ok


def _cmd_repro(args) -> int:
    if args.target == "set-theorem":
        payload, ok = _repro_set_theorem(args.tol)
    elif args.target == "thm-main":
        payload, ok = _repro_thm_main(args.tol, args.threads)
    else:
        raise InputError(f"unknown repro target {args.target!r}")
    _emit(payload, args)
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stretch-lab",
        description="Exact spectral analysis of skew-reciprocal integer matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=Fraction, default=DEFAULT_TOL, help="enclosure width bound (default 1e-12)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", help="write the report to this path instead of stdout")

    p = sub.add_parser("classify", help="spectral classification of a polynomial")
    p.add_argument("--poly", required=True, help="inline JSON or path: {\"coeffs\": [\"c0\", ...]}")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("matrix", help="analyze one integer matrix")
    p.add_argument("--file", help="path to matrix JSON")
    p.add_argument("--matrix", help="inline matrix JSON")
    p.add_argument("--analyze", action="store_true", help="accepted for compatibility; analysis always runs")
    common(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("curve-graph", help="curve graph, clique polynomial, growth rate")
    p.add_argument("--matrix", help="matrix JSON (inline or path)")
    p.add_argument("--file", help="path to matrix JSON")
    common(p)
    p.set_defaults(func=_cmd_curve_graph)

    p = sub.add_parser("family", help="enumerate admissible family polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forms", help="comma list of 2A1,3A1,4A1,5A1,AStar2 (default all)")
    p.add_argument("--scan", help="monotonicity scan branch: 3A1, 4A1 or 5A1")
    p.add_argument("--d", help="scan parameter range, e.g. 0..5")
    p.add_argument("--report", dest="out", help="write the report to this path")
    common(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("sharpness", help="the 2k x 2k family approaching the bound")
    p.add_argument("--k", type=int)
    p.add_argument("--table", help="range of k, e.g. 2..40")
    common(p)
    p.set_defaults(func=_cmd_sharpness)

    p = sub.add_parser("traintrack", help="train-track report from a JSON file")
    p.add_argument("--file", required=True)
    p.add_argument("--report", action="store_true", help="accepted for compatibility; the report always runs")
    common(p)
    p.set_defaults(func=_cmd_traintrack)

    p = sub.add_parser("search", help="exhaustive matrix search against the bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-entry", type=int, default=1)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("repro", help="reproduce a paper-level claim end to end")
    p.add_argument("target", choices=("thm-main", "set-theorem"))
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_repro)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "matrix" and not (args.file or args.matrix):
        parser.error("matrix: one of --file/--matrix is required")
    if args.command == "curve-graph" and not (args.matrix or args.file):
        parser.error("curve-graph: one of --matrix/--file is required")
    if args.command == "sharpness" and not (args.k or args.table):
        parser.error("sharpness: one of --k/--table is required")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # a mathematical check could not be completed or failed outright
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
