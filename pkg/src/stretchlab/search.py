"""Exhaustive desk-scale searches over small nonnegative integer matrices.

A matrix qualifies when it is primitive, lies in GL_n(Z), its characteristic
polynomial is skew-reciprocal up to cyclotomic factors, and its spectral
radius exceeds 1; the search certifies that no qualifying matrix in the
scanned slice has normalized spectral radius below the silver bound
3 + 2*sqrt(2) (a violation requires strictly disjoint enclosures, so interval
overlap can never produce a false positive).

The scan is embarrassingly parallel over index ranges; survivors of the
cheap compiled filter are classified once per distinct characteristic
polynomial, and the argmin tie-break is the lexicographically least entry
tuple, so results are independent of worker count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from . import _kernels
from .classify import classify, is_skew_reciprocal_up_to_cyclotomic
from .matrices import IntMatrix, char_poly, determinant, in_glnz, is_primitive
from .poly import IntPolynomial
from .roots import (
    DEFAULT_TOL,
    RootEnclosure,
    ValueInterval,
    cauchy_root_bound,
    compare_enclosures,
    compare_power_to_silver_squared,
    largest_real_root,
    real_roots_in_interval,
)

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "STRETCHLAB_BUDGET"


class BudgetExceededError(RuntimeError):
    """The requested search space exceeds the configured budget."""


def _budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class SearchConfig:
    n: int
    max_entry: int
    require_glnz: bool = True
    require_primitive: bool = True
    require_skew_up_to_cyclotomic: bool = True
    tol: Fraction = DEFAULT_TOL

    @property
    def space_size(self) -> int:
        return (self.max_entry + 1) ** (self.n * self.n)


@dataclass(frozen=True)
class QualifyingClass:
    """All qualifying matrices sharing one characteristic polynomial."""

    char_poly: IntPolynomial
    root: RootEnclosure
    normalized: ValueInterval
    matrix_count: int
    least_matrix: IntMatrix


@dataclass(frozen=True)
class SearchResult:
    config: SearchConfig
    count_scanned: int
    count_qualifying: int
    classes: tuple[QualifyingClass, ...]
    minimum: QualifyingClass | None
    violations: tuple[QualifyingClass, ...]
    scope_note: str = (
        "finite desk-scale slice; the theorem itself covers every dimension >= 4"
    )


def _scan_chunk(args) -> list[int]:
    n, max_entry, start, stop = args
    return _kernels.scan_primitive_unit_det(n, max_entry, start, stop, True)


def _survivor_indices(cfg: SearchConfig, threads: int) -> list[int]:
    total = cfg.space_size
    if threads <= 1:
        return _kernels.scan_primitive_unit_det(cfg.n, cfg.max_entry, 0, total, True)
    chunks = []
    step = max(1, total // (threads * 8))
    start = 0
    while start < total:
        stop = min(total, start + step)
        chunks.append((cfg.n, cfg.max_entry, start, stop))
        start = stop
    with Pool(threads) as pool:
        parts = pool.map(_scan_chunk, chunks)
    return [idx for part in parts for idx in part]


def _slow_filter(cfg: SearchConfig) -> list[int]:
    out = []
    for idx in range(cfg.space_size):
        rows = _kernels.decode_matrix(idx, cfg.n, cfg.max_entry + 1)
        m = IntMatrix(rows)
        if cfg.require_primitive and not is_primitive(m).primitive:
            continue
        if cfg.require_glnz and not in_glnz(m):
            continue
        out.append(idx)
    return out


def run_search(cfg: SearchConfig, threads: int = 1) -> SearchResult:
    """Exhaustive scan of all (max_entry+1)^(n^2) matrices."""
    total = cfg.space_size
    if total > _budget():
        raise BudgetExceededError(
            f"search space {total} exceeds budget {_budget()}; "
            f"raise {BUDGET_ENV} to override"
        )
    if cfg.require_primitive and cfg.require_glnz:
        survivors = _survivor_indices(cfg, threads)
    else:
        survivors = _slow_filter(cfg)

    base = cfg.max_entry + 1
    by_poly: dict[tuple[int, ...], list[int]] = {}
    for idx in survivors:
        rows = _kernels.decode_matrix(idx, cfg.n, base)
        chi = _kernels.charpoly(rows)
        by_poly.setdefault(chi, []).append(idx)

    classes: list[QualifyingClass] = []
    count_qualifying = 0
    for coeffs in sorted(by_poly):
        poly = IntPolynomial(coeffs)
        if cfg.require_skew_up_to_cyclotomic and not is_skew_reciprocal_up_to_cyclotomic(poly):
            continue
        if real_roots_in_interval(poly, 1, cauchy_root_bound(poly)) == 0:
            continue  # spectral radius not > 1
        root = largest_real_root(poly, cfg.tol)
        indices = by_poly[coeffs]
        count_qualifying += len(indices)
        least = IntMatrix(_kernels.decode_matrix(min(indices), cfg.n, base))
        classes.append(
            QualifyingClass(
                char_poly=poly,
                root=root,
                normalized=root.powered(cfg.n),
                matrix_count=len(indices),
                least_matrix=least,
            )
        )

    minimum = None
    if classes:
        best = [classes[0]]
        for cls in classes[1:]:
            cmp = compare_enclosures(cls.root, best[0].root)
            if cmp < 0:
                best = [cls]
            elif cmp == 0:
                best.append(cls)
        minimum = min(best, key=lambda c: c.least_matrix.rows)

    violations = [
        cls for cls in classes if compare_power_to_silver_squared(cls.root, cfg.n) < 0
    ]

    return SearchResult(
        config=cfg,
        count_scanned=total,
        count_qualifying=count_qualifying,
        classes=tuple(classes),
        minimum=minimum,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class WitnessReport:
    matrix: IntMatrix
    nonnegative: bool
    primitivity: object
    det: int
    in_glnz: bool
    char_poly: IntPolynomial
    spectral_class: object
    root: RootEnclosure | None
    normalized: ValueInterval | None
    qualifies: bool
    below_threshold: bool | None


def witness_check(a: IntMatrix, tol: Fraction = DEFAULT_TOL) -> WitnessReport:
    """Run the full qualification pipeline on a single matrix."""
    report = is_primitive(a)
    det = determinant(a)
    chi = char_poly(a)
    spectral = classify(chi)
    root = None
    normalized = None
    below = None
    qualifies = (
        report.primitive
        and det in (1, -1)
        and spectral.skew_up_to_cyclotomic
        and real_roots_in_interval(chi, 1, cauchy_root_bound(chi)) >= 1
    )
    if qualifies:
        root = largest_real_root(chi, tol)
        normalized = root.powered(a.n)
        below = compare_power_to_silver_squared(root, a.n) < 0
    return WitnessReport(
        matrix=a,
        nonnegative=report.nonnegative,
        primitivity=report,
        det=det,
        in_glnz=det in (1, -1),
        char_poly=chi,
        spectral_class=spectral,
        root=root,
        normalized=normalized,
        qualifies=qualifies,
        below_threshold=below,
    )
