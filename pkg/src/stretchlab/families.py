"""The five polynomial families behind the classification of small spectra.

Each family is a curve-graph shape with weights (a, b, ...); its clique
polynomial Q determines the candidate characteristic polynomial
P(t) = t^n Q(1/t).  Forms carry the curve-graph weights:

    2A1..5A1 : Q = 1 - t^a - t^b - ...          (k pairwise intersecting curves)
    A*2      : Q = 1 - t^a - t^b - t^c + t^(a+b) (a, b disjoint; c isolated)

with the instantiation constraint that the top exponent of Q equals n.
Admissibility filters candidates through the parity condition, a
primitivity-compatibility check (not a polynomial in t^d, d > 1 - necessary,
not sufficient), and skew-reciprocity up to cyclotomic factors; survivors
get certified normalized largest-root enclosures.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    is_skew_reciprocal,
    is_skew_reciprocal_up_to_cyclotomic,
    parity_condition,
    strip_cyclotomic,
)
from .poly import IntPolynomial, exact_div
from .roots import (
    DEFAULT_TOL,
    RootEnclosure,
    ValueInterval,
    cauchy_root_bound,
    compare_enclosures,
    largest_real_root,
    real_roots_in_interval,
    silver_ratio_squared,
)

A_ONE_SIZES = {"2A1": 2, "3A1": 3, "4A1": 4, "5A1": 5}
ALL_FORMS = ("2A1", "3A1", "4A1", "5A1", "AStar2")
DEFAULT_DEGREE_CAP = 16

# re-exported here because the case analyses quote exact quotients R(t)
quotient_exact = exact_div


@dataclass(frozen=True)
class FamilyForm:
    """One parameter choice for one of the five shapes.

    For kA1 the params are the k-1 lower curve weights (the top weight is
    pinned to n at instantiation).  For A*2 the params are (a, b, c) with
    a, b the adjacent pair and c isolated; max(c, a+b) must equal n.
    """

    tag: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in ALL_FORMS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        expected = 3 if self.tag == "AStar2" else A_ONE_SIZES[self.tag] - 1
        if len(self.params) != expected:
            raise ValueError(f"{self.tag} takes {expected} parameters")
        if any(p < 1 for p in self.params):
            raise ValueError("family parameters must be positive")


def instantiate(form: FamilyForm, n: int) -> IntPolynomial:
    """P(t) = t^n Q_form(1/t), the reciprocal of the clique polynomial."""
    if n < 1:
        raise ValueError("degree must be positive")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if form.tag == "AStar2":
        a, b, c = form.params
        if max(c, a + b) != n or max(a, b, c) > n:
            raise ValueError("A*2 needs max(c, a + b) = n with weights <= n")
        coeffs[n - a] -= 1
        coeffs[n - b] -= 1
        coeffs[n - c] -= 1
        coeffs[n - a - b] += 1
    else:
        exponents = form.params + (n,)
        if max(exponents) > n:
            raise ValueError("a curve weight exceeds the matrix dimension")
        for e in exponents:
            coeffs[n - e] -= 1
    return IntPolynomial(coeffs)


def primitivity_compatible(p: IntPolynomial) -> bool:
    """p is not a polynomial in t^d for any d > 1.

    Necessary (not sufficient) for being the characteristic polynomial of a
    primitive matrix: gcd over the exponents of the nonconstant terms is 1.
    """
    if p.is_zero():
        raise ValueError("primitivity compatibility of the zero polynomial")
    g = 0
    for i in range(1, p.degree() + 1):
        if p.coeffs[i]:
            g = math.gcd(g, i)
            if g == 1:
                return True
    return g == 1


@dataclass(frozen=True)
class AdmissibilityReport:
    polynomial: IntPolynomial
    parity_ok: bool
    primitivity_compatible: bool
    skew_up_to_cyclotomic: bool
    root: RootEnclosure | None
    normalized: ValueInterval | None

    @property
    def admissible(self) -> bool:
        return (
            self.parity_ok
            and self.primitivity_compatible
            and self.skew_up_to_cyclotomic
            and self.root is not None
        )


def admissibility_report(p: IntPolynomial, tol: Fraction = DEFAULT_TOL) -> AdmissibilityReport:
    """Run the full filter pipeline on one candidate polynomial."""
    parity = parity_condition(p)
    prim = primitivity_compatible(p)
    skew = p.constant_term() != 0 and is_skew_reciprocal_up_to_cyclotomic(p)
    root = None
    normalized = None
    if parity and prim and skew:
        if real_roots_in_interval(p, 1, cauchy_root_bound(p)) >= 1:
            root = largest_real_root(p, tol)
            normalized = root.powered(p.degree())
    return AdmissibilityReport(
        polynomial=p,
        parity_ok=parity,
        primitivity_compatible=prim,
        skew_up_to_cyclotomic=skew,
        root=root,
        normalized=normalized,
    )


def _form_instances(tag: str, n: int):
    if tag == "AStar2":
        seen = set()
        for a in range(1, n):
            for b in range(a, n - a + 1):
                # branch c = n, a + b <= n; branch a + b = n, any c
                if a + b <= n:
                    seen.add((a, b, n))
                if a + b == n:
                    for c in range(1, n + 1):
                        seen.add((a, b, c))
        for params in sorted(seen):
            yield FamilyForm("AStar2", params)
    else:
        k = A_ONE_SIZES[tag]
        for lows in itertools.combinations_with_replacement(range(1, n + 1), k - 1):
            yield FamilyForm(tag, lows)


def enumerate_admissible(
    n: int,
    forms=ALL_FORMS,
    tol: Fraction = DEFAULT_TOL,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> list[AdmissibilityReport]:
    """Admissible candidates over the requested forms at degree n,
    deduplicated by polynomial, sorted by normalized largest root."""
    if n < 2:
        raise ValueError("enumeration needs degree >= 2")
    if n > degree_cap:
        raise ValueError(f"degree {n} exceeds the enumeration cap {degree_cap}")
    seen: set[tuple[int, ...]] = set()
    reports: list[AdmissibilityReport] = []
    for tag in forms:
        for form in _form_instances(tag, n):
            p = instantiate(form, n)
            if p.coeffs in seen:
                continue
            seen.add(p.coeffs)
            report = admissibility_report(p, tol)
            if report.admissible:
                reports.append(report)
    reports.sort(key=lambda r: (r.normalized.midpoint, r.polynomial.coeffs))
    return reports


# -- monotonicity scans of the symmetric-exponent branches -------------


def _scan_polynomial(branch: str, g: int, params: tuple[int, ...]) -> IntPolynomial:
    coeffs = [0] * (2 * g + 1)
    coeffs[2 * g] = 1
    coeffs[0] -= 1
    if branch == "3A1":
        (d,) = params
        coeffs[g + d] -= 1
        coeffs[g - d] -= 1
    elif branch == "4A1":
        (d,) = params
        coeffs[g + d] -= 1
        coeffs[g] -= 1
        coeffs[g - d] -= 1
    elif branch == "5A1":
        a, b = params
        coeffs[g + a] -= 1
        coeffs[g + b] -= 1
        coeffs[g - b] -= 1
        coeffs[g - a] -= 1
    else:
        raise ValueError(f"unknown scan branch {branch!r}")
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class ScanPoint:
    params: tuple[int, ...]
    polynomial: IntPolynomial
    root: RootEnclosure
    normalized: ValueInterval


@dataclass(frozen=True)
class ScanResult:
    branch: str
    n: int
    points: tuple[ScanPoint, ...]
    strictly_increasing: bool


def monotonicity_scan(
    branch: str,
    n: int,
    d_values=None,
    tol: Fraction = DEFAULT_TOL,
) -> ScanResult:
    """Largest-root enclosures along a symmetric-exponent grid.

    Branches: 3A1 is t^2g - t^(g+d) - t^(g-d) - 1; 4A1 adds the middle
    -t^g; 5A1 is the two-parameter t^2g - t^(g+a) - t^(g+b) - t^(g-b)
    - t^(g-a) - 1 scanned over the (a, b) grid.  Strict increase is
    certified pointwise by disjoint enclosures (refined geometrically, as in
    compare_enclosures); an unresolvable pair raises SeparationError.
    """
    if n % 2 or n < 4:
        raise ValueError("scans need even n >= 4")
    g = n // 2
    if d_values is None:
        d_values = range(0, g)
    ds = sorted(set(int(d) for d in d_values))
    if any(d < 0 or d >= g for d in ds):
        raise ValueError("scan parameters must satisfy 0 <= d < n/2")
    points: list[ScanPoint] = []
    if branch == "5A1":
        grid = [(a, b) for a in ds for b in ds if a <= b]
        grid.sort()
        for a, b in grid:
            p = _scan_polynomial(branch, g, (a, b))
            root = largest_real_root(p, tol)
            points.append(ScanPoint((a, b), p, root, root.powered(n)))
        by_params = {pt.params: pt for pt in points}
        increasing = True
        for a, b in grid:
            for nxt in ((a + 1, b), (a, b + 1)):
                key = tuple(sorted(nxt))
                if nxt[0] in ds and nxt[1] in ds and key in by_params:
                    cmp = compare_enclosures(by_params[(a, b)].root, by_params[key].root)
                    if cmp != -1:
                        increasing = False
    else:
        for d in ds:
            p = _scan_polynomial(branch, g, (d,))
            root = largest_real_root(p, tol)
            points.append(ScanPoint((d,), p, root, root.powered(n)))
        increasing = True
        for prev, cur in zip(points, points[1:]):
            if compare_enclosures(prev.root, cur.root) != -1:
                increasing = False
    return ScanResult(branch=branch, n=n, points=tuple(points), strictly_increasing=increasing)


# -- low-degree exceptional values --------------------------------------


@dataclass(frozen=True)
class LowDegreeReport:
    """The n = 2 and n = 3 exceptions below the degree >= 4 bound."""

    mu_squared: ValueInterval
    mu_cubed: ValueInterval
    n2_skew_sign: int | None
    n3_skew_up_to_cyclotomic: bool
    n3_core: IntPolynomial
    below_bound: bool
    excluded_at_4: tuple[tuple[IntPolynomial, str], ...]
    ok: bool


def verify_low_degree_exceptions(tol: Fraction = DEFAULT_TOL) -> LowDegreeReport:
    """n=2: t^2-t-1 (mu^2); n=3: t^3-2t-1 (mu^3); both below the silver
    bound, with their degree-4 analogues excluded by the filters."""
    p2 = IntPolynomial((-1, -1, 1))
    p3 = IntPolynomial((-1, -2, 0, 1))
    sign2 = is_skew_reciprocal(p2)
    skew3 = is_skew_reciprocal_up_to_cyclotomic(p3)
    _, core3 = strip_cyclotomic(p3)
    root2 = largest_real_root(p2, tol)
    root3 = largest_real_root(p3, tol)
    mu2 = root2.powered(2)
    mu3 = root3.powered(3)
    threshold = silver_ratio_squared(tol)
    below = mu2.hi < threshold.lo and mu3.hi < threshold.lo
    q1 = IntPolynomial((-1, 0, 0, -1, 1))  # t^4 - t^3 - 1
    q2 = IntPolynomial((-1, -2, 0, 0, 1))  # t^4 - 2t - 1
    excluded = []
    if not parity_condition(q1):
        excluded.append((q1, "parity"))
    if parity_condition(q2) and not is_skew_reciprocal_up_to_cyclotomic(q2):
        excluded.append((q2, "skew_up_to_cyclotomic"))
    admissible_4 = {r.polynomial.coeffs for r in enumerate_admissible(4)}
    ok = (
        sign2 == -1
        and skew3
        and core3 == p2
        and below
        and len(excluded) == 2
        and q1.coeffs not in admissible_4
        and q2.coeffs not in admissible_4
    )
    return LowDegreeReport(
        mu_squared=mu2,
        mu_cubed=mu3,
        n2_skew_sign=sign2,
        n3_skew_up_to_cyclotomic=skew3,
        n3_core=core3,
        below_bound=below,
        excluded_at_4=tuple(excluded),
        ok=ok,
    )
