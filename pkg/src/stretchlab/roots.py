"""Certified real-root machinery: Sturm chains and dyadic enclosures.

Root counting goes through Sturm chains on the square-free part (primitive
parts at every step keep coefficient growth in check); isolation and
refinement use pure dyadic bisection, so every certificate is a finite
integer computation.  Floating point appears only in the explicitly flagged
numeric fallbacks, never in a certificate.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .poly import (
    IntPolynomial,
    exact_div,
    poly_gcd,
    pseudo_rem,
    square_free_decomposition,
    square_free_part,
)

#: Default enclosure width, a dyadic stand-in for 1e-12.
DEFAULT_TOL = Fraction(1, 2**40)

#: t^2 - 6t + 1; its larger root is the squared silver ratio 3 + 2*sqrt(2).
SILVER_SQUARED_POLY = IntPolynomial((1, -6, 1))


class NoRealRootError(ArithmeticError):
    """The polynomial has no real root in the requested range."""


class SeparationError(ArithmeticError):
    """Two enclosures could not be separated within the refinement cap."""


def fraction_to_decimal_str(x: Fraction, sig: int = 10) -> str:
    """Render a rational to ``sig`` significant digits, deterministically."""
    with localcontext() as ctx:
        ctx.prec = sig
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d)


def dyadic_str(x: Fraction) -> str:
    """Render a dyadic rational as 'p/2^k' (or a plain integer)."""
    den = x.denominator
    if den == 1:
        return str(x.numerator)
    k = den.bit_length() - 1
    if 1 << k != den:
        return f"{x.numerator}/{den}"
    return f"{x.numerator}/2^{k}"


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain of a square-free polynomial (primitive-part sequence)."""

    chain: tuple[IntPolynomial, ...]

    def variations_at(self, x: Fraction) -> int:
        signs = [p.sign_at(x) for p in self.chain]
        nonzero = [s for s in signs if s]
        return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Number of distinct real roots in (a, b]."""
        if not a < b:
            raise ValueError("need a < b for a root count")
        return self.variations_at(a) - self.variations_at(b)


@functools.lru_cache(maxsize=4096)
def _square_free(p: IntPolynomial) -> IntPolynomial:
    return square_free_part(p)


@functools.lru_cache(maxsize=4096)
def sturm_chain(p: IntPolynomial) -> SturmChain:
    """Sturm chain of the square-free part of p."""
    f = _square_free(p)
    if f.degree() < 1:
        return SturmChain((f,))
    chain = [f, f.derivative().primitive_part()]
    while chain[-1].degree() > 0:
        rem, mult_sign = pseudo_rem(chain[-2], chain[-1])
        if rem.is_zero():
            break  # cannot happen for square-free input, kept as a guard
        nxt = rem if mult_sign < 0 else -rem
        chain.append(nxt.primitive_part())
    return SturmChain(tuple(chain))


def real_roots_in_interval(p: IntPolynomial, a, b) -> int:
    """Distinct real roots of p in (a, b]."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    return sturm_chain(p).count(Fraction(a), Fraction(b))


def cauchy_root_bound(p: IntPolynomial) -> Fraction:
    """Integer upper bound 1 + max|c_i| / |lead| for the modulus of any root."""
    if p.degree() < 1:
        raise ValueError("root bound needs a nonconstant polynomial")
    lead = abs(p.lead)
    top = max(abs(c) for c in p.coeffs[:-1])
    return Fraction(1 + (top + lead - 1) // lead)


@dataclass(frozen=True)
class RootEnclosure:
    """Dyadic interval certified (by Sturm count) to hold exactly one real root.

    ``polynomial`` is the square-free certificate: its sign changes across
    [lo, hi] and its Sturm count on (lo, hi] is one.  For a square-free input
    this is the input itself.
    """

    lo: Fraction
    hi: Fraction
    polynomial: IntPolynomial

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, sig: int = 10) -> str:
        return fraction_to_decimal_str(self.midpoint, sig)

    def __float__(self) -> float:
        return float(self.midpoint)

    def refined(self, tol: Fraction) -> "RootEnclosure":
        """Shrink the interval to width <= tol by sign bisection."""
        if self.width <= tol:
            return self
        lo, hi = _sign_bisect(self.polynomial, self.lo, self.hi, Fraction(tol))
        return RootEnclosure(lo, hi, self.polynomial)

    def powered(self, n: int) -> "ValueInterval":
        """[lo^n, hi^n]; requires a nonnegative interval."""
        if self.lo < 0:
            raise ValueError("powered() expects a nonnegative enclosure")
        return ValueInterval(self.lo**n, self.hi**n)

    def to_json(self) -> dict:
        return {
            "lo": dyadic_str(self.lo),
            "hi": dyadic_str(self.hi),
            "decimal": self.decimal(),
        }


@dataclass(frozen=True)
class ValueInterval:
    """Exact rational interval for a derived quantity (e.g. a normalized root)."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, sig: int = 10) -> str:
        return fraction_to_decimal_str(self.midpoint, sig)

    def __float__(self) -> float:
        return float(self.midpoint)

    def to_json(self) -> dict:
        return {
            "lo": dyadic_str(self.lo),
            "hi": dyadic_str(self.hi),
            "decimal": self.decimal(),
        }


def _collapse_exact_root(
    sf: IntPolynomial, root: Fraction, lo: Fraction, hi: Fraction, tol: Fraction
) -> tuple[Fraction, Fraction]:
    # root is a dyadic zero of sf strictly inside (lo, hi); keep a sign change.
    delta = tol / 4
    new_lo = max(lo, root - delta)
    new_hi = min(hi, root + delta)
    return new_lo, new_hi


def _sign_bisect(
    sf: IntPolynomial, lo: Fraction, hi: Fraction, tol: Fraction
) -> tuple[Fraction, Fraction]:
    s_lo = sf.sign_at(lo)
    s_hi = sf.sign_at(hi)
    if s_hi == 0:
        return _collapse_exact_root(sf, hi, lo, hi + tol / 4, tol)
    if s_lo == 0 or s_lo == s_hi:
        raise AssertionError("enclosure lost its sign change; this is a bug")
    while hi - lo > tol:
        m = (lo + hi) / 2
        sm = sf.sign_at(m)
        if sm == 0:
            return _collapse_exact_root(sf, m, lo, hi, tol)
        if sm == s_lo:
            lo = m
        else:
            hi = m
    return lo, hi


def largest_real_root(p: IntPolynomial, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Certified enclosure of the largest real root of p.

    The search runs over (0, CauchyBound] by Sturm-counted bisection, then
    refines by sign bisection; the caller-facing contract requires p to have
    a positive real root, and the returned interval provably contains the
    single largest one (no real root lies above it).
    """
    if p.is_zero():
        raise ValueError("largest real root of the zero polynomial")
    if p.degree() < 1:
        raise NoRealRootError("constant polynomials have no roots")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    sf = _square_free(p)
    chain = sturm_chain(p)
    bound = cauchy_root_bound(sf)
    a, b = Fraction(0), bound
    v_top = chain.variations_at(bound)
    if chain.variations_at(a) - v_top == 0:
        raise NoRealRootError(f"({p}) has no real root in (0, {bound}]")
    while True:
        above = chain.variations_at(a) - v_top
        if above == 1 and sf.sign_at(a) != 0:
            break
        m = (a + b) / 2
        if chain.variations_at(m) - v_top >= 1:
            a = m
        else:
            b = m
    lo, hi = _sign_bisect(sf, a, b, tol)
    return RootEnclosure(lo, hi, sf)


def compare_enclosures(
    e1: RootEnclosure,
    e2: RootEnclosure,
    max_rounds: int = 10,
    shrink: Fraction = Fraction(1, 256),
) -> int:
    """-1, 0, +1 ordering of the two enclosed roots, exactly.

    Disjoint intervals decide the order; equality is certified by finding a
    root of gcd of the two certificates inside the overlap.  Raises
    SeparationError if neither resolves within the refinement cap.
    """
    a, b = e1, e2
    for _ in range(max_rounds + 1):
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        g = poly_gcd(a.polynomial, b.polynomial)
        if g.degree() >= 1:
            lo = max(a.lo, b.lo)
            hi = min(a.hi, b.hi)
            if lo < hi and real_roots_in_interval(g, lo, hi) >= 1:
                return 0
        tol = min(a.width, b.width) * shrink
        a = a.refined(tol)
        b = b.refined(tol)
    raise SeparationError("enclosures neither separate nor share a certified root")


def silver_ratio_squared(tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Enclosure of 3 + 2*sqrt(2), the classification threshold, from t^2 - 6t + 1."""
    return largest_real_root(SILVER_SQUARED_POLY, tol)


def compare_power_to_silver_squared(
    base: RootEnclosure, exponent: int, max_rounds: int = 12
) -> int:
    """-1, 0, +1 for base^exponent against 3 + 2*sqrt(2), exactly.

    Values exactly on the threshold (the enclosed root is a root of
    t^(2e) - 6t^e + 1 above 1) are detected algebraically, so interval overlap
    can never be mistaken for a violation of the bound.
    """
    if base.lo < 0:
        raise ValueError("comparator expects a nonnegative enclosure")
    if exponent < 1:
        raise ValueError("comparator needs a positive exponent")
    comp = [0] * (2 * exponent + 1)
    comp[0] = 1
    comp[exponent] = -6
    comp[2 * exponent] = 1
    composed = IntPolynomial(comp)
    g = poly_gcd(base.polynomial, composed)
    if g.degree() >= 1 and real_roots_in_interval(g, base.lo, base.hi) >= 1:
        # base^exponent is 3 + 2*sqrt(2) or its reciprocal; 1 is not a root
        # of the composition, so the position against 1 settles which.
        b = base
        while not (b.lo > 1 or b.hi < 1):
            b = b.refined(b.width / 4)
        return 0 if b.lo > 1 else -1
    threshold = silver_ratio_squared()
    b = base
    for _ in range(max_rounds + 1):
        powered = b.powered(exponent)
        if powered.hi < threshold.lo:
            return -1
        if powered.lo > threshold.hi:
            return 1
        b = b.refined(b.width / 256)
        threshold = threshold.refined(threshold.width / 256)
    raise SeparationError("cannot separate the normalized value from the bound")


# -- roots on the unit circle -----------------------------------------


def _chebyshev_fold(h: IntPolynomial) -> IntPolynomial:
    """For palindromic h of degree 2m, the r with h(t) = t^m r(t + 1/t)."""
    deg = h.degree()
    if deg % 2:
        raise ValueError("chebyshev fold needs even degree")
    m = deg // 2
    # V_d(x) = t^d + t^-d under x = t + 1/t:  V_0 = 2, V_1 = x, V_d = x V_{d-1} - V_{d-2}
    x = IntPolynomial((0, 1))
    v_prev, v_cur = IntPolynomial((2,)), x
    r = IntPolynomial((h[m],))
    for d in range(1, m + 1):
        if d > 1:
            v_prev, v_cur = v_cur, x * v_cur - v_prev
        c = h[m + d]
        if c:
            r = r + v_cur * c
    return r


def _distinct_unit_roots_squarefree(q: IntPolynomial) -> int:
    count = 0
    work = q
    for root in (1, -1):
        if work.evaluate(root) == 0:
            count += 1
            work = exact_div(work, IntPolynomial((-root, 1)))
    if work.degree() < 1:
        return count
    g = poly_gcd(work, work.reverse())
    if g.degree() < 1:
        return count
    # g is palindromic with g(+-1) != 0, hence of even degree; its roots on
    # the unit circle pair off under t -> 1/t and map to real roots of the
    # fold in (-2, 2).
    r = _chebyshev_fold(g)
    return count + 2 * real_roots_in_interval(r, Fraction(-2), Fraction(2))


def unit_circle_root_count(p: IntPolynomial, method: str = "exact") -> tuple[int, str]:
    """Roots of p with |z| = 1, counted with multiplicity.

    The exact path reduces to the palindromic core gcd(q, reverse q) of each
    square-free factor and Sturm-counts the Chebyshev fold on (-2, 2); it
    applies to every integer polynomial with p(0) != 0.  The numeric path
    (modulus tolerance 1e-9) exists as an independent cross-check and is
    flagged as such.
    """
    if p.is_zero():
        raise ValueError("unit-circle count of the zero polynomial")
    if p.constant_term() == 0:
        raise ValueError("unit-circle count requires a nonzero constant term")
    if method == "numeric":
        import numpy as np

        roots = np.roots([float(c) for c in reversed(p.coeffs)])
        count = int(sum(1 for z in roots if abs(abs(z) - 1.0) <= 1e-9))
        return count, "numeric"
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")
    total = 0
    for factor, mult in square_free_decomposition(p):
        total += mult * _distinct_unit_roots_squarefree(factor)
    return total, "exact"
