"""Reciprocity predicates and the spectral classification of integer polynomials.

A polynomial is reciprocal when its roots are fixed (as a multiset) by
t -> 1/t and skew-reciprocal when fixed by t -> -1/t; both reduce to sign
conditions on the coefficient vector.  "Skew-reciprocal up to cyclotomic
factors" allows roots of unity to break the symmetry, equivalently the
polynomial splits as (product of cyclotomics) x (skew-reciprocal).  The
classifier strips the maximal cyclotomic divisor by exact trial division
and tests the cyclotomic-free core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .poly import (
    IntPolynomial,
    cyclotomic,
    cyclotomic_indices_up_to_degree,
    divrem,
    one,
)
from .roots import unit_circle_root_count


def is_reciprocal(p: IntPolynomial) -> int | None:
    """The sign eps with p(t) = eps * t^deg * p(1/t), or None."""
    if p.is_zero():
        raise ValueError("classification of the zero polynomial")
    c = p.coeffs
    d = p.degree()
    for eps in (1, -1):
        if all(c[j] == eps * c[d - j] for j in range(d + 1)):
            return eps
    return None


def is_skew_reciprocal(p: IntPolynomial) -> int | None:
    """The sign eps with p(t) = eps * t^deg * p(-1/t), or None.

    Odd degree can never satisfy the involution (roots would pair up), so it
    always returns None; a root at 0 is outside the involution's domain and
    must be stripped by the caller first.
    """
    if p.is_zero():
        raise ValueError("classification of the zero polynomial")
    if p.constant_term() == 0:
        raise ValueError("skew-reciprocity needs a nonzero constant term")
    d = p.degree()
    if d % 2:
        return None
    c = p.coeffs
    for eps in (1, -1):
        if all(c[j] == eps * (-1) ** (j % 2) * c[d - j] for j in range(d + 1)):
            return eps
    return None


def strip_cyclotomic(p: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """(maximal cyclotomic divisor with multiplicity, cyclotomic-free core).

    Trial exact division by Phi_m for every m with phi(m) <= deg(p)
    (search bound m <= 2 deg^2, since phi(m) >= sqrt(m/2)), repeating each
    Phi_m until it stops dividing.
    """
    if p.is_zero():
        raise ValueError("cannot strip the zero polynomial")
    if p.constant_term() == 0:
        raise ValueError("strip_cyclotomic needs a nonzero constant term")
    core = p
    cyclo = one()
    for m in cyclotomic_indices_up_to_degree(p.degree()):
        phi_m = cyclotomic(m)
        if phi_m.degree() > core.degree():
            continue
        while core.degree() >= phi_m.degree():
            quot, rem, _, exact = divrem(core, phi_m)
            if not exact or not rem.is_zero():
                break
            core = quot
            cyclo = cyclo * phi_m
        if core.degree() == 0:
            break
    return cyclo, core


def is_skew_reciprocal_up_to_cyclotomic(p: IntPolynomial) -> bool:
    """Whether p = (product of cyclotomics) x (skew-reciprocal polynomial).

    A root at 0 classifies as False.  A purely cyclotomic p counts as True
    (the skew factor is the constant), flagged degenerate by classify().
    """
    if p.is_zero():
        raise ValueError("classification of the zero polynomial")
    if p.constant_term() == 0:
        return False
    # p skew-reciprocal implies its cyclotomic-free core is too: the
    # involution t -> -1/t permutes roots of unity among themselves.
    if is_skew_reciprocal(p) is not None:
        return True
    _, core = strip_cyclotomic(p)
    if core.degree() == 0:
        return True
    return is_skew_reciprocal(core) is not None


def parity_condition(p: IntPolynomial) -> bool:
    """c_d + c_{k-d} even for all d; necessary for reciprocal x skew products."""
    if p.is_zero():
        raise ValueError("classification of the zero polynomial")
    c = p.coeffs
    k = p.degree()
    return all((c[d] + c[k - d]) % 2 == 0 for d in range(k + 1))


@dataclass(frozen=True)
class SpectralClass:
    """Full classification record of one integer polynomial."""

    polynomial: IntPolynomial
    reciprocal: int | None
    skew_reciprocal: int | None
    cyclotomic_part: IntPolynomial
    core: IntPolynomial
    skew_up_to_cyclotomic: bool
    parity_ok: bool
    degenerate: bool  # purely cyclotomic: spectral radius 1, never a stretch factor

    def __post_init__(self):
        assert self.cyclotomic_part * self.core == self.polynomial


def classify(p: IntPolynomial) -> SpectralClass:
    """Classify p; exact in every field.

    For p(0) = 0 the power of t joins the core (0 is not a root of unity)
    and every involution-based predicate reports absent/False.
    """
    if p.is_zero():
        raise ValueError("classification of the zero polynomial")
    reciprocal = is_reciprocal(p)
    parity_ok = parity_condition(p)
    if p.constant_term() == 0:
        order = next(i for i, c in enumerate(p.coeffs) if c)
        unit = IntPolynomial(p.coeffs[order:])
        cyclo, unit_core = strip_cyclotomic(unit)
        return SpectralClass(
            polynomial=p,
            reciprocal=reciprocal,
            skew_reciprocal=None,
            cyclotomic_part=cyclo,
            core=unit_core.shift(order),
            skew_up_to_cyclotomic=False,
            parity_ok=parity_ok,
            degenerate=False,
        )
    cyclo, core = strip_cyclotomic(p)
    skew = is_skew_reciprocal(p)
    if core.degree() == 0:
        skew_utc = True
        degenerate = True
    else:
        skew_utc = skew is not None or is_skew_reciprocal(core) is not None
        degenerate = False
    return SpectralClass(
        polynomial=p,
        reciprocal=reciprocal,
        skew_reciprocal=skew,
        cyclotomic_part=cyclo,
        core=core,
        skew_up_to_cyclotomic=skew_utc,
        parity_ok=parity_ok,
        degenerate=degenerate,
    )


def _is_perfect_square(x: int) -> bool:
    if x < 0:
        return False
    r = math.isqrt(x)
    return r * r == x


def sqrt_min_poly(p: int, q: int) -> tuple[IntPolynomial, bool]:
    """Minimal-polynomial candidate x^4 - p x^2 + q for sqrt of the larger
    root of t^2 - p t + q, plus its irreducibility over Q.

    Requires that larger root alpha to be real and > 1.  Irreducibility is
    decided by the rational-root test plus all monic integer splits into two
    quadratics (the only factorization shapes a monic quartic admits).
    """
    disc = p * p - 4 * q
    if disc < 0:
        raise ValueError(f"t^2 - {p}t + {q} has no real roots")
    # alpha = (p + sqrt(disc))/2 > 1  iff  sqrt(disc) > 2 - p
    if 2 - p >= 0 and disc <= (2 - p) ** 2:
        raise ValueError(f"largest root of t^2 - {p}t + {q} is not > 1")
    quartic = IntPolynomial((q, 0, -p, 0, 1))
    if q == 0:
        return quartic, False
    reducible = False
    for r in range(1, abs(q) + 1):
        if q % r == 0 and (quartic.evaluate(r) == 0 or quartic.evaluate(-r) == 0):
            reducible = True
            break
    if not reducible:
        # (x^2 + b)(x^2 + d): b + d = -p, bd = q
        if _is_perfect_square(disc):
            s = math.isqrt(disc)
            if (-p + s) % 2 == 0:
                reducible = True
    if not reducible and _is_perfect_square(abs(q)):
        # (x^2 + ax + b)(x^2 - ax + b): b^2 = q, a^2 = 2b + p
        root = math.isqrt(abs(q))
        if root * root == q:
            for b in (root, -root):
                if _is_perfect_square(2 * b + p):
                    reducible = True
                    break
    return quartic, not reducible


def is_salem_like(p: IntPolynomial, tol: float = 1e-9) -> bool:
    """Reciprocal with all roots except lambda^{+-1} on the unit circle.

    ``tol`` is only consumed by the numeric cross-check path of the
    unit-circle count; the default decision here is exact.
    """
    if p.is_zero():
        raise ValueError("classification of the zero polynomial")
    m = p.degree()
    if m < 4:
        return False
    if is_reciprocal(p) is None:
        return False
    count, _ = unit_circle_root_count(p)
    return count == m - 2
