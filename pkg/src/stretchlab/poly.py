"""Exact integer-coefficient univariate polynomials.

A polynomial is a dense tuple of arbitrary-precision integer coefficients,
constant term first, trailing zeros trimmed.  All arithmetic is exact:
addition, multiplication, division over the rationals (returned with an
integer denominator so no information is lost), gcd via the primitive
polynomial remainder sequence, square-free decomposition, and cyclotomic
polynomials by Moebius product.  Nothing in this module touches floating
point.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple


class InexactDivisionError(ArithmeticError):
    """Division did not come out over the integers (or left a remainder)."""

    def __init__(self, message: str, remainder: "IntPolynomial | None" = None):
        super().__init__(message)
        self.remainder = remainder


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of t^i.

    The zero polynomial is the empty tuple.  Instances are immutable and
    hashable, so they can key caches.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def evaluate(self, x):
        """Horner evaluation at an int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_scaled(self, num: int, den: int) -> int:
        """den^deg * p(num/den) as an exact integer; den must be positive.

        Shares the sign of p(num/den), which is all root counting needs.
        """
        if self.is_zero():
            return 0
        acc = self.coeffs[-1]
        denpow = 1
        for c in reversed(self.coeffs[:-1]):
            denpow *= den
            acc = acc * num + c * denpow
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self.eval_scaled(x.numerator, x.denominator)
        return (v > 0) - (v < 0)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content, keeping the sign of the polynomial."""
        c = self.content()
        if c <= 1:
            return self
        return IntPolynomial(a // c for a in self.coeffs)

    def reverse(self) -> "IntPolynomial":
        """t^deg * p(1/t); requires a nonzero constant term to be degree-preserving."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


def zero() -> IntPolynomial:
    return IntPolynomial()


def one() -> IntPolynomial:
    return IntPolynomial((1,))


def monomial(k: int, c: int = 1) -> IntPolynomial:
    """c * t^k."""
    return IntPolynomial((0,) * k + (c,))


class DivisionResult(NamedTuple):
    """Outcome of dividing p by q over the rationals.

    The identity ``denominator * p == quotient * q + remainder`` holds exactly
    with integer polynomials and a positive integer denominator reduced to
    lowest terms; ``exact`` flags denominator == 1, i.e. both the quotient and
    the remainder are integer polynomials for p itself.
    """

    quotient: IntPolynomial
    remainder: IntPolynomial
    denominator: int
    exact: bool


def divrem(p: IntPolynomial, q: IntPolynomial) -> DivisionResult:
    """Exact division with remainder over the rationals.

    Raises ZeroDivisionError for a zero divisor.
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    if p.degree() < q.degree():
        return DivisionResult(zero(), p, 1, True)
    lq = q.lead
    dq = q.degree()
    steps = p.degree() - dq + 1
    # Pseudo-division: lq^steps * p = Q * q + R with integer Q, R.
    rem = list(p.coeffs)
    quot = [0] * steps
    for k in range(p.degree(), dq - 1, -1):
        coef = rem[k]
        for i in range(len(rem)):
            rem[i] *= lq
        for i in range(steps):
            quot[i] *= lq
        quot[k - dq] += coef
        if coef:
            for j in range(dq + 1):
                rem[k - dq + j] -= coef * q.coeffs[j]
    den = lq**steps
    if den < 0:
        den = -den
        quot = [-c for c in quot]
        rem = [-c for c in rem]
    g = math.gcd(den, *quot, *rem)
    if g > 1:
        den //= g
        quot = [c // g for c in quot]
        rem = [c // g for c in rem]
    return DivisionResult(IntPolynomial(quot), IntPolynomial(rem), den, den == 1)


def exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """p // q when q divides p exactly over the integers; raises otherwise."""
    res = divrem(p, q)
    if not res.exact or not res.remainder.is_zero():
        raise InexactDivisionError(
            f"({p}) is not exactly divisible by ({q})", remainder=res.remainder
        )
    return res.quotient


def pseudo_rem(p: IntPolynomial, q: IntPolynomial) -> tuple[IntPolynomial, int]:
    """(prem, sign of the pseudo-division multiplier lead(q)^(deg p - deg q + 1))."""
    if q.is_zero():
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    dq = q.degree()
    lq = q.lead
    rem = list(p.coeffs)
    for k in range(p.degree(), dq - 1, -1):
        coef = rem[k] if k < len(rem) else 0
        for i in range(len(rem)):
            rem[i] *= lq
        if coef:
            for j in range(dq + 1):
                rem[k - dq + j] -= coef * q.coeffs[j]
    steps = p.degree() - dq + 1
    mult_sign = 1 if lq > 0 else (1 if steps % 2 == 0 else -1)
    return IntPolynomial(rem), mult_sign


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z with positive leading coefficient."""
    if p.is_zero():
        return q.primitive_part() if q.is_zero() or q.lead > 0 else (-q).primitive_part()
    if q.is_zero():
        return p.primitive_part() if p.lead > 0 else (-p).primitive_part()
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        r, _ = pseudo_rem(a, b)
        a, b = b, r.primitive_part()
    if a.lead < 0:
        a = -a
    return a


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if p.degree() == 0:
        return one()
    g = poly_gcd(p, p.derivative())
    core = exact_div(p.primitive_part() if p.lead > 0 else (-p).primitive_part(), g)
    if core.lead < 0:
        core = -core
    return core.primitive_part()


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition [(p1, 1), (p2, 2), ...] with p = content * prod pi^i."""
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    work = p.primitive_part()
    if work.lead < 0:
        work = -work
    if work.degree() == 0:
        return []
    out: list[tuple[IntPolynomial, int]] = []
    g = poly_gcd(work, work.derivative())
    c = exact_div(work, g)
    d = exact_div(work.derivative(), g) - c.derivative()
    i = 1
    while not (c.degree() == 0):
        step = poly_gcd(c, d)
        if step.degree() > 0:
            out.append((step, i))
        c2 = exact_div(c, step)
        d = exact_div(d, step) - c2.derivative()
        c = c2
        i += 1
    return out


# -- cyclotomic polynomials ------------------------------------------


def _factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _moebius(m: int) -> int:
    mu = 1
    for _, e in _factorize(m).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


def euler_phi(m: int) -> int:
    phi = m
    for prime in _factorize(m):
        phi -= phi // prime
    return phi


@functools.cache
def cyclotomic(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, by the Moebius product over t^d - 1.

    >>> str(cyclotomic(6))
    't^2 - t + 1'
    """
    if m < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    numerator = one()
    denominator = one()
    for d in range(1, m + 1):
        if m % d:
            continue
        mu = _moebius(m // d)
        if mu == 1:
            numerator = numerator * (monomial(d) - one())
        elif mu == -1:
            denominator = denominator * (monomial(d) - one())
    # Single division: partial quotients need not be polynomials.
    return exact_div(numerator, denominator)


@functools.cache
def _phi_sieve(limit: int) -> tuple[int, ...]:
    """Euler phi for 1..limit by sieving."""
    phi = list(range(limit + 1))
    for i in range(2, limit + 1):
        if phi[i] == i:  # prime
            for j in range(i, limit + 1, i):
                phi[j] -= phi[j] // i
    return tuple(phi)


def cyclotomic_indices_up_to_degree(deg: int) -> list[int]:
    """All m with phi(m) <= deg; search bound m <= 2*deg^2 since phi(m) >= sqrt(m/2)."""
    if deg < 1:
        return []
    limit = 2 * deg * deg
    phi = _phi_sieve(limit)
    return [m for m in range(1, limit + 1) if phi[m] <= deg]


# -- JSON wire format -------------------------------------------------


def poly_to_json(p: IntPolynomial) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(data: dict) -> IntPolynomial:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError("polynomial JSON must be an object with a 'coeffs' field")
    return IntPolynomial(int(c) for c in data["coeffs"])
