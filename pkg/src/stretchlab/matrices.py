"""Exact integer matrices: characteristic polynomials, primitivity, GL_n(Z).

The characteristic polynomial is division-free (Hessenberg recurrence when
the shape allows, Berkowitz otherwise) and the determinant is fraction-free
Bareiss, so no rational rounding can occur.  Primitivity is the graph
criterion: nonnegative, strongly connected, cycle-length gcd one; the
Wielandt power test is kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import _kernels
from .poly import IntPolynomial
from .roots import (
    DEFAULT_TOL,
    NoRealRootError,
    RootEnclosure,
    ValueInterval,
    largest_real_root,
)


class PerronPreconditionError(ArithmeticError):
    """Spectral radius is not realized by a real eigenvalue."""


@dataclass(frozen=True, init=False)
class IntMatrix:
    """Immutable square matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(e) for e in row) for row in rows)
        if not data or any(len(row) != len(data) for row in data):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", data)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def is_nonnegative(self) -> bool:
        return all(e >= 0 for row in self.rows for e in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = other.transpose().rows
        return IntMatrix(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        )

    def power(self, k: int) -> "IntMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result = identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_positive(self) -> bool:
        return all(e > 0 for row in self.rows for e in row)


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(int(i == j) for j in range(n)) for i in range(n))


def matrix_to_json(a: IntMatrix) -> dict:
    return {"rows": [[str(e) for e in row] for row in a.rows]}


def matrix_from_json(data: dict) -> IntMatrix:
    if not isinstance(data, dict) or "rows" not in data:
        raise ValueError("matrix JSON must be an object with a 'rows' field")
    return IntMatrix([int(e) for e in row] for row in data["rows"])


def char_poly(a: IntMatrix) -> IntPolynomial:
    """det(tI - A), monic, exact."""
    return IntPolynomial(_kernels.charpoly(a.rows))


def determinant(a: IntMatrix) -> int:
    """Exact determinant, fraction-free."""
    return _kernels.determinant(a.rows)


def in_glnz(a: IntMatrix) -> bool:
    return determinant(a) in (1, -1)


@dataclass(frozen=True)
class PrimitivityReport:
    nonnegative: bool
    strongly_connected: bool
    period: int  # gcd of directed cycle lengths, 0 if acyclic
    primitive: bool


def is_primitive(a: IntMatrix) -> PrimitivityReport:
    """Graph-theoretic primitivity; negative entries never error, only fail."""
    nonneg = a.is_nonnegative()
    strongly_connected, period = _kernels.digraph_structure(a.rows)
    return PrimitivityReport(
        nonnegative=nonneg,
        strongly_connected=strongly_connected,
        period=period,
        primitive=nonneg and strongly_connected and period == 1,
    )


def wielandt_positive(a: IntMatrix) -> bool:
    """A^((n-1)^2 + 1) > 0, the classic primitivity oracle (nonnegative A)."""
    if not a.is_nonnegative():
        return False
    return a.power((a.n - 1) ** 2 + 1).is_positive()


def companion(p: IntPolynomial) -> IntMatrix:
    """Companion matrix with the coefficients in the last row."""
    if not p.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    n = p.degree()
    if n < 1:
        raise ValueError("companion matrix needs degree >= 1")
    rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    rows.append([-p.coeffs[j] for j in range(n)])
    return IntMatrix(rows)


def verify_block_structure(m: IntMatrix, split: int) -> bool:
    """True iff m = [[P, *], [0, F]] with P a split x split permutation matrix."""
    n = m.n
    if not 0 < split < n:
        raise ValueError("split must be strictly inside the dimension")
    for i in range(split, n):
        if any(m.rows[i][j] != 0 for j in range(split)):
            return False
    for i in range(split):
        if sorted(m.rows[i][:split]) != [0] * (split - 1) + [1]:
            return False
    for j in range(split):
        if sum(m.rows[i][j] for i in range(split)) != 1:
            return False
    return True


def spectral_radius(a: IntMatrix, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Enclosure of rho(A) as the largest real root of the char polynomial.

    For primitive A this is Perron-Frobenius; otherwise the claim that the
    spectral radius is attained by a real eigenvalue is checked numerically
    (tolerance 1e-9) and the call errors when it fails.
    """
    chi = char_poly(a)
    try:
        enclosure = largest_real_root(chi, tol)
    except NoRealRootError as exc:
        raise PerronPreconditionError(
            "no positive real eigenvalue; spectral radius is not a real root"
        ) from exc
    if not is_primitive(a).primitive:
        import numpy as np

        moduli = abs(np.linalg.eigvals(np.array(a.rows, dtype=float)))
        if float(moduli.max()) > float(enclosure.hi) + 1e-9:
            raise PerronPreconditionError(
                "a complex eigenvalue numerically exceeds the largest real root"
            )
    return enclosure


def normalized_spectral_radius(a: IntMatrix, tol: Fraction = DEFAULT_TOL) -> ValueInterval:
    """rho(A)^n by interval arithmetic, refined until the width is <= tol."""
    tol = Fraction(tol)
    enclosure = spectral_radius(a, tol)
    powered = enclosure.powered(a.n)
    while powered.width > tol:
        enclosure = enclosure.refined(enclosure.width / 256)
        powered = enclosure.powered(a.n)
    return powered
