"""The 2k-by-2k family whose normalized stretch factors approach 3 + 2*sqrt(2).

For k >= 2 set p_k = k+1 (k even) or k+2 (k odd); p_k is coprime to 2k and
q_k denotes its inverse mod 2k.  The matrix is the cyclic shift P plus the
two extra ones N in the first row at columns p_k and -p_k (mod 2k); its
characteristic polynomial is exactly t^2k - t^p_k - t^(2k - p_k) - 1, it is
primitive and unimodular, and the normalized largest root P_k exceeds the
silver bound strictly while converging to it as k grows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import is_skew_reciprocal_up_to_cyclotomic, parity_condition
from .matrices import IntMatrix, char_poly, determinant, is_primitive
from .poly import IntPolynomial
from .roots import (
    DEFAULT_TOL,
    RootEnclosure,
    ValueInterval,
    compare_power_to_silver_squared,
    largest_real_root,
)


class SharpnessInvariantError(AssertionError):
    """A constructed example failed one of its certified invariants."""


def silver_parameters(k: int) -> tuple[int, int]:
    """(p_k, q_k): the twist offset and its inverse mod 2k."""
    if k < 2:
        raise ValueError("the family starts at k = 2")
    p = k + 1 if k % 2 == 0 else k + 2
    q = pow(p, -1, 2 * k)
    return p, q


def build_matrix(k: int) -> IntMatrix:
    """P + N: cyclic shift plus first-row ones at columns p_k and -p_k."""
    p, _ = silver_parameters(k)
    n = 2 * k
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[(j + 1) % n][j] = 1
    rows[0][p - 1] += 1
    rows[0][n - p - 1] += 1
    return IntMatrix(rows)


def expected_char_poly(k: int) -> IntPolynomial:
    p, _ = silver_parameters(k)
    n = 2 * k
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    coeffs[p] = -1
    coeffs[n - p] = -1
    coeffs[0] = -1
    return IntPolynomial(coeffs)


def exceeds_silver_squared(root: RootEnclosure, exponent: int) -> bool:
    """Certify root^exponent > 3 + 2*sqrt(2); exact at the boundary."""
    return compare_power_to_silver_squared(root, exponent) > 0


@dataclass(frozen=True)
class SharpnessExample:
    k: int
    p_k: int
    q_k: int
    matrix: IntMatrix
    char_poly: IntPolynomial
    root: RootEnclosure
    normalized: ValueInterval  # P_k = (largest root)^(2k)


def build_example(k: int, tol: Fraction = DEFAULT_TOL) -> SharpnessExample:
    """Construct the k-th example with every invariant checked exactly."""
    p, q = silver_parameters(k)
    matrix = build_matrix(k)
    chi = char_poly(matrix)
    expected = expected_char_poly(k)
    if chi != expected:
        raise SharpnessInvariantError(f"char poly mismatch at k={k}")
    if not is_primitive(matrix).primitive:
        raise SharpnessInvariantError(f"matrix not primitive at k={k}")
    if determinant(matrix) not in (1, -1):
        raise SharpnessInvariantError(f"matrix not in GL at k={k}")
    if not is_skew_reciprocal_up_to_cyclotomic(chi):
        raise SharpnessInvariantError(f"char poly not skew-up-to-cyclotomic at k={k}")
    if not parity_condition(chi):
        raise SharpnessInvariantError(f"parity condition fails at k={k}")
    root = largest_real_root(chi, tol)
    if not exceeds_silver_squared(root, 2 * k):
        raise SharpnessInvariantError(f"P_{k} does not exceed the silver bound")
    return SharpnessExample(
        k=k,
        p_k=p,
        q_k=q,
        matrix=matrix,
        char_poly=chi,
        root=root,
        normalized=root.powered(2 * k),
    )


def normalized_equation_residual(k: int, value: float) -> float:
    """Float residual of the defining normalized equation at P_k (numeric)."""
    half = value**0.5
    if k % 2 == 0:
        lam = value ** (1.0 / (2 * k))
        return abs(value - (lam + 1.0 / lam) * half - 1.0)
    sq = value ** (1.0 / k)
    return abs(value - (sq + 1.0 / sq) * half - 1.0)


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    p_k: int
    normalized: ValueInterval
    residual: float  # numeric restatement check, not a certificate


def convergence_table(k_max: int, tol: Fraction = DEFAULT_TOL) -> list[ConvergenceRow]:
    """P_k for k = 2..k_max with the defining-equation residual at each row."""
    if k_max < 2:
        raise ValueError("the family starts at k = 2")
    rows = []
    for k in range(2, k_max + 1):
        example = build_example(k, tol)
        value = example.normalized
        rows.append(
            ConvergenceRow(
                k=k,
                p_k=example.p_k,
                normalized=value,
                residual=normalized_equation_residual(k, float(value.midpoint)),
            )
        )
    return rows


def conjectured_minimum(k: int, tol: Fraction = DEFAULT_TOL) -> ValueInterval:
    """Normalized largest root of the conjectured minimizing polynomial.

    This is by construction the same polynomial as the k-th example's
    characteristic polynomial, so the values agree exactly.
    """
    poly = expected_char_poly(k)
    return largest_real_root(poly, tol).powered(2 * k)


def verify_conjecture_values(k_max: int, tol: Fraction = DEFAULT_TOL) -> list[tuple[int, ValueInterval]]:
    """(k, conjectured minimum) rows, asserting equality with the built family."""
    out = []
    for k in range(2, k_max + 1):
        example = build_example(k, tol)
        if example.char_poly != expected_char_poly(k):
            raise SharpnessInvariantError(f"conjecture polynomial mismatch at k={k}")
        out.append((k, example.normalized))
    return out
