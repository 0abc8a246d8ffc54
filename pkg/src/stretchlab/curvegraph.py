"""Curve graphs of nonnegative integer matrices and their clique polynomials.

The digraph of a matrix A has a_ij parallel edges from i to j.  Vertices of
the curve graph are vertex-simple directed cycles (parallel edges count as
distinct curves), adjacent when the cycles share no digraph vertex, weighted
by length.  The clique polynomial Q(t) = 1 + sum (-1)^|K| t^w(K) then equals
t^n chi_A(1/t), which ties the growth rate of the graph to the spectral
radius of A.

Enumeration works on multiplicity-compressed cycle classes (same vertex
rotation, product of entry multiplicities); parallel copies of a class are
pairwise non-adjacent, so a clique picks at most one and contributes the
class multiplicity as a factor.  Expansion to individual curves happens only
in the public cycle listing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .matrices import IntMatrix, char_poly
from .poly import IntPolynomial
from .roots import (
    DEFAULT_TOL,
    RootEnclosure,
    cauchy_root_bound,
    largest_real_root,
    real_roots_in_interval,
)

DEFAULT_CYCLE_CAP = 10**5
DEFAULT_CLIQUE_GUARD = 10**6

CapExceeded = _kernels.CapExceeded


class GrowthRateError(ArithmeticError):
    """The clique polynomial has no root in (0, 1): growth rate <= 1."""


@dataclass(frozen=True)
class MultiDigraph:
    """Digraph of a nonnegative matrix; entry a_ij = parallel edges i -> j."""

    matrix: IntMatrix

    def __post_init__(self):
        if not self.matrix.is_nonnegative():
            raise ValueError("multidigraph needs a nonnegative matrix")

    @property
    def n(self) -> int:
        return self.matrix.n

    def multiplicity(self, u: int, v: int) -> int:
        return self.matrix.rows[u][v]


@dataclass(frozen=True)
class SimpleCycle:
    """Vertex-simple directed cycle; rotation starts at the smallest vertex.

    ``edge_choices[i]`` picks which of the parallel edges realizes the step
    vertices[i] -> vertices[i+1] (wrapping), so parallel edges give distinct
    curves.
    """

    vertices: tuple[int, ...]
    edge_choices: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class CurveGraph:
    """Weighted graph of simple closed curves, adjacency = vertex-disjointness."""

    n: int
    cycles: tuple[SimpleCycle, ...]
    # (vertex mask, canonical rotation, multiplicity) per cycle class
    classes: tuple[tuple[int, tuple[int, ...], int], ...]

    def adjacent(self, i: int, j: int) -> bool:
        return not (self.cycles[i].vertex_set & self.cycles[j].vertex_set)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(len(self.cycles))
            for j in range(i + 1, len(self.cycles))
            if self.adjacent(i, j)
        ]

    def weights(self) -> tuple[int, ...]:
        return tuple(c.weight for c in self.cycles)


def cycle_classes(a: IntMatrix, cap: int = DEFAULT_CYCLE_CAP):
    if not a.is_nonnegative():
        raise ValueError("cycle enumeration needs a nonnegative matrix")
    return _kernels.simple_cycle_classes(a.rows, cap)


def simple_cycles(a: IntMatrix, cap: int = DEFAULT_CYCLE_CAP) -> list[SimpleCycle]:
    """All vertex-simple directed cycles, parallel edges expanded, sorted by
    (weight, vertex rotation, edge choices)."""
    out: list[SimpleCycle] = []
    for _, verts, _ in cycle_classes(a, cap):
        ranges = [
            range(a.rows[verts[i]][verts[(i + 1) % len(verts)]])
            for i in range(len(verts))
        ]
        for choice in itertools.product(*ranges):
            out.append(SimpleCycle(verts, choice))
    return out


def curve_graph(a: IntMatrix, cap: int = DEFAULT_CYCLE_CAP) -> CurveGraph:
    return CurveGraph(
        n=a.n,
        cycles=tuple(simple_cycles(a, cap)),
        classes=tuple(cycle_classes(a, cap)),
    )


def clique_polynomial(
    g: CurveGraph, guard: int = DEFAULT_CLIQUE_GUARD
) -> IntPolynomial:
    """Q(t) = 1 + sum over nonempty cliques K of (-1)^|K| t^(sum of weights)."""
    return IntPolynomial(
        _kernels.clique_polynomial_from_classes(list(g.classes), g.n, guard)
    )


def verify_clique_identity(
    a: IntMatrix,
    cap: int = DEFAULT_CYCLE_CAP,
    guard: int = DEFAULT_CLIQUE_GUARD,
) -> bool:
    """Exact check of Q(t) = t^n chi_A(1/t)."""
    if not a.is_nonnegative():
        raise ValueError("clique identity needs a nonnegative matrix")
    return _kernels.clique_identity_holds(a.rows, cap, guard)


def growth_rate(g: CurveGraph, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Reciprocal of the smallest positive root of the clique polynomial.

    That reciprocal is the largest real root of the reversed polynomial, so
    the certificate is a plain largest-root enclosure.  Errors when Q has no
    root in (0, 1).
    """
    q = clique_polynomial(g)
    rev = q.reverse()  # q(0) = 1, so this preserves the degree
    if rev.degree() < 1:
        raise GrowthRateError("no cycles: growth rate undefined")
    if real_roots_in_interval(rev, 1, cauchy_root_bound(rev)) == 0:
        raise GrowthRateError("clique polynomial has no root in (0, 1)")
    return largest_real_root(rev, tol)


@dataclass(frozen=True)
class GraphShape:
    """Small curve-graph shapes the classification distinguishes.

    kind "nA1": n pairwise intersecting curves (no edges); weights carries
    all n weights.  kind "A*2": three curves with exactly one disjoint pair;
    weights = (a, b, c) with a, b the adjacent pair and c the isolated one.
    Anything else reports "other".
    """

    kind: str
    weights: tuple[int, ...] = ()


def curve_graph_shape(g: CurveGraph) -> GraphShape:
    k = len(g.cycles)
    edges = g.edges()
    if k >= 1 and not edges:
        return GraphShape(kind="nA1", weights=tuple(sorted(g.weights())))
    if k == 3 and len(edges) == 1:
        i, j = edges[0]
        isolated = ({0, 1, 2} - {i, j}).pop()
        a, b = sorted((g.cycles[i].weight, g.cycles[j].weight))
        return GraphShape(kind="A*2", weights=(a, b, g.cycles[isolated].weight))
    return GraphShape(kind="other")


def curve_graph_report(a: IntMatrix, tol: Fraction = DEFAULT_TOL) -> dict:
    """Everything the curve-graph CLI emits, computed once."""
    g = curve_graph(a)
    q = clique_polynomial(g)
    shape = curve_graph_shape(g)
    identity_ok = verify_clique_identity(a)
    try:
        growth = growth_rate(g, tol)
    except GrowthRateError:
        growth = None
    return {
        "n": g.n,
        "cycles": [
            {"vertices": list(c.vertices), "edge_choices": list(c.edge_choices)}
            for c in g.cycles
        ],
        "weights": list(g.weights()),
        "edges": [list(e) for e in g.edges()],
        "clique_poly": [str(c) for c in q.coeffs],
        "char_poly": [str(c) for c in char_poly(a).coeffs],
        "growth_rate": growth.to_json() if growth else None,
        "shape": {"kind": shape.kind, "weights": list(shape.weights)},
        "identity_ok": identity_ok,
    }
