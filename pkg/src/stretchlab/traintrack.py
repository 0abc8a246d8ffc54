"""Combinatorial train tracks stored as fat graphs.

A track is a set of vertices, each carrying two ordered sides of half-edges
(order = left to right in the plane), and a set of edges pairing half-edges,
each labeled real or infinitesimal.  That data suffices to compute switch
conditions, the weight space, the skew form on it, and to trace boundary
components with their cusps; no ambient surface is needed.

Standard embedding (one side of every vertex = exactly the two half-edges of
the infinitesimal polygon through it, the other side all real) is checked by
``is_standardly_embedded`` and required only by the radical constructions;
the weight space and the skew form make sense for any track.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class InvalidTrackError(ValueError):
    """The combinatorial data does not describe a train track."""


@dataclass(frozen=True)
class TrackVertex:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass(frozen=True)
class TrackEdge:
    ends: tuple[int, int]  # the two half-edge ids
    kind: str  # "real" | "inf"


@dataclass(frozen=True, init=False)
class TrainTrack:
    vertices: tuple[TrackVertex, ...]
    edges: tuple[TrackEdge, ...]

    def __init__(self, vertices: Iterable, edges: Iterable):
        vs = tuple(
            v if isinstance(v, TrackVertex) else TrackVertex(tuple(v[0]), tuple(v[1]))
            for v in vertices
        )
        es = tuple(
            e if isinstance(e, TrackEdge) else TrackEdge((e[0][0], e[0][1]), e[1])
            for e in edges
        )
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        _validate(self)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def real_edges(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.kind == "real"]

    def infinitesimal_edges(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.kind == "inf"]


def _validate(track: TrainTrack) -> None:
    from_edges: list[int] = []
    for e in track.edges:
        if e.kind not in ("real", "inf"):
            raise InvalidTrackError(f"edge kind must be 'real' or 'inf', got {e.kind!r}")
        if e.ends[0] == e.ends[1]:
            raise InvalidTrackError("an edge needs two distinct half-edge ids")
        from_edges.extend(e.ends)
    if len(set(from_edges)) != len(from_edges):
        raise InvalidTrackError("a half-edge id appears on more than one edge end")
    from_sides: list[int] = []
    for v in track.vertices:
        if not v.side_a or not v.side_b:
            raise InvalidTrackError("both sides of every vertex must be nonempty")
        from_sides.extend(v.side_a)
        from_sides.extend(v.side_b)
    if len(set(from_sides)) != len(from_sides):
        raise InvalidTrackError("a half-edge id appears on more than one side")
    if set(from_sides) != set(from_edges):
        raise InvalidTrackError("side half-edges and edge ends do not match up")


class _Geometry:
    """Derived lookups: half-edge -> edge / vertex / side / rotation."""

    def __init__(self, track: TrainTrack):
        self.track = track
        self.edge_of: dict[int, int] = {}
        self.mate: dict[int, int] = {}
        for i, e in enumerate(track.edges):
            h1, h2 = e.ends
            self.edge_of[h1] = self.edge_of[h2] = i
            self.mate[h1] = h2
            self.mate[h2] = h1
        self.vertex_of: dict[int, int] = {}
        self.side_of: dict[int, int] = {}  # 0 = side_a, 1 = side_b
        self.rotation_next: dict[int, int] = {}
        for vi, v in enumerate(track.vertices):
            for h in v.side_a:
                self.vertex_of[h] = vi
                self.side_of[h] = 0
            for h in v.side_b:
                self.vertex_of[h] = vi
                self.side_of[h] = 1
            # counterclockwise rotation: side_a right-to-left, side_b left-to-right
            rotation = tuple(reversed(v.side_a)) + v.side_b
            for a, b in zip(rotation, rotation[1:] + rotation[:1]):
                self.rotation_next[a] = b


def is_standardly_embedded(track: TrainTrack) -> bool:
    """One side per vertex = exactly two infinitesimal half-edges, the other
    all real; this makes the infinitesimal edges a disjoint union of cycles."""
    kinds = {}
    for e in track.edges:
        for h in e.ends:
            kinds[h] = e.kind
    for v in track.vertices:
        sides = (v.side_a, v.side_b)
        pure = [{kinds[h] for h in side} for side in sides]
        if any(len(p) != 1 for p in pure):
            return False
        labels = (pure[0].pop(), pure[1].pop())
        if sorted(labels) != ["inf", "real"]:
            return False
        inf_side = sides[labels.index("inf")]
        if len(inf_side) != 2:
            return False
    return True


# -- switch conditions and the weight space -----------------------------


def switch_matrix(track: TrainTrack) -> list[list[int]]:
    """Rows = vertices; entry = (#halves of e on side_a) - (#on side_b)."""
    m = [[0] * track.n_edges for _ in track.vertices]
    geom = _Geometry(track)
    for vi, v in enumerate(track.vertices):
        for h in v.side_a:
            m[vi][geom.edge_of[h]] += 1
        for h in v.side_b:
            m[vi][geom.edge_of[h]] -= 1
    return m


def _rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(map(Fraction, row)) for row in matrix]
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _kernel_basis(matrix: Sequence[Sequence[int]]) -> list[tuple[Fraction, ...]]:
    if not matrix:
        return []
    rref, pivots = _rref(matrix)
    n_cols = len(matrix[0])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class WeightSpace:
    """Exact rational basis of the solutions of all switch conditions."""

    track: TrainTrack
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(coeffs) != self.dim:
            raise ValueError("coefficient count must match the dimension")
        n = self.track.n_edges
        out = [Fraction(0)] * n
        for c, vec in zip(coeffs, self.basis):
            for i in range(n):
                out[i] += Fraction(c) * vec[i]
        return tuple(out)


def satisfies_switch_conditions(track: TrainTrack, w: Sequence) -> bool:
    if len(w) != track.n_edges:
        raise ValueError("weight vector length must match the edge count")
    m = switch_matrix(track)
    return all(sum(Fraction(c) * Fraction(x) for c, x in zip(row, w)) == 0 for row in m)


def weight_space(track: TrainTrack) -> WeightSpace:
    """ker of the switch-condition map, as an exact rational basis."""
    if not track.vertices:
        return WeightSpace(track, ())
    return WeightSpace(track, tuple(_kernel_basis(switch_matrix(track))))


# -- the skew bilinear form ---------------------------------------------


def thurston_form(track: TrainTrack, w: Sequence, w2: Sequence) -> Fraction:
    """sum over vertices and same-side pairs (e1 left of e2) of
    w_{e1} w2_{e2} - w_{e2} w2_{e1}; exact rational."""
    if not satisfies_switch_conditions(track, w) or not satisfies_switch_conditions(
        track, w2
    ):
        raise ValueError("both weight vectors must satisfy the switch conditions")
    geom = _Geometry(track)
    total = Fraction(0)
    for v in track.vertices:
        for side in (v.side_a, v.side_b):
            for i, j in itertools.combinations(range(len(side)), 2):
                e1 = geom.edge_of[side[i]]
                e2 = geom.edge_of[side[j]]
                total += Fraction(w[e1]) * Fraction(w2[e2]) - Fraction(w[e2]) * Fraction(w2[e1])
    return total


@dataclass(frozen=True)
class GramForm:
    """Matrix of the skew form in a weight-space basis."""

    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def is_antisymmetric(self) -> bool:
        return all(
            self.matrix[i][j] == -self.matrix[j][i]
            for i in range(self.dim)
            for j in range(self.dim)
        )


def gram_form(track: TrainTrack, ws: WeightSpace | None = None) -> GramForm:
    ws = ws or weight_space(track)
    rows = []
    for v in ws.basis:
        rows.append(tuple(thurston_form(track, v, u) for u in ws.basis))
    return GramForm(tuple(rows))


# -- boundary components --------------------------------------------


@dataclass(frozen=True)
class BoundaryComponent:
    """One boundary walk of the fattened track.

    ``walk`` lists departing half-edge ids; step i enters the next vertex
    through the mate of walk[i] and leaves along walk[i+1].  A cusp sits at
    position i when the transition into walk[i] stays on one side of the
    vertex (tangential corner); smooth corners cross between sides.
    """

    walk: tuple[int, ...]
    cusp_positions: tuple[int, ...]
    inner: bool  # all traversed edges infinitesimal

    @property
    def cusps(self) -> int:
        return len(self.cusp_positions)


def boundary_components(track: TrainTrack) -> tuple[BoundaryComponent, ...]:
    geom = _Geometry(track)
    step = {h: geom.rotation_next[geom.mate[h]] for h in geom.mate}
    seen: set[int] = set()
    comps = []
    for h0 in sorted(step):
        if h0 in seen:
            continue
        walk = [h0]
        seen.add(h0)
        h = step[h0]
        while h != h0:
            walk.append(h)
            seen.add(h)
            h = step[h]
        cusp_positions = []
        for i, h in enumerate(walk):
            prev = walk[i - 1]
            arrival = geom.mate[prev]
            if geom.side_of[arrival] == geom.side_of[h]:
                cusp_positions.append(i)
        inner = all(track.edges[geom.edge_of[h]].kind == "inf" for h in walk)
        comps.append(
            BoundaryComponent(tuple(walk), tuple(cusp_positions), inner)
        )
    return tuple(comps)


# -- radical -----------------------------------------------------------


def radical_element(track: TrainTrack, component: BoundaryComponent) -> tuple[int, ...]:
    """The alternating weight vector of an even-cusped boundary component:
    every edge traversed on the k-th side (cusp-to-cusp arc) picks up (-1)^k."""
    n = component.cusps
    if n == 0 or n % 2:
        raise ValueError("radical elements need an even, positive cusp count")
    geom = _Geometry(track)
    weights = [0] * track.n_edges
    positions = list(component.cusp_positions)
    length = len(component.walk)
    for k, start in enumerate(positions, start=1):
        end = positions[(k) % n]  # next cusp position, cyclically
        i = start
        sign = (-1) ** k
        while True:
            weights[geom.edge_of[component.walk[i]]] += sign
            i = (i + 1) % length
            if i == end:
                break
    result = tuple(weights)
    if not satisfies_switch_conditions(track, result):
        raise InvalidTrackError("radical element violates a switch condition")
    return result


def radical_elements(track: TrainTrack) -> list[tuple[int, ...]]:
    """r_c for every even-cusped boundary component (smooth ones skipped)."""
    out = []
    for comp in boundary_components(track):
        if comp.cusps and comp.cusps % 2 == 0:
            out.append(radical_element(track, comp))
    return out


def radical(track: TrainTrack, ws: WeightSpace | None = None) -> tuple[int, list[tuple[Fraction, ...]]]:
    """(dimension, basis in edge coordinates) of the kernel of the skew form."""
    ws = ws or weight_space(track)
    if ws.dim == 0:
        return 0, []
    gram = gram_form(track, ws)
    kernel_coords = _kernel_basis([list(row) for row in gram.matrix])
    basis = [ws.combine(coords) for coords in kernel_coords]
    return len(basis), basis


def _rank(vectors: list[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    _, pivots = _rref(vectors)
    return len(pivots)


@dataclass(frozen=True)
class RadicalReport:
    dimension: int
    element_count: int
    elements_in_weight_space: bool
    elements_in_radical: bool
    spans_equal: bool


def radical_report(track: TrainTrack) -> RadicalReport:
    """Check span{r_c} against rad(omega): containment always, equality reported."""
    ws = weight_space(track)
    dim, _ = radical(track, ws)
    elements = radical_elements(track)
    in_ws = all(satisfies_switch_conditions(track, r) for r in elements)
    in_rad = in_ws and all(
        all(thurston_form(track, r, b) == 0 for b in ws.basis) for r in elements
    )
    span_rank = _rank([tuple(map(Fraction, r)) for r in elements])
    return RadicalReport(
        dimension=dim,
        element_count=len(elements),
        elements_in_weight_space=in_ws,
        elements_in_radical=in_rad,
        spans_equal=in_rad and span_rank == dim,
    )


# -- JSON wire format ---------------------------------------------------


def track_to_json(track: TrainTrack) -> dict:
    return {
        "vertices": [
            {"sideA": list(v.side_a), "sideB": list(v.side_b)} for v in track.vertices
        ],
        "edges": [{"ends": list(e.ends), "kind": e.kind} for e in track.edges],
    }


def track_from_json(data: dict) -> TrainTrack:
    try:
        vertices = [(v["sideA"], v["sideB"]) for v in data["vertices"]]
        edges = [((e["ends"][0], e["ends"][1]), e["kind"]) for e in data["edges"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise InvalidTrackError(f"malformed track JSON: {exc}") from exc
    return TrainTrack(vertices, edges)


def track_report(track: TrainTrack) -> dict:
    """Everything the traintrack CLI emits."""
    ws = weight_space(track)
    gram = gram_form(track, ws)
    comps = boundary_components(track)
    rad_dim, _ = radical(track, ws)
    rep = radical_report(track)
    return {
        "edges": track.n_edges,
        "real_edges": len(track.real_edges()),
        "infinitesimal_edges": len(track.infinitesimal_edges()),
        "standardly_embedded": is_standardly_embedded(track),
        "weight_space_dim": ws.dim,
        "gram_antisymmetric": gram.is_antisymmetric(),
        "boundary": [
            {"length": len(c.walk), "cusps": c.cusps, "inner": c.inner} for c in comps
        ],
        "radical_dim": rad_dim,
        "radical_elements": rep.element_count,
        "radical_containment": rep.elements_in_radical,
        "radical_spans_equal": rep.spans_equal,
    }
