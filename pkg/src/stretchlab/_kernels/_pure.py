"""Pure-Python kernels: the reference semantics for the compiled twin.

All functions take plain nested sequences of Python ints and return plain
ints/tuples, so the two backends are interchangeable.  Everything is exact;
the compiled module speeds these up without changing a single output.
"""

from __future__ import annotations

import math

from ._common import CapExceeded

BACKEND = "pure"


# -- characteristic polynomial ----------------------------------------


def _is_upper_hessenberg(rows, n: int) -> bool:
    return all(rows[i][j] == 0 for i in range(2, n) for j in range(i - 1))


def _charpoly_hessenberg(rows, n: int) -> tuple[int, ...]:
    # det(tI - H) for upper Hessenberg H via the leading-minor recurrence:
    # p_k = (t - h_kk) p_{k-1} - sum_m h_mk (prod_{j=m..k-1} h_{j+1,j}) p_{m-1}
    polys: list[list[int]] = [[1]]
    for k in range(1, n + 1):
        h_kk = rows[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [0] * (k + 1)
        for i, c in enumerate(prev):
            cur[i + 1] += c
            if h_kk:
                cur[i] -= h_kk * c
        prod = 1
        for m in range(k - 1, 0, -1):
            prod *= rows[m][m - 1]
            if prod == 0:
                break
            h_mk = rows[m - 1][k - 1]
            if h_mk:
                coef = h_mk * prod
                for i, c in enumerate(polys[m - 1]):
                    cur[i] -= coef * c
        polys.append(cur)
    return tuple(polys[n])


def _charpoly_berkowitz(rows, n: int) -> tuple[int, ...]:
    # Division-free Berkowitz; vec holds descending coefficients.
    vec = [1, -rows[0][0]]
    for size in range(2, n + 1):
        i = size - 1
        row = rows[i]
        col = [rows[r][i] for r in range(i)]
        items = [1, -rows[i][i], -sum(row[j] * col[j] for j in range(i))]
        v = col
        for _ in range(size - 2):
            v = [sum(rows[r][c] * v[c] for c in range(i)) for r in range(i)]
            items.append(-sum(row[j] * v[j] for j in range(i)))
        new = [0] * (size + 1)
        for j in range(size + 1):
            acc = 0
            for k in range(max(0, j - size + 1), min(j, size) + 1):
                it = items[k]
                if it:
                    acc += it * vec[j - k]
            new[j] = acc
        vec = new
    return tuple(reversed(vec))


def charpoly(rows) -> tuple[int, ...]:
    """Coefficients of det(tI - A), constant term first, always monic."""
    n = len(rows)
    if n == 0:
        return (1,)
    if _is_upper_hessenberg(rows, n):
        return _charpoly_hessenberg(rows, n)
    if _is_upper_hessenberg([[rows[j][i] for j in range(n)] for i in range(n)], n):
        transposed = [[rows[j][i] for j in range(n)] for i in range(n)]
        return _charpoly_hessenberg(transposed, n)
    return _charpoly_berkowitz(rows, n)


def determinant(rows) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), -1)
            if pivot < 0:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pivot_val = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot_val - mik * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot_val
    return sign * m[n - 1][n - 1]


# -- digraph structure -------------------------------------------------


def _reachable(adj: list[int], start: int, n: int) -> int:
    seen = 1 << start
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            new = adj[u] & ~seen
            if new:
                seen |= new
                for v in range(n):
                    if new >> v & 1:
                        nxt.append(v)
        frontier = nxt
    return seen


def _sccs(adj: list[int], n: int) -> list[list[int]]:
    # Kosaraju: order by first DFS finish time, sweep the transpose.
    radj = [0] * n
    for u in range(n):
        m = adj[u]
        for v in range(n):
            if m >> v & 1:
                radj[v] |= 1 << u
    order: list[int] = []
    visited = 0
    for s in range(n):
        if visited >> s & 1:
            continue
        stack = [(s, 0)]
        visited |= 1 << s
        while stack:
            u, v0 = stack.pop()
            advanced = False
            for v in range(v0, n):
                if adj[u] >> v & 1 and not visited >> v & 1:
                    visited |= 1 << v
                    stack.append((u, v + 1))
                    stack.append((v, 0))
                    advanced = True
                    break
            if not advanced:
                order.append(u)
    seen = 0
    comps: list[list[int]] = []
    for u in reversed(order):
        if seen >> u & 1:
            continue
        comp_mask = _reachable(radj, u, n) & ~seen
        # restrict to vertices not yet assigned and reachable in transpose
        comp = [v for v in range(n) if comp_mask >> v & 1]
        # of these only those reachable via radj through unassigned vertices
        # matter; the classic sweep assigns the whole reachable set at once
        seen |= comp_mask
        comps.append(comp)
    return comps


def _scc_period(adj: list[int], comp: list[int]) -> int:
    inside = 0
    for v in comp:
        inside |= 1 << v
    root = comp[0]
    depth = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            m = adj[u] & inside
            for v in comp:
                if m >> v & 1 and v not in depth:
                    depth[v] = depth[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in comp:
        m = adj[u] & inside
        for v in comp:
            if m >> v & 1:
                g = math.gcd(g, depth[u] + 1 - depth[v])
    return g


def digraph_structure(rows) -> tuple[bool, int]:
    """(strongly connected, gcd of all directed cycle lengths; 0 if acyclic).

    Edges are the nonzero entries of the matrix.
    """
    n = len(rows)
    adj = [0] * n
    for u in range(n):
        for v in range(n):
            if rows[u][v]:
                adj[u] |= 1 << v
    comps = _sccs(adj, n)
    period = 0
    for comp in comps:
        # cycles live inside SCCs; a singleton contributes only via a loop
        if len(comp) > 1 or (adj[comp[0]] >> comp[0]) & 1:
            period = math.gcd(period, _scc_period(adj, comp))
    return len(comps) == 1, period


# -- simple cycles and clique polynomials ------------------------------


def simple_cycle_classes(rows, cap: int) -> list[tuple[int, tuple[int, ...], int]]:
    """Vertex-simple directed cycles of a nonnegative matrix, up to rotation.

    Returns (vertex mask, canonical vertex tuple, multiplicity) triples,
    multiplicity being the product of entry values along the cycle; the
    expanded curve count (sum of multiplicities) is capped by ``cap``.
    Canonical representative: rotation starting at the smallest vertex.
    """
    n = len(rows)
    classes: list[tuple[int, tuple[int, ...], int]] = []
    total = 0
    path: list[int] = []

    def extend(start: int, u: int, mask: int, mult: int):
        nonlocal total
        closing = rows[u][start]
        if closing:
            m = mult * closing
            total += m
            if total > cap:
                raise CapExceeded(f"cycle cap {cap} exceeded")
            classes.append((mask, tuple(path), m))
        for v in range(start + 1, n):
            if rows[u][v] and not mask >> v & 1:
                path.append(v)
                extend(start, v, mask | 1 << v, mult * rows[u][v])
                path.pop()

    for s in range(n):
        path = [s]
        extend(s, s, 1 << s, 1)
    classes.sort(key=lambda c: (len(c[1]), c[1]))
    return classes


def clique_polynomial_from_classes(classes, n: int, guard: int) -> tuple[int, ...]:
    """Clique polynomial coefficients (low to high) over cycle classes.

    A clique picks pairwise vertex-disjoint classes; parallel curves inside
    one class multiply the count.  Each clique contributes
    (-1)^size * (product of multiplicities) * t^(total weight).
    """
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    items = [(mask, len(verts), mult) for mask, verts, mult in classes]
    count = 0

    def rec(start: int, used: int, sign: int, weight: int, mult: int):
        nonlocal count
        for idx in range(start, len(items)):
            mask, w, m = items[idx]
            if mask & used:
                continue
            count += 1
            if count > guard:
                raise CapExceeded(f"clique guard {guard} exceeded")
            coeffs[weight + w] += sign * mult * m
            rec(idx + 1, used | mask, -sign, weight + w, mult * m)

    rec(0, 0, -1, 0, 1)
    return tuple(coeffs)


def clique_identity_holds(rows, cap: int, guard: int) -> bool:
    """Whether the clique polynomial equals t^n chi(1/t) exactly."""
    n = len(rows)
    q = clique_polynomial_from_classes(simple_cycle_classes(rows, cap), n, guard)
    chi = charpoly(rows)
    return all(q[i] == chi[n - i] for i in range(n + 1))


# -- exhaustive search scan --------------------------------------------


def decode_matrix(index: int, n: int, base: int) -> list[list[int]]:
    """Row-major big-endian digits, so index order is lexicographic order."""
    cells = n * n
    digits = [0] * cells
    for k in range(cells - 1, -1, -1):
        index, digits[k] = divmod(index, base)
    return [digits[r * n : (r + 1) * n] for r in range(n)]


def _strongly_connected_and_aperiodic(rows, n: int) -> bool:
    adj = [0] * n
    radj = [0] * n
    for u in range(n):
        row = rows[u]
        for v in range(n):
            if row[v]:
                adj[u] |= 1 << v
                radj[v] |= 1 << u
    full = (1 << n) - 1
    if _reachable(adj, 0, n) != full or _reachable(radj, 0, n) != full:
        return False
    depth = [-1] * n
    depth[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            m = adj[u]
            for v in range(n):
                if m >> v & 1 and depth[v] < 0:
                    depth[v] = depth[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in range(n):
        m = adj[u]
        for v in range(n):
            if m >> v & 1:
                g = math.gcd(g, depth[u] + 1 - depth[v])
                if g == 1:
                    return True
    return g == 1


def scan_primitive_unit_det(
    n: int, max_entry: int, start: int, stop: int, require_unit_det: bool
) -> list[int]:
    """Indices in [start, stop) whose matrix is primitive (and |det| = 1)."""
    base = max_entry + 1
    out: list[int] = []
    for idx in range(start, stop):
        rows = decode_matrix(idx, n, base)
        if any(not any(row) for row in rows):
            continue
        if not _strongly_connected_and_aperiodic(rows, n):
            continue
        if require_unit_det and abs(determinant(rows)) != 1:
            continue
        out.append(idx)
    return out
