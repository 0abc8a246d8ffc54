# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels.  stretchlab._kernels._pure defines the semantics;
this module only makes the hot paths fast.  Every function falls back to
the pure twin whenever its fixed-width fast path cannot be certified
overflow-free, so outputs are bit-identical across backends."""

from libc.stdint cimport int64_t, uint64_t

from . import _pure
from ._common import CapExceeded

BACKEND = "compiled"

decode_matrix = _pure.decode_matrix
digraph_structure = _pure.digraph_structure

# fast paths handle n <= 8 (matrices) / 64 cells; everything bigger delegates
cdef int64_t I64_GUARD = <int64_t>1 << 61


cdef int64_t _gcd64(int64_t a, int64_t b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


# -- characteristic polynomial (int64 Berkowitz fast path) -------------


def _fits_i64_charpoly(int n, object emax):
    if emax == 0:
        emax = 1
    b_item = n ** max(n - 1, 1) * emax ** n * n
    b_coef = 2 ** n * (n * emax * emax) ** (n // 2 + 1)
    return (n + 1) * b_item * b_coef < (1 << 61)


cdef void _berkowitz_i64(const int64_t* m, int n, int64_t* out) noexcept nogil:
    cdef int64_t vec[9]
    cdef int64_t newv[9]
    cdef int64_t items[9]
    cdef int64_t v[8]
    cdef int64_t w[8]
    cdef int size, i, j, k, r, c, lo, hi
    cdef int64_t acc
    vec[0] = 1
    vec[1] = -m[0]
    for size in range(2, n + 1):
        i = size - 1
        items[0] = 1
        items[1] = -m[i * n + i]
        for r in range(i):
            v[r] = m[r * n + i]
        acc = 0
        for j in range(i):
            acc += m[i * n + j] * v[j]
        items[2] = -acc
        for k in range(size - 2):
            for r in range(i):
                acc = 0
                for c in range(i):
                    acc += m[r * n + c] * v[c]
                w[r] = acc
            for r in range(i):
                v[r] = w[r]
            acc = 0
            for j in range(i):
                acc += m[i * n + j] * v[j]
            items[3 + k] = -acc
        for j in range(size + 1):
            acc = 0
            lo = j - size + 1
            if lo < 0:
                lo = 0
            hi = j if j < size else size
            for k in range(lo, hi + 1):
                if items[k] != 0:
                    acc += items[k] * vec[j - k]
            newv[j] = acc
        for j in range(size + 1):
            vec[j] = newv[j]
    for j in range(n + 1):
        out[j] = vec[n - j]


def charpoly(rows):
    cdef int n = len(rows)
    cdef int i
    cdef int64_t m[64]
    cdef int64_t out[9]
    if n == 0 or n > 8:
        return _pure.charpoly(rows)
    emax = 0
    flat = []
    for row in rows:
        for e in row:
            flat.append(e)
            if -e > emax:
                emax = -e
            elif e > emax:
                emax = e
    if emax > 99 or not _fits_i64_charpoly(n, emax):
        return _pure.charpoly(rows)
    for i in range(n * n):
        m[i] = flat[i]
    _berkowitz_i64(m, n, out)
    return tuple(out[i] for i in range(n + 1))


# -- determinant (int64 Bareiss fast path) -----------------------------


def _fits_i64_det(int n, object emax):
    if emax == 0:
        return True
    # Hadamard bound on every minor; Bareiss multiplies two of them.
    return (n * emax * emax) ** ((n + 1) // 2) < (1 << 31) - 1


cdef int64_t _det_i64(int64_t* m, int n) noexcept nogil:
    cdef int sign = 1
    cdef int64_t prev = 1, pivot_val, mik, tmp
    cdef int k, i, j, pivot
    for k in range(n - 1):
        if m[k * n + k] == 0:
            pivot = -1
            for i in range(k + 1, n):
                if m[i * n + k] != 0:
                    pivot = i
                    break
            if pivot < 0:
                return 0
            for j in range(n):
                tmp = m[k * n + j]
                m[k * n + j] = m[pivot * n + j]
                m[pivot * n + j] = tmp
            sign = -sign
        pivot_val = m[k * n + k]
        for i in range(k + 1, n):
            mik = m[i * n + k]
            for j in range(k + 1, n):
                m[i * n + j] = (m[i * n + j] * pivot_val - mik * m[k * n + j]) // prev
            m[i * n + k] = 0
        prev = pivot_val
    return sign * m[(n - 1) * n + (n - 1)]


def determinant(rows):
    cdef int n = len(rows)
    cdef int i
    cdef int64_t m[64]
    if n == 0:
        return 1
    if n > 8:
        return _pure.determinant(rows)
    emax = 0
    flat = []
    for row in rows:
        for e in row:
            flat.append(e)
            if -e > emax:
                emax = -e
            elif e > emax:
                emax = e
    if not _fits_i64_det(n, emax):
        return _pure.determinant(rows)
    for i in range(n * n):
        m[i] = flat[i]
    return _det_i64(m, n)


# -- simple cycles ------------------------------------------------------


cdef int _cycles_rec(const int64_t* m, int n, int s, int u, uint64_t mask,
                     int64_t mult, list path, list classes,
                     int64_t* total, int64_t cap) except -1:
    cdef int64_t closing = m[u * n + s]
    cdef int v
    if closing:
        total[0] += mult * closing
        if total[0] > cap:
            raise CapExceeded(f"cycle cap {cap} exceeded")
        classes.append((mask, tuple(path), mult * closing))
    for v in range(s + 1, n):
        if m[u * n + v] and not (mask >> v) & 1:
            path.append(v)
            _cycles_rec(m, n, s, v, mask | ((<uint64_t>1) << v),
                        mult * m[u * n + v], path, classes, total, cap)
            path.pop()
    return 0


def _class_key(c):
    return (len(c[1]), c[1])


def simple_cycle_classes(rows, cap):
    cdef int n = len(rows)
    cdef int i, s
    cdef int64_t m[64]
    cdef int64_t total = 0
    cdef int64_t ccap
    if n > 8:
        return _pure.simple_cycle_classes(rows, cap)
    emax = 0
    flat = []
    for row in rows:
        for e in row:
            flat.append(e)
            if e > emax:
                emax = e
            if e < 0:
                return _pure.simple_cycle_classes(rows, cap)
    if (emax or 1) ** n >= I64_GUARD or cap >= I64_GUARD:
        return _pure.simple_cycle_classes(rows, cap)
    ccap = cap
    for i in range(n * n):
        m[i] = flat[i]
    classes = []
    for s in range(n):
        _cycles_rec(m, n, s, s, (<uint64_t>1) << s, 1, [s], classes, &total, ccap)
    classes.sort(key=_class_key)
    return classes


# -- clique polynomial ---------------------------------------------------


cdef int _clique_rec_i64(const uint64_t* masks, const int* weights,
                         const int64_t* mults, int nc, int start, uint64_t used,
                         int sign, int weight, int64_t mult, int64_t* coeffs,
                         int64_t* count, int64_t guard) noexcept nogil:
    # returns 0 ok, 1 guard exceeded, 2 overflow risk (redo in objects)
    cdef int idx, rc, w
    cdef int64_t m, contrib, cur
    for idx in range(start, nc):
        if masks[idx] & used:
            continue
        count[0] += 1
        if count[0] > guard:
            return 1
        m = mults[idx]
        if mult > I64_GUARD // m:
            return 2
        contrib = mult * m
        w = weight + weights[idx]
        cur = coeffs[w]
        if cur > I64_GUARD - contrib or cur < -I64_GUARD + contrib:
            return 2
        coeffs[w] = cur + sign * contrib
        rc = _clique_rec_i64(masks, weights, mults, nc, idx + 1,
                             used | masks[idx], -sign, w, contrib,
                             coeffs, count, guard)
        if rc:
            return rc
    return 0


def clique_polynomial_from_classes(classes, n, guard):
    cdef int nc = len(classes)
    cdef int i, rc, cn
    cdef int64_t count = 0
    cdef uint64_t masks[512]
    cdef int weights[512]
    cdef int64_t mults[512]
    cdef int64_t coeffs[65]
    if nc > 512 or n > 64 or guard >= I64_GUARD:
        return _pure.clique_polynomial_from_classes(classes, n, guard)
    cn = n
    for i in range(nc):
        mask, verts, mult = classes[i]
        if mult >= I64_GUARD or mask >= I64_GUARD:
            return _pure.clique_polynomial_from_classes(classes, n, guard)
        masks[i] = mask
        weights[i] = len(verts)
        mults[i] = mult
    for i in range(cn + 1):
        coeffs[i] = 0
    coeffs[0] = 1
    rc = _clique_rec_i64(masks, weights, mults, nc, 0, 0, -1, 0, 1,
                         coeffs, &count, guard)
    if rc == 1:
        raise CapExceeded(f"clique guard {guard} exceeded")
    if rc == 2:
        return _pure.clique_polynomial_from_classes(classes, n, guard)
    return tuple(coeffs[i] for i in range(cn + 1))


def clique_identity_holds(rows, cap, guard):
    cdef int n = len(rows)
    cdef int i
    q = clique_polynomial_from_classes(simple_cycle_classes(rows, cap), n, guard)
    chi = charpoly(rows)
    for i in range(n + 1):
        if q[i] != chi[n - i]:
            return False
    return True


# -- exhaustive search scan ----------------------------------------------


cdef bint _sc_and_aperiodic(const int64_t* m, int n) noexcept nogil:
    cdef uint64_t adj[8]
    cdef uint64_t radj[8]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t seen, new
    cdef int u, v
    cdef int depth[8]
    cdef int head, tail
    cdef int queue[8]
    cdef int64_t g
    for u in range(n):
        adj[u] = 0
        radj[u] = 0
    for u in range(n):
        for v in range(n):
            if m[u * n + v]:
                adj[u] |= (<uint64_t>1) << v
                radj[v] |= (<uint64_t>1) << u
    seen = 1
    while True:
        new = 0
        for v in range(n):
            if (seen >> v) & 1:
                new |= adj[v]
        new &= ~seen
        if not new:
            break
        seen |= new
    if seen != full:
        return False
    seen = 1
    while True:
        new = 0
        for v in range(n):
            if (seen >> v) & 1:
                new |= radj[v]
        new &= ~seen
        if not new:
            break
        seen |= new
    if seen != full:
        return False
    for u in range(n):
        depth[u] = -1
    depth[0] = 0
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for v in range(n):
            if (adj[u] >> v) & 1 and depth[v] < 0:
                depth[v] = depth[u] + 1
                queue[tail] = v
                tail += 1
    g = 0
    for u in range(n):
        for v in range(n):
            if (adj[u] >> v) & 1:
                g = _gcd64(g, depth[u] + 1 - depth[v])
                if g == 1:
                    return True
    return g == 1


def scan_primitive_unit_det(n, max_entry, start, stop, require_unit_det):
    cdef int cn = n
    cdef int base = max_entry + 1
    cdef int cells
    cdef long long idx, rem
    cdef long long cstart, cstop
    cdef int k, r, c
    cdef int64_t m[64]
    cdef int64_t det_buf[64]
    cdef uint64_t rowmask, colmask, full
    cdef bint unit = bool(require_unit_det)
    cdef int64_t d
    if cn > 7 or cn < 1 or stop >= (1 << 62) or not _fits_i64_det(cn, max_entry):
        return _pure.scan_primitive_unit_det(n, max_entry, start, stop, require_unit_det)
    cstart = start
    cstop = stop
    cells = cn * cn
    out = []
    full = ((<uint64_t>1) << cn) - 1
    for idx in range(cstart, cstop):
        rem = idx
        for k in range(cells - 1, -1, -1):
            m[k] = rem % base
            rem //= base
        rowmask = 0
        colmask = 0
        for r in range(cn):
            for c in range(cn):
                if m[r * cn + c]:
                    rowmask |= (<uint64_t>1) << r
                    colmask |= (<uint64_t>1) << c
        if rowmask != full or colmask != full:
            continue
        if not _sc_and_aperiodic(m, cn):
            continue
        if unit:
            for k in range(cells):
                det_buf[k] = m[k]
            d = _det_i64(det_buf, cn)
            if d != 1 and d != -1:
                continue
        out.append(idx)
    return out
