# cython: language_level=3
"""Compiled kernels; semantics identical to crossforge._kernels_py."""

from libc.stdlib cimport malloc, free


class DegenerateSceneError(ValueError):
    """Two curve interiors overlap along a segment (tangency, not a crossing)."""


cdef long long _floordiv(long long a, long long b):
    cdef long long q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef bint _collinear_overlap(long long px, long long py, long long qx, long long qy,
                             long long rx, long long ry, long long sx, long long sy):
    cdef long long a0, a1, b0, b1, dx, dy
    if (px == qx and py == qy) or (rx == sx and ry == sy):
        return 0
    dx = qx - px if qx > px else px - qx
    dy = qy - py if qy > py else py - qy
    if dx >= dy:
        a0 = px if px < qx else qx
        a1 = px + qx - a0
        b0 = rx if rx < sx else sx
        b1 = rx + sx - b0
    else:
        a0 = py if py < qy else qy
        a1 = py + qy - a0
        b0 = ry if ry < sy else sy
        b1 = ry + sy - b0
    if b0 > a0:
        a0 = b0
    if b1 < a1:
        a1 = b1
    return a0 < a1


def two_layer_crossings(matching):
    cdef int m = len(matching)
    cdef int a, b, c, d, fa, fc
    cdef long long total = 0
    cdef int *f = <int *>malloc(m * sizeof(int))
    if f == NULL:
        raise MemoryError()
    try:
        for a in range(m):
            f[a] = matching[a]
        for a in range(m):
            fa = f[a]
            for c in range(a + 1, m):
                fc = f[c]
                for b in range(m):
                    if b == fa:
                        continue
                    for d in range(m):
                        if d == fc:
                            continue
                        if b > d:
                            total += 1
    finally:
        free(f)
    return total


def segment_crossings(segments, period):
    cdef int n = len(segments)
    cdef long long per = period
    cdef long long *X0 = <long long *>malloc(max(n, 1) * 6 * sizeof(long long))
    if X0 == NULL:
        raise MemoryError()
    cdef long long *Y0 = X0 + n
    cdef long long *X1 = X0 + 2 * n
    cdef long long *Y1 = X0 + 3 * n
    cdef long long *VA = X0 + 4 * n
    cdef long long *VB = X0 + 5 * n
    cdef int i, j
    cdef long long k, klo, khi, s
    cdef long long x0, y0, x1, y1, va, vb, u0, v0, u1, v1, wa, wb
    cdef long long ilo, ihi, iylo, iyhi, jlo, jhi, rx0, rx1
    cdef long long d1, d2, d3, d4
    cdef long long total = 0
    try:
        for i in range(n):
            seg = segments[i]
            X0[i] = seg[0]
            Y0[i] = seg[1]
            X1[i] = seg[2]
            Y1[i] = seg[3]
            VA[i] = seg[4]
            VB[i] = seg[5]
        for i in range(n):
            x0 = X0[i]; y0 = Y0[i]; x1 = X1[i]; y1 = Y1[i]
            va = VA[i]; vb = VB[i]
            ilo = x0 if x0 < x1 else x1
            ihi = x0 + x1 - ilo
            iylo = y0 if y0 < y1 else y1
            iyhi = y0 + y1 - iylo
            for j in range(i + 1, n):
                wa = VA[j]; wb = VB[j]
                if va == wa or va == wb or vb == wa or vb == wb:
                    continue
                v0 = Y0[j]; v1 = Y1[j]
                if (v0 if v0 > v1 else v1) < iylo or (v0 if v0 < v1 else v1) > iyhi:
                    continue
                u0 = X0[j]; u1 = X1[j]
                jlo = u0 if u0 < u1 else u1
                jhi = u0 + u1 - jlo
                klo = -_floordiv(jhi - ilo, per)
                khi = _floordiv(ihi - jlo, per)
                for k in range(klo, khi + 1):
                    s = k * per
                    rx0 = u0 + s; rx1 = u1 + s
                    d1 = (x1 - x0) * (v0 - y0) - (y1 - y0) * (rx0 - x0)
                    d2 = (x1 - x0) * (v1 - y0) - (y1 - y0) * (rx1 - x0)
                    if d1 == 0 and d2 == 0:
                        if _collinear_overlap(x0, y0, x1, y1, rx0, v0, rx1, v1):
                            raise DegenerateSceneError(
                                "segments %d and %d (shift %d) overlap" % (i, j, k))
                        continue
                    if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0) or d1 == 0 or d2 == 0:
                        continue
                    d3 = (rx1 - rx0) * (y0 - v0) - (v1 - v0) * (x0 - rx0)
                    d4 = (rx1 - rx0) * (y1 - v0) - (v1 - v0) * (x1 - rx0)
                    if (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0) or d3 == 0 or d4 == 0:
                        continue
                    total += 1
    finally:
        free(X0)
    return total


def qubo_min(nbits, base_cost, lin, quad):
    cdef int n = nbits
    cdef long long best, cur
    cdef unsigned long long g, limit, mask, best_mask, bit
    cdef int b, k, non
    cdef long long *L = <long long *>malloc(n * sizeof(long long))
    cdef long long *Q = <long long *>malloc(n * n * sizeof(long long))
    cdef int *state = <int *>malloc(n * sizeof(int))
    cdef int *on = <int *>malloc(n * sizeof(int))
    cdef long long delta
    if L == NULL or Q == NULL or state == NULL or on == NULL:
        if L != NULL: free(L)
        if Q != NULL: free(Q)
        if state != NULL: free(state)
        if on != NULL: free(on)
        raise MemoryError()
    try:
        for b in range(n):
            L[b] = lin[b]
            state[b] = 0
            row = quad[b]
            for k in range(n):
                Q[b * n + k] = row[k]
        best = cur = base_cost
        best_mask = 0
        mask = 0
        non = 0
        limit = (<unsigned long long>1) << n
        g = 1
        while g < limit:
            b = 0
            while not (g >> b) & 1:
                b += 1
            delta = L[b]
            for k in range(non):
                delta += Q[b * n + on[k]]
            if state[b]:
                cur -= delta
                state[b] = 0
                k = 0
                while on[k] != b:
                    k += 1
                non -= 1
                on[k] = on[non]
            else:
                cur += delta
                state[b] = 1
                on[non] = b
                non += 1
            bit = (<unsigned long long>1) << b
            mask ^= bit
            if cur < best:
                best = cur
                best_mask = mask
            g += 1
        return best, best_mask
    finally:
        free(L); free(Q); free(state); free(on)
