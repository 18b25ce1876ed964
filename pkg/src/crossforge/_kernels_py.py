"""Pure-Python kernels.

Reference implementations of the three hot loops; `crossforge._kernels`
is the compiled twin with identical semantics.  Selection happens in
`crossforge.kernels`.
"""
from __future__ import annotations


class DegenerateSceneError(ValueError):
    """Two curve interiors overlap along a segment (tangency, not a crossing)."""


def two_layer_crossings(matching: list[int]) -> int:
    """Brute-force crossing count of one drawn layer in the two-column model.

    Columns of m points each; edges are all ordered pairs (a, b) except the m
    matched pairs (t, matching[t]); edges (a, b), (c, d) cross iff
    (a - c)(b - d) < 0.  O(m^4) by design: this is the oracle side.
    """
    m = len(matching)
    total = 0
    for a in range(m):
        fa = matching[a]
        for c in range(a + 1, m):
            fc = matching[c]
            # a < c, so a crossing needs b > d
            for b in range(m):
                if b == fa:
                    continue
                for d in range(m):
                    if d == fc:
                        continue
                    if b > d:
                        total += 1
    return total


def _collinear_overlap(px, py, qx, qy, rx, ry, sx, sy) -> bool:
    if px == qx and py == qy or rx == sx and ry == sy:
        return False
    # project on the dominant axis
    if abs(qx - px) >= abs(qy - py):
        a0, a1 = sorted((px, qx))
        b0, b1 = sorted((rx, sx))
    else:
        a0, a1 = sorted((py, qy))
        b0, b1 = sorted((ry, sy))
    return max(a0, b0) < min(a1, b1)


def segment_crossings(segments: list[tuple[int, int, int, int, int, int]],
                      period: int) -> int:
    """Count proper pairwise crossings of lifted segments on a cylinder.

    Each segment is (x0, y0, x1, y1, va, vb) with integer coordinates in the
    universal cover; x is periodic with the given period.  Pairs sharing a
    vertex id never count.  Interactions are summed over all integer shifts
    k*period of the second segment.  Collinear overlapping interiors raise
    DegenerateSceneError; endpoint contacts count zero.
    """
    n = len(segments)
    total = 0
    for i in range(n):
        x0, y0, x1, y1, va, vb = segments[i]
        ilo, ihi = min(x0, x1), max(x0, x1)
        iylo, iyhi = min(y0, y1), max(y0, y1)
        for j in range(i + 1, n):
            u0, v0, u1, v1, wa, wb = segments[j]
            if va == wa or va == wb or vb == wa or vb == wb:
                continue
            if max(v0, v1) < iylo or min(v0, v1) > iyhi:
                continue
            jlo, jhi = min(u0, u1), max(u0, u1)
            # shifts where x-extents can overlap (inclusive of touching)
            klo = -((jhi - ilo) // period)
            khi = (ihi - jlo) // period
            for k in range(klo, khi + 1):
                s = k * period
                rx0, rx1 = u0 + s, u1 + s
                d1 = (x1 - x0) * (v0 - y0) - (y1 - y0) * (rx0 - x0)
                d2 = (x1 - x0) * (v1 - y0) - (y1 - y0) * (rx1 - x0)
                if d1 == 0 and d2 == 0:
                    if _collinear_overlap(x0, y0, x1, y1, rx0, v0, rx1, v1):
                        raise DegenerateSceneError(
                            f"segments {i} and {j} (shift {k}) overlap")
                    continue
                if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0) or d1 == 0 or d2 == 0:
                    continue
                d3 = (rx1 - rx0) * (y0 - v0) - (v1 - v0) * (x0 - rx0)
                d4 = (rx1 - rx0) * (y1 - v0) - (v1 - v0) * (x1 - rx0)
                if (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0) or d3 == 0 or d4 == 0:
                    continue
                total += 1
    return total


def qubo_min(nbits: int, base_cost: int, lin: list[int],
             quad: list[list[int]]) -> tuple[int, int]:
    """Exhaustive minimum of base_cost + sum lin[i] b_i + sum quad[i][j] b_i b_j.

    Gray-code sweep over all 2^nbits assignments; quad must be symmetric with
    zero diagonal.  Returns (minimum, first mask attaining it); deterministic.
    """
    best = cur = base_cost
    best_mask = 0
    state = bytearray(nbits)
    on: list[int] = []
    mask = 0
    for g in range(1, 1 << nbits):
        b = (g & -g).bit_length() - 1
        row = quad[b]
        delta = lin[b]
        for k in on:
            delta += row[k]  # row[b] == 0, so b's own membership is harmless
        if state[b]:
            cur -= delta
            state[b] = 0
            on.remove(b)
        else:
            cur += delta
            state[b] = 1
            on.append(b)
        mask ^= 1 << b
        if cur < best:
            best = cur
            best_mask = mask
    return best, best_mask
