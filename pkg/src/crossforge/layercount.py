"""Per-layer crossing counts by three independent routes.

A drawn layer is a two-column picture: m ring positions on each side, every
ordered pair (a, b) an edge except the m matched pairs (t, f(t)) that carry
the same K_m vertex.  Route one is brute-force pair counting (the oracle).
Route two is the inversion formula

    nu = C(m,2)^2 - (sum_t [(m-1-t) f(t) + t (m-1-f(t))] - inv(f)).

Route three splits the same sum into three index classes S1, S2, S3 and sums
each separately (the F_{l,k} decomposition used by the m > odd n analysis).
The printed S1 definition is garbled in the source; the reconstruction here
is pinned by the requirement that S1, S2, S3 partition {0..m-1}, which is
enforced as a hard error.

annulus_crossings counts an interior layer of the path drawing geometrically:
both columns become concentric rings and every edge a helix.  The winding
rule is switchable; only the uniform one-directional rule reproduces the
closed form m(m-1)(m-2)(m-3)/6 (see conformance notes).
"""
from __future__ import annotations

from dataclasses import dataclass

from crossforge import kernels
from crossforge.conformance import DEFAULT, Readings
from crossforge.schedules import (LayerPermutation, ScheduleParams,
                                  inversion_number)


@dataclass(frozen=True)
class SectorModel:
    """One drawn layer: matching f between two rings of m positions."""

    m: int
    matching: LayerPermutation

    def __post_init__(self):
        if self.matching.m != self.m:
            raise ValueError("matching size does not match m")

    def edges(self) -> list[tuple[int, int]]:
        f = self.matching.values
        return [(a, b) for a in range(self.m) for b in range(self.m) if b != f[a]]


def sector_crossings_bruteforce(model: SectorModel) -> int:
    """O(m^4) pair count; the oracle every formula is checked against."""
    return kernels.two_layer_crossings(list(model.matching.values))


def sector_crossings_formula(f: LayerPermutation) -> int:
    """The inversion-formula count for a layer drawn with matching f."""
    m = f.m
    c2 = m * (m - 1) // 2
    body = sum((m - 1 - t) * f(t) + t * (m - 1 - f(t)) for t in range(m))
    return c2 * c2 - (body - inversion_number(f))


# ---------------------------------------------------------------------------
# partial sums over the S_k index classes

class PartitionError(ValueError):
    def __init__(self, overlap: list[int], missing: list[int]):
        self.overlap = overlap
        self.missing = missing
        super().__init__(
            f"S1,S2,S3 do not partition the index range: "
            f"overlapping {overlap}, missing {missing}")


def index_sets(l: int, m: int, n: int) -> tuple[set[int], set[int], set[int]]:
    """S1, S2, S3 for family l in 4..8.

    S2 holds the block-anchor positions (middle d-run and the first position
    of every tail block), S3 the remaining middle positions, S1 everything
    else (head plus tail-block interiors).  l = 8 shifts the middle anchors
    by one, exactly as its shifted middle clauses do.
    """
    if l not in (4, 5, 6, 7, 8):
        raise ValueError(f"partial sums are defined for families 4..8, got {l}")
    p = ScheduleParams.of(m, n)
    r, s, s0, s1 = p.r, p.s, p.s0, p.s1
    s1_shift = 1 if l == 8 else 0
    S2 = {s0 * r + s1 + s1_shift + d for d in range(r)}
    S2 |= {m - (d + 1) * s0 for d in range(r)}
    S3 = set(range(s0 * r, s0 * r + s1 + s1_shift))
    S3 |= set(range(s0 * r + s1 + r + s1_shift, s0 * r + s + r))
    S1 = set(range(s0 * r))
    for d in range(1, r + 1):
        S1 |= set(range(m - d * s0 + 1, m - (d - 1) * s0))
    S1 -= S2
    overlap = sorted((S1 & S2) | (S1 & S3) | (S2 & S3))
    missing = sorted(set(range(m)) - (S1 | S2 | S3))
    if overlap or missing:
        raise PartitionError(overlap, missing)
    return S1, S2, S3


@dataclass(frozen=True)
class FPartialSums:
    l: int
    m: int
    n: int
    S1: frozenset[int]
    S2: frozenset[int]
    S3: frozenset[int]
    F1: int
    F2: int
    F3: int

    @property
    def total(self) -> int:
        return self.F1 + self.F2 + self.F3


def partial_sums(l: int, m: int, n: int,
                 perm: LayerPermutation | None = None) -> FPartialSums:
    """Direct summation of F_{l,k} over the reconstructed S_k classes.

    The inversion correction attributes every inverted pair (t, j), t < j, to
    t's class, exactly as printed; the partition identity
    F1+F2+F3 = sum_t [...] - inv(f) then holds by construction.
    """
    from crossforge.schedules import extended_permutation
    f = perm if perm is not None else extended_permutation(l, m, n)
    S1, S2, S3 = index_sets(l, m, n)
    vals = f.values

    def chunk(S: set[int]) -> int:
        body = sum((m - 1 - t) * vals[t] + t * (m - 1 - vals[t]) for t in S)
        corr = sum(1 for t in S for j in range(t + 1, m) if vals[t] > vals[j])
        return body - corr

    return FPartialSums(l=l, m=m, n=n,
                        S1=frozenset(S1), S2=frozenset(S2), S3=frozenset(S3),
                        F1=chunk(S1), F2=chunk(S2), F3=chunk(S3))


def sector_crossings_partial(l: int, m: int, n: int) -> int:
    """The decomposition route: C(m,2)^2 - (F1 + F2 + F3)."""
    ps = partial_sums(l, m, n)
    c2 = m * (m - 1) // 2
    return c2 * c2 - ps.total


# ---------------------------------------------------------------------------
# interior path layer on two concentric rings

def winding(a: int, b: int, m: int, rule: str) -> int:
    """Signed angular displacement, in ring-position units, of edge a -> b."""
    if rule == "uniform":
        return (b - a) % m
    if rule == "shortest_pos":
        d = (b - a + m // 2) % m - m // 2
        if m % 2 == 0 and d == -(m // 2):
            d = m // 2
        return d
    if rule == "shortest_parity":
        d = (b - a + m // 2) % m - m // 2
        if m % 2 == 0 and abs(d) == m // 2:
            d = m // 2 if a % 2 == 0 else -(m // 2)
        return d
    raise ValueError(f"unknown winding rule {rule!r}")


def helix_pair_crossings(a1: int, d1: int, a2: int, d2: int, m: int) -> int:
    """Crossings of two helices over one band: multiples of m strictly
    between a1-a2 and a1-a2+d1-d2 (endpoints excluded)."""
    lo = a1 - a2
    hi = lo + d1 - d2
    if lo > hi:
        lo, hi = hi, lo
    k = (lo // m + 1) * m
    count = 0
    while k < hi:
        if k > lo:
            count += 1
        k += m
    return count


def annulus_crossings(m: int, readings: Readings = DEFAULT) -> int:
    """Geometric crossing count of one interior path layer.

    All m(m-1) non-matching edges between two rings of m equidistant points,
    each drawn as a helix with the configured winding rule; matched positions
    (same K_m vertex straight across) carry no edge.
    """
    if m < 2:
        return 0
    rule = readings.path_winding
    edges = [(a, winding(a, b, m, rule), b)
             for a in range(m) for b in range(m) if b != a]
    total = 0
    for i, (a1, d1, b1) in enumerate(edges):
        for a2, d2, b2 in edges[i + 1:]:
            if a1 == a2 or b1 == b2:
                continue
            total += helix_pair_crossings(a1, d1, a2, d2, m)
    return total
