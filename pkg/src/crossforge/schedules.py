"""Ring-arrangement permutation families and the per-layer schedule.

Eight families are in play.  f1 is plain reversal, f2/f3 are reversal with a
parity wobble, and f4..f8 are blockwise constructions parameterized by
r = floor(m/n), s = m mod n, s0 = (n-1)/2, s1 = floor(s/2) (odd n, m > n only).
Each of f4..f8 is defined by a system of guarded clauses; the clause engine
below evaluates them, and any uncovered index, doubly-defined index, or
non-bijective result raises a diagnostic naming the offenders.  The printed
clause systems contain several transcription garbles; the repairs applied here
are the unique readings (found by sweep) under which every admissible (m, n)
yields a bijection, the cycle drawing closes up, and the schedule totals
reproduce the closed-form drawing counts.

The per-layer assignment for the cycle drawing:
  even n:              f1 everywhere;
  odd m <= odd n:      f2 for j < m, then f1;
  even m < odd n:      f3/f2 alternating for j < m, then f1;
  m > odd n, s even:   f5/f4 alternating for j < s, then f6;
  m > odd n, s odd:    f4 for j < s, then f7/f8 alternating.
The two alternation phases are notationally ambiguous; both readings are
implemented and the defaults come from crossforge.conformance.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from crossforge.conformance import DEFAULT, Readings

Family = str  # "path" | "cycle"


class ScheduleError(ValueError):
    """Parameters outside the schedule rules."""


class ClauseConflictError(ValueError):
    """Two applicable clauses define the same index with different values."""

    def __init__(self, family: str, index: int, first: str, second: str,
                 v1: int, v2: int):
        self.index = index
        self.clauses = (first, second)
        super().__init__(
            f"{family}: index {index} doubly defined: "
            f"clause {first} gives {v1}, clause {second} gives {v2}")


class UncoveredIndexError(ValueError):
    """Some index is hit by no applicable clause."""

    def __init__(self, family: str, indices: list[int]):
        self.indices = indices
        super().__init__(f"{family}: uncovered indices {indices}")


class NotABijectionError(ValueError):
    def __init__(self, family: str, values: list[int]):
        self.values = values
        super().__init__(f"{family}: values are not a bijection: {values}")


@dataclass(frozen=True)
class LayerPermutation:
    """A bijection on {0..m-1}; values[t] is the image of t."""

    m: int
    values: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        if len(self.values) != self.m or sorted(self.values) != list(range(self.m)):
            raise NotABijectionError(self.label or "permutation", list(self.values))

    def __call__(self, t: int) -> int:
        return self.values[t]

    def inverse(self) -> "LayerPermutation":
        inv = [0] * self.m
        for t, v in enumerate(self.values):
            inv[v] = t
        return LayerPermutation(self.m, tuple(inv), label=f"{self.label}^-1")

    def to_line(self) -> str:
        return " ".join(str(v) for v in self.values)

    @classmethod
    def from_line(cls, line: str, label: str = "") -> "LayerPermutation":
        vals = tuple(int(tok) for tok in line.split())
        return cls(len(vals), vals, label=label)


@dataclass(frozen=True)
class ScheduleParams:
    """r = floor(m/n), s = m mod n, s0 = (n-1)/2, s1 = floor(s/2).

    Defined for odd n with m > n; s1 uses integer division (for odd s the
    clause guards only produce bijections under s1 = (s-1)/2).
    """

    m: int
    n: int
    r: int
    s: int
    s0: int
    s1: int

    @classmethod
    def of(cls, m: int, n: int) -> "ScheduleParams":
        if n < 3 or n % 2 == 0:
            raise ScheduleError(f"extended families need odd n >= 3, got n={n}")
        if m <= n:
            raise ScheduleError(f"extended families need m > n, got m={m}, n={n}")
        r, s = divmod(m, n)
        return cls(m=m, n=n, r=r, s=s, s0=(n - 1) // 2, s1=s // 2)


def _sgn(k: int) -> int:
    """(-1)**k."""
    return 1 if k % 2 == 0 else -1


# ---------------------------------------------------------------------------
# clause engine

Clause = tuple[str, Iterable[tuple[int, int]]]


def _build(family: str, m: int, clauses: list[Clause]) -> LayerPermutation:
    values: dict[int, int] = {}
    source: dict[int, str] = {}
    for label, pairs in clauses:
        for t, v in pairs:
            if t in values:
                if values[t] != v:
                    raise ClauseConflictError(family, t, source[t], label,
                                              values[t], v)
                continue
            values[t] = v
            source[t] = label
    missing = [t for t in range(m) if t not in values]
    if missing:
        raise UncoveredIndexError(family, missing)
    out = [values[t] for t in range(m)]
    if sorted(out) != list(range(m)):
        raise NotABijectionError(family, out)
    return LayerPermutation(m, tuple(out), label=family)


# ---------------------------------------------------------------------------
# base families f1..f3

def base_permutation(l: int, m: int) -> LayerPermutation:
    """f1 (reversal), f2, f3.  f3 is a bijection only for even m."""
    if m < 3:
        raise ScheduleError(f"base families need m >= 3, got m={m}")
    if l == 1:
        vals = [m - 1 - t for t in range(m)]
    elif l == 2:
        vals = [0] * m
        vals[0] = m - 1
        for t in range(1, m - 1):
            vals[t] = m - 1 - t + _sgn(t)
        vals[m - 1] = (1 - _sgn(m)) // 2
    elif l == 3:
        vals = [m - 1 - t - _sgn(t) for t in range(m)]
    else:
        raise ScheduleError(f"base family index must be 1, 2 or 3, got {l}")
    return LayerPermutation(m, tuple(vals), label=f"f{l}[m={m}]")


# ---------------------------------------------------------------------------
# extended families f4..f8
#
# Layout on {0..m-1}: a head of r blocks of s0 positions, a middle of s+r
# positions, and a tail of r blocks of s0 positions.  Head and tail blocks
# carry reversal-like values with blockwise alternation; the middle mixes
# plain runs with a few special positions.

def _f4_clauses(p: ScheduleParams) -> list[Clause]:
    m, n, r, s, s0, s1 = p.m, p.n, p.r, p.s, p.s0, p.s1
    cl: list[Clause] = []
    cl.append(("head-anchor", [(d * s0, m - d * s0 - 2 + (1 - _sgn(s0)) // 2)
                               for d in range(r)]))
    if n >= 5:
        # printed range starts at t=0, which collides with head-anchor and
        # disagrees for odd s0; t >= 1 agrees with the print for even s0
        cl.append(("head-run", [(t + d * s0, m - d * s0 - t - 1 - _sgn(t + s0))
                                for d in range(r) for t in range(1, s0)]))
    if s >= 2:
        cl.append(("mid-anchor", [(s0 * r, s0 * r + s + r - 2 + (1 - _sgn(s1)) // 2)]))
    if s >= 4:
        cl.append(("mid-run-a", [(t, m - t - 1 - _sgn(t + s1 + s0 * r))
                                 for t in range(s0 * r + 1, s0 * r + s1)]))
    cl.append(("mid-blocks", [(s0 * r + s1 + d, (d + 1) * s0 - 1) for d in range(r)]))
    if s >= 4 and s % 2 == 0:
        cl.append(("mid-run-b", [(t, m - t - 1 - _sgn(t + s1 + r + s0 * r))
                                 for t in range(s0 * r + s1 + r, s0 * r + s + r - 1)]))
    if s >= 2 and s % 2 == 0:
        cl.append(("mid-close-even", [(s0 * r + s + r - 1,
                                       s0 * r + 1 - (1 - _sgn(s1)) // 2)]))
    if s == 1:
        cl.append(("mid-fix-s1", [(s0 * r + r, s0 * r + r)]))
    if s >= 3 and s % 2 == 1:
        cl.append(("mid-odd-a", [(s0 * r + s1 + r, s0 * r + s1 - 1)]))
        cl.append(("mid-odd-b", [(s0 * r + s1 + r + 1, s0 * r + s1 + r)]))
    if s >= 7 and s % 2 == 1:
        cl.append(("mid-run-c", [(t, m - t - 1 - _sgn(t + s1 + r + s0 * r))
                                 for t in range(s0 * r + s1 + r + 2, s0 * r + s + r - 1)]))
    if s >= 5 and s % 2 == 1:
        # printed value s0*r + s1 + (1-(-1)^s1)/2 duplicates mid values;
        # the form of f5's closing clause is the unique bijective completion
        cl.append(("mid-close-odd", [(s0 * r + s + r - 1,
                                      s0 * r + (1 - _sgn(s1)) // 2)]))
    cl.extend(_f4_tail(p, shift=0))
    return cl


def _f4_tail(p: ScheduleParams, shift: int) -> list[Clause]:
    """Tail blocks; block d occupies m-(d+1)s0 .. m-d*s0-1.

    The anchor value is s0*r + s1 + d + shift (f4/f8 use shift 0, f7 shift 1).
    The alternating run is anchored to the block-relative offset tau; the
    printed absolute exponent t+r+s0+s0*d is off by the parity of s.
    """
    m, n, r, s0, s1 = p.m, p.n, p.r, p.s0, p.s1
    cl: list[Clause] = [
        ("tail-anchor", [(m - (d + 1) * s0, s0 * r + s1 + d + shift) for d in range(r)]),
    ]
    if n >= 5:
        cl.append(("tail-run", [(m - (d + 1) * s0 + tau,
                                 d * s0 + (s0 - 1 - tau) + _sgn(tau))
                                for d in range(r) for tau in range(1, s0 - 1)]))
        cl.append(("tail-close", [(m - d * s0 - 1, d * s0 + (1 - _sgn(s0)) // 2)
                                  for d in range(r)]))
    return cl


def _copy_of_f4(p: ScheduleParams, tail: bool) -> list[Clause]:
    base = _build("f4", p.m, _f4_clauses(p)).values
    pairs = [(t, base[t]) for t in range(p.s0 * p.r)]
    if tail:
        pairs += [(t, base[t]) for t in range(p.m - p.s0 * p.r, p.m)]
    return [("f4-copy", pairs)]


def _f5_clauses(p: ScheduleParams) -> list[Clause]:
    m, r, s, s0, s1 = p.m, p.r, p.s, p.s0, p.s1
    cl = _copy_of_f4(p, tail=True)
    if s >= 4:
        cl.append(("mid-anchor", [(s0 * r, s0 * r + s + r - 1 - (1 - _sgn(s1)) // 2)]))
    if s >= 6:
        cl.append(("mid-run-a", [(t, m - t - 1 + _sgn(s0 * r + s1 + t))
                                 for t in range(s0 * r + 1, s0 * r + s1 - 1)]))
    if s >= 2:
        cl.append(("mid-fix-a", [(s0 * r + s1 - 1, s0 * r + s1 - 1)]))
    cl.append(("mid-blocks", [(s0 * r + s1 + d, (d + 1) * s0 - 1) for d in range(r)]))
    if s >= 2:
        cl.append(("mid-fix-b", [(s0 * r + s1 + r, s0 * r + s1 + r)]))
    if s >= 6:
        # run starts one past f4's; the printed exponent (copied from f4)
        # is off by one, so the alternation is anchored to the run start
        cl.append(("mid-run-b", [(t, m - t - 1 - _sgn(t + s1 + r + s0 * r + 1))
                                 for t in range(s0 * r + s1 + r + 1, s0 * r + s + r - 1)]))
    if s >= 4:
        cl.append(("mid-close", [(s0 * r + s + r - 1, s0 * r + (1 - _sgn(s1)) // 2)]))
    return cl


def _f6_clauses(p: ScheduleParams) -> list[Clause]:
    m, r, s, s0, s1 = p.m, p.r, p.s, p.s0, p.s1
    e = (1 - _sgn(s)) // 2
    cl = _copy_of_f4(p, tail=True)
    if s >= 1:
        cl.append(("mid-anchor", [(s0 * r, s0 * r + s + r - 1)]))
    if s >= 3:
        cl.append(("mid-run-a", [(t, m - t - 1)
                                 for t in range(s0 * r + 1, s0 * r + s1 + e)]))
    cl.append(("mid-blocks", [(s0 * r + s1 + d + e, (d + 1) * s0 - 1) for d in range(r)]))
    if s >= 2:
        cl.append(("mid-run-b", [(t, m - t - 1)
                                 for t in range(s0 * r + s1 + r + e, s0 * r + s + r)]))
    return cl


def _f7_clauses(p: ScheduleParams) -> list[Clause]:
    # copies f4's head only; the printed "or m-s0*r <= t <= m-1" contradicts
    # f7's own tail clauses, whose anchor is shifted by one
    m, r, s, s0, s1 = p.m, p.r, p.s, p.s0, p.s1
    cl = _copy_of_f4(p, tail=False)
    if s >= 3:
        cl.append(("mid-anchor", [(s0 * r, s0 * r + s + r - 1)]))
    if s >= 5:
        cl.append(("mid-run-a", [(t, m - t - 1) for t in range(s0 * r + 1, s0 * r + s1)]))
    cl.append(("mid-blocks", [(s0 * r + d + s1, (d + 1) * s0 - 1) for d in range(r)]))
    cl.append(("mid-run-b", [(t, m - t - 1)
                             for t in range(s0 * r + s1 + r, s0 * r + s + r)]))
    cl.extend(_f4_tail(p, shift=1))
    return cl


def _f8_clauses(p: ScheduleParams) -> list[Clause]:
    # copies f4's head AND tail (the printed head-only copy plus f7's tail is
    # never a bijection); the middle runs shift by +1 exactly as the printed
    # l=8 index sets S2/S3 do
    m, r, s, s0, s1 = p.m, p.r, p.s, p.s0, p.s1
    cl = _copy_of_f4(p, tail=True)
    if s >= 1:
        cl.append(("mid-anchor", [(s0 * r, s0 * r + s + r - 1)]))
    if s >= 3:
        cl.append(("mid-run-a", [(t, m - t - 1)
                                 for t in range(s0 * r + 1, s0 * r + s1 + 1)]))
    cl.append(("mid-blocks", [(s0 * r + s1 + 1 + d, (d + 1) * s0 - 1) for d in range(r)]))
    if s >= 2:
        cl.append(("mid-run-b", [(t, m - t - 1)
                                 for t in range(s0 * r + s1 + r + 1, s0 * r + s + r)]))
    return cl


_EXTENDED: dict[int, Callable[[ScheduleParams], list[Clause]]] = {
    4: _f4_clauses, 5: _f5_clauses, 6: _f6_clauses, 7: _f7_clauses, 8: _f8_clauses,
}


def extended_permutation(l: int, m: int, n: int) -> LayerPermutation:
    """f4..f8 at (m, n); odd n >= 3, m > n."""
    if l not in _EXTENDED:
        raise ScheduleError(f"extended family index must be 4..8, got {l}")
    p = ScheduleParams.of(m, n)
    perm = _build(f"f{l}", m, _EXTENDED[l](p))
    return LayerPermutation(m, perm.values, label=f"f{l}[m={m},n={n}]")


def family_permutation(l: int, m: int, n: int | None = None) -> LayerPermutation:
    if l <= 3:
        return base_permutation(l, m)
    if n is None:
        raise ScheduleError("families 4..8 need the cycle length n")
    return extended_permutation(l, m, n)


# ---------------------------------------------------------------------------
# layer assignment

@dataclass(frozen=True)
class ScheduleAssignment:
    m: int
    n: int
    family: Family
    per_layer: tuple[LayerPermutation, ...]
    family_indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.per_layer) != self.n:
            raise ScheduleError(
                f"schedule must cover all {self.n} layers, got {len(self.per_layer)}")


def schedule_for(m: int, n: int, family: Family = "cycle",
                 readings: Readings = DEFAULT) -> ScheduleAssignment:
    """Permutation f^j for every layer j of the cycle drawing."""
    if family != "cycle":
        raise ScheduleError(
            "only cycle drawings are schedule-driven; path drawings use the "
            "uniform ring layout")
    if m < 4:
        raise ScheduleError(f"schedules are defined for m >= 4, got m={m}")
    if n < 3:
        raise ScheduleError(f"cycles need n >= 3, got n={n}")
    if n % 2 == 0:
        idx = [1] * n
    elif m <= n:
        if m % 2 == 1:
            idx = [2] * m + [1] * (n - m)
        else:
            idx = [3 if j % 2 == 0 else 2 for j in range(m)] + [1] * (n - m)
    else:
        s = m % n
        if s % 2 == 0:
            a, b = (5, 4) if readings.even_s_phase == "f5_first" else (4, 5)
            idx = [a if j % 2 == 0 else b for j in range(s)] + [6] * (n - s)
        else:
            a, b = (7, 8) if readings.odd_s_phase == "f7_first" else (8, 7)
            idx = [4] * s + [a if (j - s) % 2 == 0 else b for j in range(s, n)]
    cache: dict[int, LayerPermutation] = {}
    per = []
    for l in idx:
        if l not in cache:
            cache[l] = family_permutation(l, m, n if l >= 4 else None)
        per.append(cache[l])
    return ScheduleAssignment(m=m, n=n, family=family,
                              per_layer=tuple(per), family_indices=tuple(idx))


# ---------------------------------------------------------------------------
# inversions

def inversion_number(p: LayerPermutation | list[int] | tuple[int, ...]) -> int:
    """Number of pairs i < j with p(i) > p(j), by mergesort in O(m log m)."""
    vals = list(p.values) if isinstance(p, LayerPermutation) else list(p)

    def count(a: list[int]) -> tuple[list[int], int]:
        if len(a) <= 1:
            return a, 0
        mid = len(a) // 2
        left, nl = count(a[:mid])
        right, nr = count(a[mid:])
        merged = []
        inv = nl + nr
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                inv += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return count(vals)[1]


def dump_schedule(assignment: ScheduleAssignment) -> str:
    """One space-separated permutation line per layer."""
    return "\n".join(p.to_line() for p in assignment.per_layer) + "\n"
