"""Closed-form counts and bounds, plus the verification sweeps.

Every printed formula is evaluated in exact arithmetic (ints and Fractions,
never floats) and compared against an independent counting route.  Where the
source displays two inconsistent variants of a formula, both are evaluated;
mismatches become report rows, not errors.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from crossforge.conformance import DEFAULT, Readings
from crossforge.layercount import (SectorModel, partial_sums,
                                   sector_crossings_bruteforce,
                                   sector_crossings_formula)
from crossforge.schedules import (LayerPermutation, ScheduleParams,
                                  base_permutation, extended_permutation,
                                  schedule_for)

ExactValue = Fraction  # canonical reduced form with positive denominator


def _sgn(k: int) -> int:
    return 1 if k % 2 == 0 else -1


# ---------------------------------------------------------------------------
# single-layer closed forms

def layer_base(m: int) -> int:
    """m(m-1)(m-2)(3m-5)/12, the f1 layer count."""
    return m * (m - 1) * (m - 2) * (3 * m - 5) // 12


def nu_layer_closed(l: int, m: int) -> int:
    """Closed-form layer count for the base families f1..f3."""
    if m < 4:
        raise ValueError(f"layer closed forms need m >= 4, got {m}")
    if l == 1:
        return layer_base(m)
    if l == 2:
        return layer_base(m) + ((m - 1) // 2 if m % 2 == 1 else (m - 2) // 2)
    if l == 3:
        if m % 2 == 1:
            raise ValueError("the f3 layer count is stated for even m only")
        return layer_base(m) + m // 2
    raise ValueError(f"closed forms cover families 1..3, got {l}")


# ---------------------------------------------------------------------------
# path drawings

def interior_layer_closed(m: int) -> int:
    """m(m-1)(m-2)(m-3)/6."""
    return m * (m - 1) * (m - 2) * (m - 3) // 6


def interior_layer_sum(m: int) -> int:
    """The proof's double sum m * sum_{j=0}^{m-3} sum_{i=0}^{j} i."""
    return m * sum(i for j in range(m - 2) for i in range(j + 1))


def end_layer_savings_sum(m: int) -> int:
    """Direct evaluation of the cap-saving double sums (odd/even m)."""
    if m % 2 == 1:
        return m * sum(sum(range(2, j + 1)) - 1 for j in range(2, (m - 1) // 2 + 1))
    return m * sum(sum(range(3, j + 1)) - 1 for j in range(3, m // 2 + 1))


def end_layer_savings_closed(m: int) -> Fraction:
    if m % 2 == 1:
        return Fraction(m * (m - 3) * (m * m + 6 * m - 31), 48)
    return Fraction(m * (m - 4) * (m * m + 10 * m - 48), 48)


def end_layer_closed(m: int) -> int:
    val = interior_layer_closed(m) - end_layer_savings_closed(m)
    if val.denominator != 1:
        raise ArithmeticError(f"end-layer count is not an integer at m={m}")
    return int(val)


@dataclass(frozen=True)
class PathDrawingCount:
    m: int
    n: int
    total: int
    end_layer: int
    interior_layer: int
    branch: str


def nu_path_drawing(m: int, n: int) -> PathDrawingCount:
    """Crossing count of the path drawing, assembled as 2 nu(E0) + (n-3) nu(E1)."""
    if m < 4:
        raise ValueError(f"the path drawing count is defined for m >= 4, got {m}")
    if n < 4:
        raise ValueError(f"the path drawing count is defined for n >= 4, got {n}")
    e1 = interior_layer_closed(m)
    e0 = end_layer_closed(m)
    return PathDrawingCount(m=m, n=n, total=2 * e0 + (n - 3) * e1,
                            end_layer=e0, interior_layer=e1,
                            branch="odd_m" if m % 2 == 1 else "even_m")


def path_drawing_displayed(m: int, n: int) -> Fraction:
    """The displayed piecewise closed form for the path drawing count."""
    lead = Fraction((n - 1) * m * (m - 1) * (m - 2) * (m - 3), 6)
    if m % 2 == 1:
        return lead - Fraction(m * (m - 3) * (m * m + 6 * m - 31), 24)
    return lead - Fraction(m * (m - 4) * (m * m + 10 * m - 48), 24)


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    branch: str
    is_exact: bool  # exact drawing count / stated value vs relaxed bound


def upper_bound_path(m: int, n: int) -> BoundValue:
    if n in (2, 3):
        raise ValueError("deferred by paper (n = 2, 3)")
    if n < 2:
        raise ValueError(f"paths need n >= 2, got {n}")
    if m <= 3:
        return BoundValue(Fraction(0), "m_le_3", True)
    return BoundValue(Fraction(nu_path_drawing(m, n).total), "drawing", True)


# ---------------------------------------------------------------------------
# cycle drawings

def cycle_drawing_m_gt_n(m: int, n: int) -> Fraction:
    """The m > odd n closed form, both branches, exact."""
    p = ScheduleParams.of(m, n)
    B = m * (m - 1) * (m - 2) * (3 * m - 5)
    if p.s == 1:
        q = (m - 1) // n
        num = (B * n + 2 * m**3 - 3 * m * m * n + m * n * n + 4 * m * n
               - n * n - 7 * m - n + 5
               + (2 * m * n + 4 * m + 13 * n + 8) * q * q)
    else:
        q = m // n
        # the alternating term's exponent is m - n*floor(m/n) = s, read literally
        num = (B * n + (2 * n**3 - 4 * n * n - 8 * n) * q**3
               - (6 * m * n * n - 3 * n**3 - 6 * m * n - 12 * m + 15 * n) * q * q
               + (6 * m * m * n - 6 * m * n * n + n**3 - 6 * m * n + 4 * n * n
                  + 24 * m - 13 * n + 3 * n * (1 - _sgn(p.s))) * q
               + 6 * m * m - 6 * m)
    return Fraction(num, 12)


def nu_cycle_drawing(m: int, n: int) -> BoundValue:
    """Exact crossing count of the cycle drawing, branch-tagged."""
    if m < 4:
        raise ValueError(f"the cycle drawing count is defined for m >= 4, got {m}")
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    if n % 2 == 0:
        return BoundValue(Fraction(n * layer_base(m)), "even_n", True)
    if m <= n:
        return BoundValue(Fraction(n * layer_base(m)) + Fraction(m * (m - 1), 2),
                          "m_le_odd_n", True)
    s = m % n
    val = cycle_drawing_m_gt_n(m, n)
    if val.denominator != 1:
        raise ArithmeticError(f"cycle drawing count is not an integer at ({m},{n})")
    return BoundValue(val, "s1" if s == 1 else "s_ne_1", True)


def bound_n3(m: int, constant: int = 16) -> Fraction:
    """The m > n = 3 relaxed bound; constant +16 as stated, -16 per the
    s = 1 derivation (both are reported by the sweep)."""
    return (Fraction(3 * layer_base(m))
            + Fraction(28 * m**3 - 54 * m * m + 42 * m + constant, 108))


def bound_odd_n5(m: int, n: int) -> Fraction:
    return Fraction(n * layer_base(m)) + Fraction(m**3, 4)


@dataclass(frozen=True)
class SmallCaseValue:
    value: Fraction
    is_exact: bool
    note: str


def small_case_values(m: int, n: int, family: str) -> SmallCaseValue:
    """Stored exact values and cited bounds for m <= 3."""
    if m > 3:
        raise ValueError(f"small cases cover m <= 3, got m={m}")
    if family == "path":
        if n < 2:
            raise ValueError(f"paths need n >= 2, got {n}")
        return SmallCaseValue(Fraction(0), True, "planar for m <= 3")
    if family != "cycle":
        raise ValueError(f"family must be 'path' or 'cycle', got {family!r}")
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    if m <= 2:
        return SmallCaseValue(Fraction(0), True, "planar for m <= 2")
    if n == 3:
        return SmallCaseValue(Fraction(3), True, "stored exact value")
    if n < 9:
        return SmallCaseValue(Fraction(6 * n - 18), False, "stored upper bound")
    return SmallCaseValue(Fraction(3 * n), False, "stored upper bound")


def upper_bound_cycle(m: int, n: int) -> BoundValue:
    """The piecewise upper bound; branches 3 and 4 are relaxed rationals."""
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    if m <= 3:
        sc = small_case_values(m, n, "cycle")
        return BoundValue(sc.value, "small_case", sc.is_exact)
    if n % 2 == 0:
        return BoundValue(Fraction(n * layer_base(m)), "even_n", True)
    if m <= n:
        return BoundValue(Fraction(n * layer_base(m)) + Fraction(m * (m - 1), 2),
                          "m_le_odd_n", True)
    if n == 3:
        return BoundValue(bound_n3(m), "n3", False)
    return BoundValue(bound_odd_n5(m, n), "odd_n_ge5", False)


# ---------------------------------------------------------------------------
# printed partial-sum formulas (audited, never trusted)

def printed_F1(variant: str, p: ScheduleParams) -> Fraction:
    """The two displayed F_{l,1} closed forms; they differ in one r^2 term."""
    m, r, s0 = p.m, p.r, p.s0
    if variant == "display":
        mid = (4 * m + 2) * s0 * s0 - 2 * m * s0 + 1
    elif variant == "proof":
        mid = (4 * m + 2) * s0 * s0 - 2 * (m + 2) * s0 + 1
    else:
        raise ValueError(f"unknown F1 variant {variant!r}")
    num = (4 * (2 * s0**3 - s0 * s0) * r**3 - 3 * mid * r * r
           + (-2 * s0 * s0 + (12 * m * m - 12 * m + 10) * s0 - 6 * m * m - 3) * r)
    return Fraction(num, 6)


def printed_F2(l: int, p: ScheduleParams) -> Fraction:
    m, r, s0 = p.m, p.r, p.s0
    if l in (4, 5, 6):
        num = -(2 * s0 - 1) * r * r + (-2 * s0 + 2 * m * m - 4 * m + 5) * r
    elif l == 7:
        num = r * r + (2 * m * m - 6 * m + 3) * r
    elif l == 8:
        num = (-4 * s0 + 1) * r * r + (-4 * s0 + 2 * m * m - 2 * m + 7) * r
    else:
        raise ValueError(f"F2 is printed for families 4..8, got {l}")
    return Fraction(num, 2)


def printed_F3(l: int, p: ScheduleParams, variant: str = "proof") -> Fraction | None:
    """Printed F_{l,3} per case; None where the source prints no formula.

    variant="proof" evaluates the proofs' final expressions; for l = 4 and
    odd s >= 3 the display differs and variant="display" evaluates it too.
    """
    m, r, s, s0, s1 = p.m, p.r, p.s, p.s0, p.s1
    if l == 4 and s % 2 == 0 and s >= 2:
        num = (12 * s0 * s0 * s1 * r * r
               + 3 * (4 * s0 * s1 * s1 - (4 * m * s0 - 1) * s1) * r
               + 4 * s1**3 - 6 * m * s1 * s1 + (6 * m * m - 9 * m + 2) * s1
               + 3 * (1 - _sgn(s1)) // 2)
        return Fraction(num, 3)
    if l == 5 and s % 2 == 0 and s >= 2:
        num = (12 * (s0 * s0 * s1 - 2 * s0 * s0) * r * r
               + 3 * (4 * s0 * s1 * s1 - (4 * (m + 4) * s0 - 1) * s1
                      + (8 * m + 10) * s0 + 1) * r
               + 4 * s1**3 - 6 * (m + 4) * s1 * s1
               + (6 * m * m + 15 * m + 32) * s1 - (6 * m * m + 15 * m)
               + 3 * (1 + _sgn(s1)) // 2)
        return Fraction(num, 3)
    if l == 6 and s % 2 == 0:
        num = (12 * s0 * s0 * s1 * r * r
               + 3 * (4 * s0 * s1 * s1 - (4 * m * s0 - 1) * s1) * r
               + 4 * s1**3 - 6 * m * s1 * s1 + (6 * m * m - 9 * m + 5) * s1)
        return Fraction(num, 3)
    if l == 4 and s == 1:
        return Fraction(-2 * (s0 * s0 + 2 * s0 + 1) * r * r
                        + ((2 * m - 3) * s0 + 2 * (m - 1)) * r)
    if l == 4 and s % 2 == 1 and s >= 3:
        if variant == "display":
            num = (6 * (2 * s0 * s0 * s1 + s0 * s0) * r * r
                   + 6 * (2 * s0 * s1 * s1 - 2 * (m - 1) * s0 * s1 - (m - 1) * s0) * r
                   + 4 * s1**3 - 6 * (m - 1) * s1 * s1
                   + (6 * m * m - 12 * m + 8) * s1 + 3 * m * m - 6 * m + 3)
        else:
            num = (6 * (2 * s0 * s0 * s1 + s0 * s0 + s0) * r * r
                   + 3 * (4 * s0 * s1 * s1 - (4 * (m - 1) * s0 - 3) * s1
                          - (2 * m - 1) * s0 - m - 1) * r
                   + 4 * s1**3 - 6 * (m - 1) * s1 * s1
                   + (6 * m * m - 15 * m + 5) * s1 + 3 * m * m - 6 * m + 3)
        return Fraction(num, 3)
    if l == 7 and s % 2 == 1:
        num = (6 * (2 * s0 * s0 * s1 + s0 * s0) * r * r
               + 3 * (4 * s0 * s1 * s1 - (4 * (m - 1) * s0 - 1) * s1
                      - (2 * m - 1) * s0 + 1) * r
               + 4 * s1**3 - 6 * (m - 1) * s1 * s1
               + (6 * m * m - 15 * m + 8) * s1 + 3 * m * m - 6 * m + 3)
        return Fraction(num, 3)
    if l == 8 and s % 2 == 1:
        num = (6 * (2 * s0 * s0 * s1 + s0 * s0) * r * r
               + 3 * (4 * s0 * s1 * s1 - (4 * (m - 1) * s0 - 1) * s1
                      - (2 * m - 3) * s0) * r
               + 4 * s1**3 - 6 * (m - 1) * s1 * s1
               + (6 * m * m - 15 * m + 14) * s1 + 3 * m * m - 9 * m + 6)
        return Fraction(num, 3)
    return None


# ---------------------------------------------------------------------------
# verification reports

@dataclass(frozen=True)
class ReportRow:
    lemma: str
    m: int
    n: int | None
    l: int | None
    branch: str
    printed: str
    computed: str
    status: str  # match | mismatch | n/a


@dataclass
class VerificationReport:
    lemma: str
    grid: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def mismatches(self) -> list[ReportRow]:
        return [r for r in self.rows if r.status == "mismatch"]

    @property
    def all_match(self) -> bool:
        return not self.mismatches

    def extend(self, other: "VerificationReport") -> None:
        self.rows.extend(other.rows)


def report_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lemma", "m", "n", "l", "branch", "printed", "computed", "status"])
    for rep in reports:
        for r in rep.rows:
            w.writerow([r.lemma, r.m, "" if r.n is None else r.n,
                        "" if r.l is None else r.l,
                        r.branch, r.printed, r.computed, r.status])
    return buf.getvalue()


def report_to_json(reports: Iterable[VerificationReport]) -> str:
    payload = {
        "schema": 1,
        "reports": [
            {
                "lemma": rep.lemma,
                "grid": rep.grid,
                "rows": [
                    {"lemma": r.lemma, "m": r.m, "n": r.n, "l": r.l,
                     "branch": r.branch, "printed": r.printed,
                     "computed": r.computed, "status": r.status}
                    for r in rep.rows
                ],
            }
            for rep in reports
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def discrepancy_lines(reports: Iterable[VerificationReport]) -> str:
    """Machine-readable mismatch records, one JSON object per line."""
    out = []
    for rep in reports:
        for r in rep.mismatches:
            out.append(json.dumps({
                "lemma": r.lemma,
                "params": {"m": r.m, "n": r.n, "l": r.l, "branch": r.branch},
                "printed": r.printed,
                "computed": r.computed,
            }, sort_keys=True))
    return "\n".join(out) + ("\n" if out else "")


def _fmt(v) -> str:
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _row(lemma: str, m: int, n: int | None, l: int | None, branch: str,
         printed, computed) -> ReportRow:
    status = "match" if Fraction(printed) == Fraction(computed) else "mismatch"
    return ReportRow(lemma, m, n, l, branch, _fmt(printed), _fmt(computed), status)


def _bound_row(lemma: str, m: int, n: int | None, l: int | None, branch: str,
               bound, exact) -> ReportRow:
    status = "match" if Fraction(exact) <= Fraction(bound) else "mismatch"
    return ReportRow(lemma, m, n, l, branch, _fmt(bound), _fmt(exact), status)


def _admissible_cells(ms: list[int], ns: list[int]) -> list[tuple[int, int]]:
    return [(m, n) for m in ms for n in ns if n % 2 == 1 and 3 <= n < m]


def _family_active(l: int, s: int) -> bool:
    """f4 appears in both schedules, f5/f6 only for even s, f7/f8 for odd s."""
    if l == 4:
        return True
    return (s % 2 == 0) if l in (5, 6) else (s % 2 == 1)


def schedule_total_bruteforce(m: int, n: int, readings: Readings = DEFAULT) -> int:
    sched = schedule_for(m, n, "cycle", readings)
    return sum(sector_crossings_bruteforce(SectorModel(m, p))
               for p in sched.per_layer)


# ---------------------------------------------------------------------------
# the sweeps

def verify_sweep(lemma: str, ms: list[int], ns: list[int],
                 readings: Readings = DEFAULT) -> VerificationReport:
    """Evaluate one lemma's printed algebra against its counting oracle on a
    grid.  Mismatches are rows, never errors."""
    grid = f"m={ms[0]}..{ms[-1]}" + (f", n={ns}" if ns else "")
    rep = VerificationReport(lemma=lemma, grid=grid)
    add = rep.rows.append

    if lemma == "2.1":
        for m in ms:
            if m < 4:
                continue
            e1_closed = interior_layer_closed(m)
            e1_sum = interior_layer_sum(m)
            add(_row("2.1", m, None, None, "E1", e1_closed, e1_sum))
            sv_closed = end_layer_savings_closed(m)
            sv_sum = end_layer_savings_sum(m)
            add(_row("2.1", m, None, None, "E0-savings", sv_closed, sv_sum))
            for n in ns:
                if n < 4:
                    continue
                assembled = 2 * (e1_sum - sv_sum) + (n - 3) * e1_sum
                add(_row("2.1", m, n, None, "total",
                         path_drawing_displayed(m, n), assembled))
    elif lemma == "3.1":
        for m in ms:
            if m < 4:
                continue
            for l in (1, 2, 3):
                if l == 3 and m % 2 == 1:
                    continue
                f = base_permutation(l, m)
                add(_row("3.1", m, None, l, f"f{l}",
                         sector_crossings_formula(f),
                         sector_crossings_bruteforce(SectorModel(m, f))))
            for l in (4, 5, 6, 7, 8):
                for _, n in _admissible_cells([m], ns):
                    if not _family_active(l, m % n):
                        continue
                    f = extended_permutation(l, m, n)
                    add(_row("3.1", m, n, l, f"f{l}",
                             sector_crossings_formula(f),
                             sector_crossings_bruteforce(SectorModel(m, f))))
    elif lemma in ("3.2", "3.3", "3.4", "3.5"):
        spec = {"3.2": (1, None), "3.3": (2, 1), "3.4": (2, 0), "3.5": (3, 0)}
        l, parity = spec[lemma]
        for m in ms:
            if m < 4 or (parity is not None and m % 2 != parity):
                continue
            f = base_permutation(l, m)
            add(_row(lemma, m, None, l, f"f{l}", nu_layer_closed(l, m),
                     sector_crossings_bruteforce(SectorModel(m, f))))
    elif lemma == "3.6":
        for m in ms:
            if m < 4:
                continue
            for n in ns:
                if n % 2 != 0 or n < 4:
                    continue
                add(_row("3.6", m, n, None, "even_n",
                         n * layer_base(m),
                         schedule_total_bruteforce(m, n, readings)))
    elif lemma == "3.7":
        for m in ms:
            if m < 4:
                continue
            for n in ns:
                if n % 2 == 0 or n < m:
                    continue
                add(_row("3.7", m, n, None, "m_le_odd_n",
                         n * layer_base(m) + m * (m - 1) // 2,
                         schedule_total_bruteforce(m, n, readings)))
    elif lemma == "3.8":
        for l in (4, 5, 6, 7, 8):
            for m, n in _admissible_cells(ms, ns):
                if not _family_active(l, m % n):
                    continue
                ps = partial_sums(l, m, n)
                c2 = m * (m - 1) // 2
                f = extended_permutation(l, m, n)
                add(_row("3.8", m, n, l, "decomposition",
                         c2 * c2 - ps.total,
                         sector_crossings_bruteforce(SectorModel(m, f))))
    elif lemma == "3.9":
        for l in (4, 5, 6, 7, 8):
            for m, n in _admissible_cells(ms, ns):
                if not _family_active(l, m % n):
                    continue
                p = ScheduleParams.of(m, n)
                direct = partial_sums(l, m, n).F1
                for variant in ("display", "proof"):
                    add(_row("3.9", m, n, l, variant,
                             printed_F1(variant, p), direct))
    elif lemma == "3.10":
        for l in (4, 5, 6, 7, 8):
            for m, n in _admissible_cells(ms, ns):
                if not _family_active(l, m % n):
                    continue
                p = ScheduleParams.of(m, n)
                add(_row("3.10", m, n, l, f"l{l}",
                         printed_F2(l, p), partial_sums(l, m, n).F2))
    elif lemma == "3.11":
        for l in (4, 5, 6, 7, 8):
            for m, n in _admissible_cells(ms, ns):
                s = m % n
                if not _family_active(l, s):
                    continue
                p = ScheduleParams.of(m, n)
                direct = partial_sums(l, m, n).F3
                printed = printed_F3(l, p, "proof")
                if printed is None:
                    add(ReportRow("3.11", m, n, l, "proof", "", str(direct), "n/a"))
                else:
                    add(_row("3.11", m, n, l, "proof", printed, direct))
                if l == 4 and s % 2 == 1 and s >= 3:
                    add(_row("3.11", m, n, l, "display",
                             printed_F3(l, p, "display"), direct))
    elif lemma == "3.12":
        for m in ms:
            for n in ns:
                if not (n % 2 == 1 and 3 <= n < m):
                    continue
                s = m % n
                add(_row("3.12", m, n, None, "s1" if s == 1 else "s_ne_1",
                         cycle_drawing_m_gt_n(m, n),
                         schedule_total_bruteforce(m, n, readings)))
    elif lemma == "3.13":
        for m in ms:
            if m <= 3:
                continue
            exact = nu_cycle_drawing(m, 3).value
            add(_bound_row("3.13", m, 3, None, "stated_plus16",
                           bound_n3(m, 16), exact))
            add(_bound_row("3.13", m, 3, None, "derivation_minus16",
                           bound_n3(m, -16), exact))
    elif lemma == "3.14":
        for m in ms:
            for n in ns:
                if not (n % 2 == 1 and 5 <= n < m):
                    continue
                add(_bound_row("3.14", m, n, None, "odd_n_ge5",
                               bound_odd_n5(m, n), nu_cycle_drawing(m, n).value))
    elif lemma in ("4.1", "4.2", "bounds"):
        from crossforge import lowerbounds
        return lowerbounds.verify_sweep(lemma, ms, ns)
    else:
        raise ValueError(f"unknown lemma id {lemma!r}")
    return rep


# pinned desk-scale grids for `verify --lemma all --quick`
QUICK_GRIDS: dict[str, tuple[list[int], list[int]]] = {
    "2.1": (list(range(4, 13)), [4, 5, 6, 7]),
    "3.1": (list(range(4, 11)), [3, 5, 7]),
    "3.2": (list(range(4, 13)), []),
    "3.3": (list(range(4, 13)), []),
    "3.4": (list(range(4, 13)), []),
    "3.5": (list(range(4, 13)), []),
    "3.6": (list(range(4, 9)), [4, 6]),
    "3.7": (list(range(4, 10)), [5, 7, 9]),
    "3.8": (list(range(4, 13)), [3, 5, 7]),
    "3.9": (list(range(4, 16)), [3, 5, 7]),
    "3.10": (list(range(4, 16)), [3, 5, 7]),
    "3.11": (list(range(4, 16)), [3, 5, 7]),
    "3.12": (list(range(4, 13)), [3, 5, 7]),
    "3.13": (list(range(4, 13)), [3]),
    "3.14": (list(range(6, 13)), [5, 7]),
    "4.1": (list(range(4, 17)), []),
    "4.2": (list(range(4, 17)), []),
    "bounds": (list(range(4, 41)), list(range(3, 10))),
}


def run_all_quick(readings: Readings = DEFAULT) -> list[VerificationReport]:
    return [verify_sweep(lemma, ms, ns, readings)
            for lemma, (ms, ns) in QUICK_GRIDS.items()]
