"""Embedding-congestion lower bounds (the Leighton route).

The multigraph K^x_{m,m} with x = (m-1)(m-2) embeds into K_{m,m} minus a
perfect matching: non-matching pairs route directly, matching pairs take the
3-edge detour a_i -> b_alpha -> a_beta -> b_i over the k-th ordered pair
(alpha, beta) avoiding i.  Every host edge then carries exactly
(m-2)(m+2) routes, and the congestion bound

    cr(G2) >= cr(G1) / cg^2 - (|V2|/2) Delta(G2)^2

turns the known complete-bipartite lower bound into bounds for the layer
structures.  Both the stated closed forms and the full pipeline (bipartite
bound -> multigraph scaling -> congestion -> Leighton) are computed; tests
require them to agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from crossforge import closedforms
from crossforge.closedforms import (ReportRow, VerificationReport, _bound_row,
                                    _fmt, _row)

BIPARTITE_COEFF = Fraction(4297, 5000)  # 0.8594, frozen exactly


def kmn_lower(m: int, n: int) -> Fraction:
    """Lower bound for the complete bipartite crossing number."""
    if m < 1 or n < 1:
        raise ValueError("parts must be nonempty")
    return (BIPARTITE_COEFF * (m // 2) * ((m - 1) // 2)
            * (n // 2) * ((n - 1) // 2))


def multigraph_scale(x: int, base: Fraction) -> Fraction:
    """cr of the x-fold parallel multigraph scales by x^2."""
    if x < 1:
        raise ValueError(f"multiplicity must be >= 1, got {x}")
    return x * x * base


def leighton_bound(cr_g1_lower: Fraction, cg: int, v2: int, max_deg: int) -> Fraction:
    """Raw congestion bound; may be negative, which is preserved."""
    if cg < 1:
        raise ValueError(f"congestion must be >= 1, got {cg}")
    return Fraction(cr_g1_lower, cg * cg) - Fraction(v2, 2) * max_deg * max_deg


# ---------------------------------------------------------------------------
# embeddings

def enumerate_arrangements(m: int, i: int) -> list[tuple[int, int]]:
    """All ordered pairs (alpha, beta) from {0..m-1}\\{i}, alpha != beta,
    lexicographic; there are (m-1)(m-2) of them."""
    if m < 3:
        raise ValueError(f"arrangements need m >= 3, got {m}")
    others = [v for v in range(m) if v != i]
    return [(a, b) for a in others for b in others if a != b]


@dataclass(frozen=True)
class Embedding:
    """phi plus routes of K^x into the host; routes iterate lazily.

    Host vertices are ("a", i) / ("b", i) (and ("c", i) for the doubled
    target); host edges are frozensets of two host vertices.
    """

    kind: str  # "kmm" | "km2m"
    m: int

    @property
    def multiplicity(self) -> int:
        return (self.m - 1) * (self.m - 2)

    def host_vertices(self) -> list[tuple[str, int]]:
        sides = ("a", "b") if self.kind == "kmm" else ("a", "b", "c")
        return [(s, i) for s in sides for i in range(self.m)]

    def host_edges(self) -> list[frozenset]:
        sides = ("b",) if self.kind == "kmm" else ("b", "c")
        return [frozenset({("a", i), (s, j)})
                for s in sides for i in range(self.m) for j in range(self.m)
                if i != j]

    def host_max_degree(self) -> int:
        return (self.m - 1) if self.kind == "kmm" else 2 * (self.m - 1)

    def phi(self, v: tuple[str, int]) -> tuple[str, int]:
        side, i = v
        return ({"u": "a", "v": "b", "w": "c"}[side], i)

    def iter_routes(self, aggregated: bool = True) -> Iterator[tuple[tuple, list, int]]:
        """Yield (source edge key, host path as vertex list, weight).

        aggregated=True collapses the x identical direct routes of each
        non-matching pair into one weighted record; detours stay individual.
        """
        m, x = self.m, self.multiplicity
        sides = ("v",) if self.kind == "kmm" else ("v", "w")
        host = {"v": "b", "w": "c"}
        for s in sides:
            hs = host[s]
            for i in range(m):
                for j in range(m):
                    if i == j:
                        continue
                    path = [("a", i), (hs, j)]
                    if aggregated:
                        yield (("u", i), (s, j), "1..x"), path, x
                    else:
                        for k in range(1, x + 1):
                            yield (("u", i), (s, j), k), path, 1
            for i in range(m):
                for k, (alpha, beta) in enumerate(enumerate_arrangements(m, i), 1):
                    path = [("a", i), (hs, alpha), ("a", beta), (hs, i)]
                    yield (("u", i), (s, i), k), path, 1

    def validate(self) -> None:
        """Route endpoints must be phi-images; every route edge must exist."""
        edges = set(self.host_edges())
        for key, path, _ in self.iter_routes():
            (_, i), (s, j), _k = key
            want = (("a", i), ({"v": "b", "w": "c"}[s], j))
            if (path[0], path[-1]) != want:
                raise AssertionError(f"route {key} endpoints {path[0]},{path[-1]}")
            for u, v in zip(path, path[1:]):
                if frozenset({u, v}) not in edges:
                    raise AssertionError(f"route {key} uses non-edge {u}-{v}")


def build_embedding_kmm(m: int) -> Embedding:
    if m < 4:
        raise ValueError(f"the matching-deleted embedding needs m >= 4, got {m}")
    e = Embedding(kind="kmm", m=m)
    e.validate()
    return e


def build_embedding_km2m(m: int) -> Embedding:
    if m < 4:
        raise ValueError(f"the star-deleted embedding needs m >= 4, got {m}")
    e = Embedding(kind="km2m", m=m)
    e.validate()
    return e


@dataclass(frozen=True)
class CongestionReport:
    per_edge: dict
    max: int
    route_length_sum: int

    @property
    def uniform(self) -> bool:
        return len(set(self.per_edge.values())) == 1


def congestion(e: Embedding) -> CongestionReport:
    per = {edge: 0 for edge in e.host_edges()}
    length_sum = 0
    for _key, path, weight in e.iter_routes():
        length_sum += (len(path) - 1) * weight
        for u, v in zip(path, path[1:]):
            per[frozenset({u, v})] += weight
    return CongestionReport(per_edge=per, max=max(per.values()),
                            route_length_sum=length_sum)


# ---------------------------------------------------------------------------
# stated bounds and the pipeline recomputation

def _shrink(m: int) -> Fraction:
    """0.8594/(1+3/(m-1))^2 as an exact rational."""
    return BIPARTITE_COEFF * Fraction(m - 1, m + 2) ** 2


def lb_kmm_minus_matching(m: int) -> Fraction:
    """Stated lower bound for the single-layer structure (raw, may be < 0)."""
    if m < 4:
        raise ValueError(f"needs m >= 4, got {m}")
    return (_shrink(m) * (m // 2) ** 2 * ((m - 1) // 2) ** 2
            - m * (m - 1) ** 2)


def lb_km2m(m: int) -> Fraction:
    """Stated lower bound for the two-layer structure (raw, may be < 0)."""
    if m < 4:
        raise ValueError(f"needs m >= 4, got {m}")
    return (_shrink(m) * m * (m - 1) * (m // 2) * ((m - 1) // 2)
            - 6 * m * (m - 1) ** 2)


def pipeline_kmm(m: int, computed_congestion: int | None = None) -> Fraction:
    """Recompute the kmm bound end to end.

    computed_congestion comes from congestion(build_embedding_kmm(m)); pass
    None to build and measure it here.
    """
    cg = (computed_congestion if computed_congestion is not None
          else congestion(build_embedding_kmm(m)).max)
    x = (m - 1) * (m - 2)
    return leighton_bound(multigraph_scale(x, kmn_lower(m, m)), cg, 2 * m, m - 1)


def pipeline_km2m(m: int, computed_congestion: int | None = None) -> Fraction:
    cg = (computed_congestion if computed_congestion is not None
          else congestion(build_embedding_km2m(m)).max)
    x = (m - 1) * (m - 2)
    return leighton_bound(multigraph_scale(x, kmn_lower(m, 2 * m)), cg, 3 * m,
                          2 * (m - 1))


@dataclass(frozen=True)
class LowerBound:
    raw: Fraction
    clamped: Fraction
    branch: str


def _combine(n_2layer: Fraction, extra_1layer: bool, m: int, branch: str) -> LowerBound:
    raw = n_2layer * lb_km2m(m)
    if extra_1layer:
        raw += lb_kmm_minus_matching(m)
    return LowerBound(raw=raw, clamped=max(raw, Fraction(0)), branch=branch)


def lower_bound_path(m: int, n: int) -> LowerBound:
    if m < 4:
        raise ValueError(f"needs m >= 4, got {m}")
    if n < 2:
        raise ValueError(f"paths need n >= 2, got {n}")
    if n % 2 == 0:
        return _combine(Fraction(n - 2, 2), True, m, "even_n")
    return _combine(Fraction(n - 1, 2), False, m, "odd_n")


def lower_bound_cycle(m: int, n: int) -> LowerBound:
    if m < 4:
        raise ValueError(f"needs m >= 4, got {m}")
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    if n % 2 == 1:
        return _combine(Fraction(n - 1, 2), True, m, "odd_n")
    return _combine(Fraction(n, 2), False, m, "even_n")


# ---------------------------------------------------------------------------
# bound tables and sweeps

@dataclass(frozen=True)
class BoundsRow:
    m: int
    n: int
    family: str
    lower_raw: Fraction
    lower_clamped: Fraction
    upper: Fraction
    exact_drawing: Fraction | None


def bounds_table(family: str, ms: list[int], ns: list[int]) -> list[BoundsRow]:
    rows = []
    for m in ms:
        for n in ns:
            if family == "path":
                if n in (2, 3):
                    raise ValueError("deferred by paper (n = 2, 3)")
                upper = closedforms.upper_bound_path(m, n)
                exact = (Fraction(closedforms.nu_path_drawing(m, n).total)
                         if m >= 4 else Fraction(0))
                lb = (lower_bound_path(m, n) if m >= 4
                      else LowerBound(Fraction(0), Fraction(0), "m_le_3"))
            elif family == "cycle":
                upper = closedforms.upper_bound_cycle(m, n)
                exact = (closedforms.nu_cycle_drawing(m, n).value
                         if m >= 4 else None)
                lb = (lower_bound_cycle(m, n) if m >= 4
                      else LowerBound(Fraction(0), Fraction(0), "m_le_3"))
            else:
                raise ValueError(f"family must be 'path' or 'cycle', got {family!r}")
            rows.append(BoundsRow(m=m, n=n, family=family,
                                  lower_raw=lb.raw, lower_clamped=lb.clamped,
                                  upper=upper.value, exact_drawing=exact))
    return rows


def verify_sweep(lemma: str, ms: list[int], ns: list[int]) -> VerificationReport:
    """Pipeline-vs-formula equalities (4.1/4.2) and lower<=upper sanity."""
    grid = f"m={ms[0]}..{ms[-1]}" + (f", n={ns}" if ns else "")
    rep = VerificationReport(lemma=lemma, grid=grid)
    if lemma == "4.1":
        for m in ms:
            if m < 4:
                continue
            rep.rows.append(_row("4.1", m, None, None, "pipeline",
                                 lb_kmm_minus_matching(m), pipeline_kmm(m)))
    elif lemma == "4.2":
        for m in ms:
            if m < 4:
                continue
            rep.rows.append(_row("4.2", m, None, None, "pipeline",
                                 lb_km2m(m), pipeline_km2m(m)))
    elif lemma == "bounds":
        for m in ms:
            if m < 4:
                continue
            for n in ns:
                if n >= 4:
                    rep.rows.append(_bound_row(
                        "bounds", m, n, None, "path",
                        closedforms.upper_bound_path(m, n).value,
                        lower_bound_path(m, n).clamped))
                if n >= 3:
                    rep.rows.append(_bound_row(
                        "bounds", m, n, None, "cycle",
                        closedforms.upper_bound_cycle(m, n).value,
                        lower_bound_cycle(m, n).clamped))
    else:
        raise ValueError(f"unknown lemma id {lemma!r}")
    return rep


def first_positive_kmm_bound(m_max: int = 40) -> int | None:
    """Smallest m with a positive single-layer lower bound."""
    for m in range(4, m_max + 1):
        if lb_kmm_minus_matching(m) > 0:
            return m
    return None
