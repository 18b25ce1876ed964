from fractions import Fraction

import pytest

from crossforge import closedforms
from crossforge.lowerbounds import (bounds_table, build_embedding_km2m,
                                    build_embedding_kmm, congestion,
                                    enumerate_arrangements,
                                    first_positive_kmm_bound, kmn_lower,
                                    lb_km2m, lb_kmm_minus_matching,
                                    leighton_bound, lower_bound_cycle,
                                    lower_bound_path, multigraph_scale,
                                    pipeline_km2m, pipeline_kmm, verify_sweep)


def test_arrangements():
    assert enumerate_arrangements(3, 0) == [(1, 2), (2, 1)]
    for i in range(4):
        assert len(enumerate_arrangements(4, i)) == 6
    for i in range(5):
        pairs = enumerate_arrangements(5, i)
        assert len(pairs) == len(set(pairs)) == 12
        assert all(a != b and i not in (a, b) for a, b in pairs)


def test_kmm_routes():
    e = build_embedding_kmm(4)
    routes = {key: path for key, path, _w in e.iter_routes()}
    # the k=1 detour of the (u0, v0) pair uses the first arrangement (1, 2)
    assert routes[(("u", 0), ("v", 0), 1)] == [("a", 0), ("b", 1), ("a", 2), ("b", 0)]
    # every direct pair is carried with full multiplicity
    weights = {key: w for key, path, w in e.iter_routes()}
    assert weights[(("u", 0), ("v", 1), "1..x")] == e.multiplicity == 6


def test_congestion_uniform():
    rep = congestion(build_embedding_kmm(4))
    assert rep.max == 12 and rep.uniform
    rep = congestion(build_embedding_kmm(5))
    assert rep.max == 21 and rep.uniform
    rep = congestion(build_embedding_km2m(4))
    assert rep.max == 12 and rep.uniform


def test_congestion_conservation():
    for m in (4, 5, 6):
        for build in (build_embedding_kmm, build_embedding_km2m):
            rep = congestion(build(m))
            assert sum(rep.per_edge.values()) == rep.route_length_sum


class IdentityK33:
    """Trivial embedding: K_{3,3} into itself, direct routes, x = 1."""

    def host_edges(self):
        return [frozenset({("a", i), ("b", j)}) for i in range(3) for j in range(3)]

    def iter_routes(self):
        for i in range(3):
            for j in range(3):
                yield (("u", i), ("v", j), 1), [("a", i), ("b", j)], 1


def test_congestion_trivial_embedding():
    rep = congestion(IdentityK33())
    assert rep.max == 1 and rep.uniform
    assert rep.route_length_sum == 9


def test_kmn_lower_values():
    assert kmn_lower(4, 4) == Fraction(4297, 1250)
    assert kmn_lower(1, 9) == 0
    assert kmn_lower(5, 5) == Fraction(4297, 5000) * 16


def test_scaling_and_leighton():
    assert multigraph_scale(1, Fraction(7)) == 7
    assert multigraph_scale(6, Fraction(4)) == 144
    assert leighton_bound(Fraction(0), 3, 10, 2) == -20
    with pytest.raises(ValueError):
        leighton_bound(Fraction(1), 0, 10, 2)


def test_pipeline_reproduces_stated_formulas():
    for m in range(4, 41):
        assert pipeline_kmm(m) == lb_kmm_minus_matching(m)
        assert pipeline_km2m(m) == lb_km2m(m)


def test_first_positive_kmm_bound():
    assert first_positive_kmm_bound() == 26
    assert lb_kmm_minus_matching(25) < 0
    assert lb_kmm_minus_matching(26) > 0


def test_lower_bounds_shape():
    lb = lower_bound_path(6, 4)
    assert lb.raw < 0 and lb.clamped == 0
    # raw values are preserved, clamped never negative
    for m in (4, 10, 30, 40):
        for n in (3, 4, 5, 8):
            for fn, nmin in ((lower_bound_path, 2), (lower_bound_cycle, 3)):
                if n < nmin:
                    continue
                r = fn(m, n)
                assert r.clamped == max(r.raw, 0)
    # the two-layer term first turns positive at m = 35, and from there the
    # per-parity chains are nondecreasing in n
    assert lb_km2m(34) < 0 < lb_km2m(35)
    for m in (35, 38, 40):
        for fn, ns in ((lower_bound_path, (4, 6, 8)), (lower_bound_path, (5, 7, 9)),
                       (lower_bound_cycle, (3, 5, 7)), (lower_bound_cycle, (4, 6, 8))):
            vals = [fn(m, n).clamped for n in ns]
            assert vals == sorted(vals)


def test_clamped_lower_below_upper_spot():
    rep = verify_sweep("bounds", list(range(4, 21)), list(range(3, 10)))
    assert rep.all_match


def test_cycle_lower_bound_30_5_is_vacuous():
    # the printed theorem gives a negative raw value here: the two-layer
    # term is still negative at m = 30
    r = lower_bound_cycle(30, 5)
    assert r.raw < 0 and r.clamped == 0
    assert lower_bound_cycle(36, 5).raw > 0


def test_bounds_table_example():
    rows = bounds_table("cycle", [4, 5, 6], [3, 4, 5])
    assert len(rows) == 9
    cell = {(r.m, r.n): r for r in rows}[(4, 4)]
    assert cell.upper == 56
    assert cell.lower_clamped <= cell.upper
    with pytest.raises(ValueError, match="deferred"):
        bounds_table("path", [5], [2])
