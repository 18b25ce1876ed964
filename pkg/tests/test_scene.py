import json

import pytest

from crossforge.closedforms import nu_cycle_drawing, nu_path_drawing
from crossforge.conformance import Readings
from crossforge.kernels import DegenerateSceneError
from crossforge.layercount import SectorModel, annulus_crossings, \
    sector_crossings_bruteforce
from crossforge.scene import (CAP, LATERAL, CapChord, CapDrop, CylinderScene,
                              Lateral, SceneEdge, cap_route_search,
                              count_scene_crossings, planar_small_cases,
                              realize_cycle_drawing, realize_path_drawing,
                              scene_to_json)
from crossforge.schedules import schedule_for


def _scene_of(segs, period=10):
    vertices = {}
    edges = []
    for k, (x0, y0, x1, y1) in enumerate(segs):
        u, v = (2 * k, 0), (2 * k + 1, 0)
        vertices[u] = (x0, y0)
        vertices[v] = (x1, y1)
        edges.append(SceneEdge(u=u, v=v, pieces=(Lateral(x0, y0, x1, y1),)))
    return CylinderScene(family="path", m=len(segs) * 2, n=1, period=period,
                         vertices=vertices, edges=tuple(edges))


def test_two_parallel_meridians_do_not_cross():
    sc = _scene_of([(0, 0, 0, 4), (3, 0, 3, 4)])
    assert count_scene_crossings(sc) == 0


def test_crossing_segments_counted_once():
    sc = _scene_of([(0, 0, 4, 4), (4, 0, 0, 4)])
    assert count_scene_crossings(sc) == 1


def test_wraparound_crossing_detected():
    # one segment crosses the seam and meets the other on the far side
    sc = _scene_of([(8, 0, 12, 4), (1, 0, 1, 4)], period=10)
    assert count_scene_crossings(sc) == 1


def test_overlapping_tangency_is_an_error():
    sc = _scene_of([(0, 0, 4, 4), (1, 1, 5, 5)])
    with pytest.raises(DegenerateSceneError):
        count_scene_crossings(sc)


def test_cycle_scene_counts_match_closed_forms():
    for m, n in [(4, 4), (4, 5), (5, 5), (4, 3), (7, 3), (4, 6)]:
        sc = realize_cycle_drawing(m, n)
        assert sc.meta["closure"], (m, n)
        assert count_scene_crossings(sc) == nu_cycle_drawing(m, n).value, (m, n)


def test_cycle_scene_oracle_agreement_grid():
    # geometric count == layer-wise brute-force sum under the same schedule
    for m in range(4, 9):
        for n in range(3, 8):
            sc = realize_cycle_drawing(m, n)
            sched = schedule_for(m, n)
            layer_sum = sum(sector_crossings_bruteforce(SectorModel(m, p))
                            for p in sched.per_layer)
            assert count_scene_crossings(sc) == layer_sum, (m, n)


def test_distinct_layers_never_cross():
    sc = realize_cycle_drawing(5, 4)
    by_layer = {}
    for e in sc.edges:
        by_layer.setdefault(min(e.u[1], e.v[1]) if abs(e.u[1] - e.v[1]) == 1
                            else sc.n - 1, []).append(e)
    total = count_scene_crossings(sc)
    per_layer = 0
    for j, edges in by_layer.items():
        sub = CylinderScene(family=sc.family, m=sc.m, n=sc.n, period=sc.period,
                            vertices=sc.vertices, edges=tuple(edges))
        per_layer += count_scene_crossings(sub)
    assert total == per_layer


def test_wrong_odd_phase_breaks_closure():
    sc = realize_cycle_drawing(7, 3, Readings(odd_s_phase="f8_first"))
    assert not sc.meta["closure"]
    # the scene is still well-defined; its count just differs from the lemma
    assert count_scene_crossings(sc) != nu_cycle_drawing(7, 3).value


def test_cap_search_exhaustive_gates():
    r4 = cap_route_search(4)
    assert r4.count == 4 and r4.method == "exhaustive"
    r5 = cap_route_search(5)
    assert r5.count == 15 and r5.method == "exhaustive"
    assert set(r5.assignment.values()) <= {CAP, LATERAL}


def test_cap_search_m6_local_search_reaches_48():
    r6 = cap_route_search(6)
    assert r6.count == 48 and r6.method == "class_descent"


def test_cap_search_bottom_mirrors_top():
    for m in (4, 5, 6):
        assert cap_route_search(m, "bottom").count == cap_route_search(m, "top").count


def test_cap_search_never_beats_all_lateral_upper():
    for m in range(4, 8):
        assert cap_route_search(m).count <= annulus_crossings(m)


def test_cap_search_matches_end_layer_closed_form():
    # the searched optimum reproduces the proof's end-layer counts
    from crossforge.closedforms import end_layer_closed
    for m in (4, 5, 6, 7):
        assert cap_route_search(m).count == end_layer_closed(m)


def test_path_scene_counts():
    for m, n in [(4, 4), (5, 4), (6, 4), (5, 6)]:
        sc = realize_path_drawing(m, n)
        assert count_scene_crossings(sc) == nu_path_drawing(m, n).total, (m, n)
    sc = realize_path_drawing(5, 4)
    assert sc.meta["end_layer_count"] == 15
    assert sc.meta["bottom_end_layer_count"] == 15


def test_path_scene_small_m_is_planar():
    for m in (1, 2, 3):
        for n in (4, 6):
            assert count_scene_crossings(realize_path_drawing(m, n)) == 0


def test_planar_witness_sweep():
    for n in range(2, 9):
        for m in (1, 2, 3):
            assert count_scene_crossings(planar_small_cases(m, "path", n)) == 0
    for n in range(3, 9):
        for m in (1, 2):
            assert count_scene_crossings(planar_small_cases(m, "cycle", n)) == 0


def test_planar_witness_rejects_out_of_range():
    with pytest.raises(ValueError):
        planar_small_cases(4, "path", 5)
    with pytest.raises(ValueError):
        planar_small_cases(3, "cycle", 5)


def test_scene_json_roundtrip():
    sc = realize_cycle_drawing(4, 4)
    payload = json.loads(scene_to_json(sc))
    assert payload["schema"] == 1
    assert payload["crossings"] == 56
    assert len(payload["vertices"]) == 16
    assert len(payload["edges"]) == 48
    kinds = {p["kind"] for e in payload["edges"] for p in e["pieces"]}
    assert kinds == {"lateral"}
    sp = json.loads(scene_to_json(realize_path_drawing(5, 4)))
    kinds = {p["kind"] for e in sp["edges"] for p in e["pieces"]}
    assert kinds == {"lateral", "chord", "drop"}


def test_cap_pieces_structure():
    sc = realize_path_drawing(5, 4)
    for e in sc.edges:
        if any(isinstance(p, CapChord) for p in e.pieces):
            chord = next(p for p in e.pieces if isinstance(p, CapChord))
            drop = next(p for p in e.pieces if isinstance(p, CapDrop))
            assert chord.disk == drop.disk
            if chord.disk == "top":
                assert drop.x == e.v[0] and (drop.y0, drop.y1) == (0, 1)
            else:
                assert drop.x == e.u[0] and (drop.y0, drop.y1) == (2, 3)
