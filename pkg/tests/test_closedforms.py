import json
from fractions import Fraction

import pytest

from crossforge.closedforms import (QUICK_GRIDS, bound_n3, bound_odd_n5,
                                    discrepancy_lines, end_layer_closed,
                                    end_layer_savings_closed,
                                    end_layer_savings_sum,
                                    interior_layer_closed, interior_layer_sum,
                                    nu_cycle_drawing, nu_layer_closed,
                                    nu_path_drawing, path_drawing_displayed,
                                    report_to_csv, report_to_json,
                                    schedule_total_bruteforce,
                                    small_case_values, upper_bound_cycle,
                                    upper_bound_path, verify_sweep)


def test_layer_closed_reference_values():
    assert nu_layer_closed(1, 4) == 14
    assert nu_layer_closed(2, 5) == 52
    assert nu_layer_closed(3, 4) == 16
    with pytest.raises(ValueError):
        nu_layer_closed(3, 5)


def test_path_drawing_counts():
    d = nu_path_drawing(4, 4)
    assert (d.total, d.end_layer, d.interior_layer) == (12, 4, 4)
    d = nu_path_drawing(5, 4)
    assert (d.total, d.end_layer, d.interior_layer) == (50, 15, 20)
    d = nu_path_drawing(6, 4)
    assert (d.total, d.end_layer) == (156, 48)


def test_path_proof_sums_match_closed_forms():
    for m in range(4, 16):
        assert interior_layer_sum(m) == interior_layer_closed(m)
        assert end_layer_savings_sum(m) == end_layer_savings_closed(m)
        for n in range(4, 9):
            assembled = 2 * end_layer_closed(m) + (n - 3) * interior_layer_closed(m)
            assert path_drawing_displayed(m, n) == assembled


def test_upper_bound_path():
    assert upper_bound_path(3, 7).value == 0
    assert upper_bound_path(4, 4).value == 12
    assert upper_bound_path(5, 6).value == 90  # 2*15 + 3*20
    with pytest.raises(ValueError, match="deferred by paper"):
        upper_bound_path(5, 2)
    with pytest.raises(ValueError, match="deferred by paper"):
        upper_bound_path(5, 3)


def test_cycle_drawing_counts():
    assert nu_cycle_drawing(4, 4).value == 56
    assert nu_cycle_drawing(4, 4).branch == "even_n"
    assert nu_cycle_drawing(5, 5).value == 260
    assert nu_cycle_drawing(5, 5).branch == "m_le_odd_n"
    assert nu_cycle_drawing(4, 3).value == 52
    assert nu_cycle_drawing(4, 3).branch == "s1"
    assert nu_cycle_drawing(8, 3).value == 1700
    assert nu_cycle_drawing(8, 3).branch == "s_ne_1"


def test_upper_bound_cycle_branches():
    assert upper_bound_cycle(4, 6).value == 84
    assert upper_bound_cycle(4, 3).value == Fraction(42) + Fraction(1112, 108)
    assert not upper_bound_cycle(4, 3).is_exact
    assert upper_bound_cycle(6, 5).value == 704  # 5*130 + 216/4
    assert upper_bound_cycle(5, 5).value == 260


def test_small_case_values():
    assert small_case_values(2, 5, "cycle").value == 0
    v = small_case_values(3, 3, "cycle")
    assert v.value == 3 and v.is_exact
    v = small_case_values(3, 10, "cycle")
    assert v.value == 30 and not v.is_exact
    assert small_case_values(3, 5, "cycle").value == 12  # 6n - 18
    assert small_case_values(3, 9, "path").value == 0


def test_schedule_totals_match_closed_forms():
    # Lemma 3.6 shape: even n is n copies of the f1 layer
    for m in range(4, 9):
        for n in (4, 6, 8):
            assert nu_cycle_drawing(m, n).value == n * nu_layer_closed(1, m)
    # spot-check the brute-force totals on both odd branches
    assert schedule_total_bruteforce(7, 3) == nu_cycle_drawing(7, 3).value == 907
    assert schedule_total_bruteforce(9, 5) == nu_cycle_drawing(9, 5).value == 4708
    assert schedule_total_bruteforce(5, 7) == nu_cycle_drawing(5, 7).value


def test_verify_sweep_matching_lemmas():
    assert verify_sweep("3.6", list(range(4, 9)), [4, 6, 8]).all_match
    assert verify_sweep("3.1", list(range(4, 9)), [3, 5]).all_match
    assert verify_sweep("2.1", list(range(4, 13)), [4, 5, 6, 7]).all_match
    assert verify_sweep("3.8", list(range(4, 11)), [3, 5, 7]).all_match
    assert verify_sweep("3.12", list(range(4, 11)), [3, 5, 7]).all_match


def test_verify_sweep_lemma_3_9_classification():
    rep = verify_sweep("3.9", list(range(4, 9)), [3, 5, 7])
    by = {(r.l, r.m, r.n, r.branch): r for r in rep.rows}
    # the display variant misses by its -2m*s0 term; the proof variant matches
    r = by[(4, 7, 3, "display")]
    assert (r.printed, r.computed, r.status) == ("43", "51", "mismatch")
    r = by[(4, 7, 3, "proof")]
    assert (r.printed, r.computed, r.status) == ("51", "51", "match")
    assert all(r.status == "match" for r in rep.rows if r.branch == "proof")
    assert all(r.status == "mismatch" for r in rep.rows if r.branch == "display")


def test_verify_sweep_lemma_3_10_3_11():
    rep = verify_sweep("3.10", list(range(4, 16)), [3, 5, 7])
    assert rep.all_match
    rep = verify_sweep("3.11", list(range(4, 16)), [3, 5, 7])
    proof_rows = [r for r in rep.rows if r.branch == "proof"]
    assert proof_rows and all(r.status in ("match", "n/a") for r in proof_rows)
    # the printed l=4/l=5 guards say "s >= 2", so s = 0 cells are n/a there
    for r in proof_rows:
        assert (r.status == "n/a") == (r.m % r.n == 0 and r.l in (4, 5)), r
    display_rows = [r for r in rep.rows if r.branch == "display"]
    assert display_rows and all(r.status == "mismatch" for r in display_rows)


def test_lemma_3_13_slack_and_variants():
    # the stated +16 bound dominates the exact count for every residue
    for m in range(4, 31):
        exact = nu_cycle_drawing(m, 3).value
        assert bound_n3(m, 16) >= exact
        if m % 3 == 1:
            assert bound_n3(m, -16) == exact  # s = 1 derivation is exact
        if m % 3 == 2:
            assert bound_n3(m, -16) < exact  # the -16 variant fails at s = 2
    rep = verify_sweep("3.13", list(range(4, 13)), [3])
    stated = [r for r in rep.rows if r.branch == "stated_plus16"]
    assert all(r.status == "match" for r in stated)


def test_lemma_3_14_bound_holds():
    rep = verify_sweep("3.14", list(range(6, 16)), [5, 7])
    assert rep.rows and rep.all_match
    assert bound_odd_n5(6, 5) == 704


def test_report_serialization():
    reps = [verify_sweep("3.13", [4, 5], [3])]
    csv_text = report_to_csv(reps)
    lines = csv_text.splitlines()
    assert lines[0] == "lemma,m,n,l,branch,printed,computed,status"
    assert len(lines) == 1 + len(reps[0].rows)
    payload = json.loads(report_to_json(reps))
    assert payload["schema"] == 1
    assert payload["reports"][0]["lemma"] == "3.13"
    for line in discrepancy_lines(reps).splitlines():
        rec = json.loads(line)
        assert set(rec) == {"lemma", "params", "printed", "computed"}


def test_quick_grids_cover_every_lemma():
    assert set(QUICK_GRIDS) >= {"2.1", "3.1", "3.6", "3.7", "3.8", "3.9",
                                "3.10", "3.11", "3.12", "3.13", "3.14",
                                "4.1", "4.2", "bounds"}
