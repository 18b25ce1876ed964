import pytest

from crossforge.conformance import Readings
from crossforge.layercount import (SectorModel, annulus_crossings,
                                   helix_pair_crossings, index_sets,
                                   partial_sums, sector_crossings_bruteforce,
                                   sector_crossings_formula,
                                   sector_crossings_partial, winding)
from crossforge.schedules import (LayerPermutation, base_permutation,
                                  extended_permutation, inversion_number)


def ident(m):
    return LayerPermutation(m, tuple(range(m)), label="id")


def test_bruteforce_reference_values():
    assert sector_crossings_bruteforce(SectorModel(4, base_permutation(1, 4))) == 14
    assert sector_crossings_bruteforce(SectorModel(4, ident(4))) == 28
    # at m=2 the reversal matching (the one real drawings use) is crossing-free;
    # the identity matching leaves one crossing pair, and the formula agrees
    assert sector_crossings_bruteforce(SectorModel(2, ident(2))) == 1
    assert sector_crossings_formula(ident(2)) == 1
    rev2 = LayerPermutation(2, (1, 0), label="rev")
    assert sector_crossings_bruteforce(SectorModel(2, rev2)) == 0
    assert sector_crossings_formula(rev2) == 0


def test_sector_model_edges():
    model = SectorModel(4, base_permutation(1, 4))
    edges = model.edges()
    assert len(edges) == 12
    assert (0, 3) not in edges
    assert (0, 0) in edges


def test_formula_reference_values():
    assert sector_crossings_formula(base_permutation(1, 4)) == 14
    assert sector_crossings_formula(base_permutation(2, 5)) == 52
    assert sector_crossings_formula(ident(4)) == 28


def test_formula_equals_bruteforce_small_sweep():
    for m in range(4, 10):
        perms = [base_permutation(1, m), base_permutation(2, m), ident(m)]
        if m % 2 == 0:
            perms.append(base_permutation(3, m))
        for n in range(3, m, 2):
            perms.append(extended_permutation(4, m, n))
        for p in perms:
            assert (sector_crossings_formula(p)
                    == sector_crossings_bruteforce(SectorModel(m, p)))


def admissible(m_max):
    for m in range(4, m_max + 1):
        for n in range(3, m, 2):
            s = m % n
            for l in ((4, 5, 6) if s % 2 == 0 else (4, 7, 8)):
                yield l, m, n


def test_index_sets_partition():
    for l, m, n in admissible(15):
        S1, S2, S3 = index_sets(l, m, n)
        assert S1 | S2 | S3 == set(range(m))
        assert not (S1 & S2 or S1 & S3 or S2 & S3)


def test_partial_sums_partition_identity():
    for l, m, n in admissible(12):
        ps = partial_sums(l, m, n)
        f = extended_permutation(l, m, n)
        body = sum((m - 1 - t) * f(t) + t * (m - 1 - f(t)) for t in range(m))
        assert ps.total == body - inversion_number(f)


def test_partial_sums_reference_cell():
    ps = partial_sums(4, 7, 3)
    assert (ps.F1, ps.F2, ps.F3) == (51, 71, 14)
    assert sector_crossings_partial(4, 7, 3) == 441 - 136 == 305
    assert (sector_crossings_partial(4, 7, 3)
            == sector_crossings_bruteforce(SectorModel(7, extended_permutation(4, 7, 3))))


def test_decomposition_equals_formula_sweep():
    for l, m, n in admissible(15):
        assert (sector_crossings_partial(l, m, n)
                == sector_crossings_formula(extended_permutation(l, m, n)))


def test_annulus_reference_values():
    assert annulus_crossings(4) == 4
    assert annulus_crossings(5) == 20
    assert annulus_crossings(6) == 60


def test_annulus_closed_form_sweep():
    for m in range(4, 13):
        assert annulus_crossings(m) == m * (m - 1) * (m - 2) * (m - 3) // 6


def test_shortest_winding_rules_fail_the_closed_form():
    # documents why the uniform rule ships as the default
    for rule in ("shortest_pos", "shortest_parity"):
        r = Readings(path_winding=rule)
        assert annulus_crossings(4, r) != 4


def test_winding_rules():
    assert winding(0, 3, 5, "uniform") == 3
    assert winding(0, 3, 5, "shortest_pos") == -2
    assert winding(0, 2, 4, "shortest_pos") == 2
    assert winding(1, 3, 4, "shortest_parity") == -2
    assert winding(0, 2, 4, "shortest_parity") == 2
    with pytest.raises(ValueError):
        winding(0, 1, 4, "bogus")


def test_helix_pair_rule():
    # parallel helices never cross; a full relative turn crosses once
    assert helix_pair_crossings(0, 2, 1, 2, 5) == 0
    assert helix_pair_crossings(0, 4, 1, 1, 5) == 1
    assert helix_pair_crossings(0, 1, 1, 4, 5) == 0
