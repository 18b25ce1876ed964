import random

import pytest

from crossforge.conformance import DEFAULT, Readings
from crossforge.schedules import (ClauseConflictError, LayerPermutation,
                                  NotABijectionError, ScheduleError,
                                  ScheduleParams, UncoveredIndexError, _build,
                                  base_permutation, dump_schedule,
                                  extended_permutation, family_permutation,
                                  inversion_number, schedule_for)


def brute_inversions(vals):
    return sum(1 for i in range(len(vals)) for j in range(i + 1, len(vals))
               if vals[i] > vals[j])


def admissible_extended(m_max):
    for m in range(4, m_max + 1):
        for n in range(3, m, 2):
            s = m % n
            yield m, n, 4
            if s % 2 == 0:
                yield m, n, 5
                yield m, n, 6
            else:
                yield m, n, 7
                yield m, n, 8


def test_base_permutation_values():
    assert base_permutation(1, 4).values == (3, 2, 1, 0)
    assert base_permutation(2, 5).values == (4, 2, 3, 0, 1)
    assert base_permutation(3, 4).values == (2, 3, 0, 1)


def test_f3_odd_m_is_not_a_bijection():
    with pytest.raises(NotABijectionError):
        base_permutation(3, 5)


def test_f4_reference_value():
    assert extended_permutation(4, 7, 3).values == (6, 5, 0, 1, 4, 3, 2)


def test_f5_to_f8_agree_with_f4_on_head():
    p = ScheduleParams.of(7, 3)
    head = p.s0 * p.r
    f4 = extended_permutation(4, 7, 3).values
    for l in (7, 8):  # s = 1 is odd, so f5/f6 are not in play at (7, 3)
        fl = extended_permutation(l, 7, 3).values
        assert fl[:head] == f4[:head]
    p = ScheduleParams.of(8, 3)
    head = p.s0 * p.r
    f4 = extended_permutation(4, 8, 3).values
    for l in (5, 6):
        fl = extended_permutation(l, 8, 3).values
        assert fl[:head] == f4[:head]


def test_extended_bijection_sweep():
    for m, n, l in admissible_extended(30):
        perm = extended_permutation(l, m, n)
        assert sorted(perm.values) == list(range(m))


def test_schedule_params():
    p = ScheduleParams.of(7, 3)
    assert (p.r, p.s, p.s0, p.s1) == (2, 1, 1, 0)
    assert p.m == p.r * p.n + p.s
    with pytest.raises(ScheduleError):
        ScheduleParams.of(5, 4)
    with pytest.raises(ScheduleError):
        ScheduleParams.of(5, 7)


def test_clause_engine_diagnostics():
    with pytest.raises(ClauseConflictError) as err:
        _build("test", 2, [("a", [(0, 0), (1, 1)]), ("b", [(0, 1)])])
    assert err.value.index == 0
    assert err.value.clauses == ("a", "b")
    with pytest.raises(UncoveredIndexError) as err2:
        _build("test", 3, [("a", [(0, 0), (1, 1)])])
    assert err2.value.indices == [2]
    with pytest.raises(NotABijectionError):
        _build("test", 2, [("a", [(0, 1), (1, 1)])])


def test_schedule_even_n_all_f1():
    sched = schedule_for(4, 6)
    assert sched.family_indices == (1,) * 6
    assert all(p.values == (3, 2, 1, 0) for p in sched.per_layer)


def test_schedule_odd_m_le_n():
    sched = schedule_for(5, 7)
    assert sched.family_indices == (2, 2, 2, 2, 2, 1, 1)


def test_schedule_even_m_lt_n():
    sched = schedule_for(4, 7)
    assert sched.family_indices == (3, 2, 3, 2, 1, 1, 1)


def test_schedule_m_gt_n_phases():
    assert schedule_for(7, 3).family_indices == (4, 7, 8)
    alt = Readings(odd_s_phase="f8_first")
    assert schedule_for(7, 3, readings=alt).family_indices == (4, 8, 7)
    assert schedule_for(8, 3).family_indices == (5, 4, 6)
    alt = Readings(even_s_phase="f4_first")
    assert schedule_for(8, 3, readings=alt).family_indices == (4, 5, 6)


def test_schedule_rejections():
    with pytest.raises(ScheduleError):
        schedule_for(5, 4, family="path")
    with pytest.raises(ScheduleError):
        schedule_for(5, 2)
    with pytest.raises(ScheduleError):
        schedule_for(3, 5)


def test_cycle_closure_under_default_readings():
    # the column propagation must return to the identity around the cycle:
    # f^0 o f^{n-1} o ... o f^1 == id
    for m in range(4, 17):
        for n in list(range(3, min(m, 12), 2)) + [4, 6]:
            sched = schedule_for(m, n)
            acc = list(range(m))
            for j in range(1, n):
                f = sched.per_layer[j].values
                acc = [f[acc[t]] for t in range(m)]
            f0 = sched.per_layer[0].values
            acc = [f0[acc[t]] for t in range(m)]
            assert acc == list(range(m)), (m, n)


def test_inversion_reference_values():
    assert inversion_number(LayerPermutation(6, tuple(range(6)))) == 0
    assert inversion_number(base_permutation(1, 4)) == 6
    assert inversion_number([6, 5, 0, 1, 4, 3, 2]) == 14
    for m in range(4, 31):
        assert inversion_number(base_permutation(1, m)) == m * (m - 1) // 2


def test_inversions_against_bruteforce_oracle():
    rng = random.Random(20217)
    for _ in range(1000):
        m = rng.randint(1, 64)
        vals = list(range(m))
        rng.shuffle(vals)
        assert inversion_number(vals) == brute_inversions(vals)


def test_permutation_serialization():
    p = extended_permutation(4, 7, 3)
    assert p.to_line() == "6 5 0 1 4 3 2"
    q = LayerPermutation.from_line(p.to_line())
    assert q.values == p.values
    text = dump_schedule(schedule_for(4, 4))
    assert text == "3 2 1 0\n" * 4


def test_family_permutation_guard():
    with pytest.raises(ScheduleError):
        family_permutation(4, 9)
    with pytest.raises(ScheduleError):
        family_permutation(9, 9, 5)
