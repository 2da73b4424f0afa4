"""Critical-point calculus: crit, the gamma action, range membership."""

import pytest

from laver.crit import act_on_gamma, crit, in_range, least_range_witness
from laver.errors import InsufficientTablesError, UncertifiedError
from laver.table import TableStack

BOUND = 13


def act(a, k, stack, bound=BOUND):
    return act_on_gamma(a, k, stack, bound).expect_certified()


def test_crit_of_powers_of_two():
    for n in range(10):
        assert crit(1 << n).value == n


def test_crit_of_odd_integers_is_zero():
    for a in (1, 3, 5, 7, 9, 101):
        assert crit(a).value == 0


def test_crit_pinned():
    assert crit(12).value == 2


def test_action_of_powers_steps_up(stack):
    # 2^n sends gamma_n to gamma_{n+1}
    for n in range(0, 12):
        assert act(1 << n, n, stack) == n + 1


def test_action_of_all_ones(stack):
    # 2^n - 1 sends gamma_0 to gamma_n and gamma_1 to gamma_{n+1}
    for n in range(1, 13):
        assert act((1 << n) - 1, 0, stack) == n
    for n in range(1, 12):
        assert act((1 << n) - 1, 1, stack) == n + 1


def test_action_pinned_triple(stack):
    assert act(48, 7, stack) == 9
    assert act(192, 7, stack) == 9
    assert act(51, 3, stack) == 7


def test_action_below_critical_point_is_fixed(stack):
    for k in range(6):
        for a in (1 << (k + 1), 3 << (k + 2), 5 << (k + 1)):
            assert act(a, k, stack) == k


def test_action_of_small_elements_on_gamma_zero_stays_low(stack):
    # a < 2^n - 1 sends gamma_0 strictly below gamma_n
    for n in range(2, 13):
        for a in range(1, (1 << n) - 1):
            assert act(a, 0, stack) < n


def test_action_is_monotone_in_k(stack):
    # the bounded scan value max{m <= bound : p_m(a) <= 2^k} is monotone
    # in k whether or not the doubling was witnessed
    for a in (1, 2, 3, 6, 12, 37, 100):
        values = [act_on_gamma(a, k, stack, BOUND).value for k in range(0, 8)]
        assert values == sorted(values)


def test_even_rank_power_identity(stack):
    # 2^(2m) sends gamma_{2m+1} to gamma_{2m+2}
    for m in range(0, 6):
        assert act(1 << (2 * m), 2 * m + 1, stack) == 2 * m + 2


def test_uncertified_when_bound_too_small(stack):
    r = act_on_gamma((1 << 12) - 1, 1, stack, 12)
    assert not r.certified and r.value == 12
    with pytest.raises(UncertifiedError):
        r.expect_certified()


def test_action_characterizations_agree(stack):
    # act(a, k) = n iff p_n(a) <= 2^k < p_{n+1}(a), for every a and k
    # (uncertified searches carry no claim and are skipped)
    for n in range(1, 13):
        for a in range(1, 1 << n):
            for k in range(0, n + 1):
                m = act_on_gamma(a, k, stack, BOUND)
                if not m.certified:
                    continue
                assert stack.period_of(m.value, a) <= 1 << k
                assert stack.period_of(m.value + 1, a) > 1 << k


def test_in_range_pinned(stack):
    assert not in_range(6, 5, stack)
    assert not in_range(242, 9, stack)
    for n in range(1, 12):
        assert in_range((1 << n) - 1, n, stack)


def test_in_range_respects_rank_ceiling():
    capped = TableStack(max_rank=4)
    with pytest.raises(InsufficientTablesError):
        in_range(3, 4, capped)


def test_least_range_witness_values(stack):
    assert least_range_witness(1, stack) == 1
    assert least_range_witness(3, stack) == 3
    assert least_range_witness(7, stack) == 15
    for k in range(2, 12):
        w = least_range_witness(k, stack)
        assert 1 <= w <= (1 << (k - 1)) - 1
        assert in_range(w, k, stack)
        assert not any(in_range(c, k, stack) for c in range(1, w))


def test_least_range_witness_requires_positive_k(stack):
    with pytest.raises(ValueError):
        least_range_witness(0, stack)
