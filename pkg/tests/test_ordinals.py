"""Ordinal representations, images, and interval enumeration."""

import pytest

from laver.errors import (
    AmbiguousCandidateError,
    InvalidRepresentationError,
    UncertifiedError,
)
from laver.ordinals import (
    Crit,
    OrdinalEnumerator,
    Pair,
    enumerate_below,
    enumerate_interval,
    image,
    render_json,
    render_line,
    render_text,
)


def test_image_of_critical_points(stack):
    for n in range(1, 10):
        assert image((1 << n) - 1, Crit(0), n, stack) == Crit(n)


def test_image_pinned_pair(stack):
    assert image(4, Pair(3, 1, 2), 3, stack) == Pair(7, 1, 3)


def test_image_fixed_point_below_critical_point(stack):
    # crit(16) = gamma_4 dwarfs everything in Pair(3, 1, 2)
    assert image(16, Pair(3, 1, 2), 2, stack) == Pair(3, 1, 2)


def test_image_rejects_coefficients_leaving_the_interval(stack):
    # 3 * 1 = 4 in rank 3, which is outside (0, 2^2)
    assert image(3, Pair(1, 1, 1), 2, stack) is None


def test_image_uncertified_action_raises_for_crit(stack):
    capped_n = 2
    with pytest.raises(UncertifiedError):
        image(2047, Crit(2), capped_n, stack)
    assert image(2047, Crit(2), capped_n, stack, strict=False) is None


def test_interval_one_and_two(stack):
    enum = OrdinalEnumerator(stack)
    assert enum.interval(1).entries == [Pair(1, 1, 1)]
    assert enum.interval(2).entries == [Pair(3, 1, 2)]


def test_interval_three_full(stack):
    entries = OrdinalEnumerator(stack).interval(3).entries
    assert entries == [
        Pair(7, 1, 3),
        Pair(4, 3, 3),
        Pair(3, 2, 3),
        Pair(2, 2, 3),
        Pair(1, 2, 3),
    ]


def test_interval_four_full(stack):
    entries = OrdinalEnumerator(stack).interval(4).entries
    assert entries == [Pair(15, 1, 4), Pair(12, 3, 4), Pair(3, 3, 4)]


def test_every_interval_starts_with_all_ones_coefficient(stack):
    enum = OrdinalEnumerator(stack)
    for n in range(1, 9):
        first = enum.interval(n).entries[0]
        assert first == Pair((1 << n) - 1, 1, n)


def test_successor_relation_rebuilds_each_interval(stack):
    # image(coeff of entry k+1, special below its gamma) must be entry k
    enum = OrdinalEnumerator(stack)
    for n in range(1, 9):
        entries = enum.interval(n).entries
        previous = Crit(n)
        for e in entries:
            assert image(e.coeff, enum.special_below(e.gamma), n, stack) == previous
            previous = e


def test_specials_chain(stack):
    enum = OrdinalEnumerator(stack)
    assert enum.special_below(1) == Crit(0)
    assert enum.special_below(2) == Pair(1, 1, 1)
    assert enum.special_below(3) == Pair(3, 1, 2)
    assert enum.special_below(4) == Pair(1, 2, 3)


def test_is_special(stack):
    enum = OrdinalEnumerator(stack)
    assert enum.is_special(Pair(1, 2, 3))
    assert not enum.is_special(Pair(7, 1, 3))
    assert enum.is_special(Pair(1, 1, 1))
    with pytest.raises(InvalidRepresentationError):
        enum.is_special(Pair(6, 1, 3))


def test_enumerate_below_three(stack):
    reps = enumerate_below(3, stack)
    assert reps == [Crit(0), Crit(1), Pair(1, 1, 1), Crit(2), Pair(3, 1, 2)]


def test_enumerate_below_one_is_just_gamma_zero(stack):
    assert enumerate_below(1, stack) == [Crit(0)]


def test_enumerate_interval_requires_the_base_special(stack):
    with pytest.raises(ValueError):
        enumerate_interval(2, {1: Crit(1)}, stack)
    with pytest.raises(ValueError):
        enumerate_interval(3, {1: Crit(0), 2: Pair(1, 1, 1)}, stack)


def test_renderers(stack):
    reps = enumerate_below(3, stack)
    assert render_line(Crit(7)) == "γ_7"
    assert render_line(Pair(12, 3, 4)) == '12"γ_3'
    assert render_text(reps) == 'γ_0\nγ_1\n1"γ_1\nγ_2\n3"γ_1\n'
    as_json = render_json(reps)
    assert as_json[0] == {"kind": "critical", "index": 0}
    assert as_json[2] == {"kind": "pair", "coeff": 1, "gamma": 1, "interval": 1}


def test_enumeration_matches_golden_prefix(stack, golden_lines):
    reps = enumerate_below(8, stack)
    lines = render_text(reps).splitlines()
    assert lines == golden_lines[: len(lines)]


def test_interval_entries_satisfy_the_action_invariant(stack):
    from laver.crit import act_on_gamma, in_range

    enum = OrdinalEnumerator(stack)
    for n in range(1, 9):
        for e in enum.interval(n).entries:
            act = act_on_gamma(e.coeff, e.gamma, stack, n + 2)
            assert act.certified and act.value == n + 1
            assert in_range(e.coeff, n + 1, stack)


def test_ambiguity_error_is_raised_not_guessed(stack, monkeypatch):
    # a tie between cofinality indices at the same maximal coefficient is
    # a soundness problem and must surface, never be silently resolved;
    # force one by doctoring the image function
    import laver.ordinals as mod

    real = mod.image

    def doctored(c, x, n, stack_, strict=True):
        if n == 2 and c == 3 and isinstance(x, Pair):
            return Crit(2)
        return real(c, x, n, stack_, strict=strict)

    monkeypatch.setattr(mod, "image", doctored)
    with pytest.raises(AmbiguousCandidateError):
        enumerate_interval(2, {1: Crit(0), 2: Pair(1, 1, 1)}, stack)
