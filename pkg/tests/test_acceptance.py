"""Acceptance criteria, one test per criterion.

Each test prints one PASS/FAIL line (visible with -s, or on failure).
A conjecture counterexample fails the suite either way, but the message
distinguishes a verifier bug (tuple does not re-validate through the
primitive operations) from a genuine discovery (it does).
"""

import pathlib
import time
from contextlib import contextmanager

import numpy as np
import pytest

from laver import store
from laver.cli import main as cli_main
from laver.conjectures import (
    check_shifted_range_transfer,
    check_threshold_image_stability,
    check_upper_half_twin,
    check_variant_equivalence,
    revalidate,
    run_verifier,
    verify_th,
    verify_twin,
    verify_uh,
    verify_weak_uh,
    verify_wth,
)
from laver.crit import act_on_gamma, in_range
from laver.ordinals import Crit, OrdinalEnumerator, Pair, image, render_text
from laver.table import TableStack, build_table

GOLDEN = pathlib.Path(__file__).parent / "data" / "ordinals_below_gamma12.txt"


@contextmanager
def criterion(label):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL ({time.perf_counter() - t0:.1f}s)")
        raise
    print(f"ACCEPTANCE {label}: PASS ({time.perf_counter() - t0:.1f}s)")


def _assert_verified(report, stack):
    if report.status == "counterexample":
        if revalidate(report, stack):
            pytest.fail(
                f"PUBLISHABLE DISCOVERY: {report.conjecture} at n={report.n} has "
                f"re-validated counterexamples: {report.counterexamples[:3]}"
            )
        pytest.fail(
            f"verifier bug: {report.conjecture} at n={report.n} reported "
            f"counterexamples that do not re-validate: {report.counterexamples[:3]}"
        )
    assert report.ok, f"{report.conjecture} n={report.n}: {report.status}"


# ---------------------------------------------------------------------------
# 1. byte-exact enumeration below gamma_12
# ---------------------------------------------------------------------------


def test_criterion_1_enumeration_below_gamma_12(capsys):
    with criterion("1 enumeration below gamma_12"):
        golden = GOLDEN.read_text(encoding="utf-8")
        t0 = time.perf_counter()
        code = cli_main(["enumerate", "--below", "12", "--format", "text", "--no-cache"])
        elapsed = time.perf_counter() - t0
        out = capsys.readouterr().out
        assert code == 0
        assert out == golden, "enumeration text differs from the reference"
        assert elapsed < 600.0, f"enumeration took {elapsed:.0f}s"
        try:
            import resource

            peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
            assert peak_kb < 2 * 1024 * 1024, f"peak rss {peak_kb} kB"
        except ImportError:
            pass


# ---------------------------------------------------------------------------
# 2. pinned example regressions (zero tolerance)
# ---------------------------------------------------------------------------


def test_criterion_2_pinned_examples(stack):
    with criterion("2 pinned example regressions"):
        assert stack.apply_in(5, 5, 1) == 6
        assert stack.threshold_in(5, 5) == 2
        assert not in_range(6, 5, stack)

        assert stack.threshold_in(10, 34) == 5
        assert stack.compose_in(9, 34, 4) == 242
        assert not in_range(242, 9, stack)

        assert stack.apply_in(9, 48, 51) == 243
        assert stack.apply_in(9, 192, 51) == 243
        assert act_on_gamma(48, 7, stack, 10).expect_certified() == 9
        assert act_on_gamma(192, 7, stack, 10).expect_certified() == 9
        assert act_on_gamma(51, 3, stack, 8).expect_certified() == 7


# ---------------------------------------------------------------------------
# 3. conjecture sweeps at desk scale
# ---------------------------------------------------------------------------


def test_criterion_3_conjecture_sweeps(stack):
    with criterion("3 conjecture sweeps"):
        t0 = time.perf_counter()
        for n in range(1, 13):
            _assert_verified(verify_th(n, stack), stack)
        assert time.perf_counter() - t0 < 300.0

        for n in range(1, 14, 2):
            _assert_verified(verify_twin(n, stack), stack)

        for n in range(2, 13):
            _assert_verified(verify_uh(n, stack), stack)
            _assert_verified(verify_weak_uh(n, stack), stack)

        for n in range(1, 13):
            _assert_verified(verify_wth(n, stack), stack)
            if n >= 2:
                for variant in ("wth1", "wth2", "wth3"):
                    _assert_verified(verify_wth(n, stack, variant=variant), stack)
            _assert_verified(check_variant_equivalence(n, stack), stack)


# ---------------------------------------------------------------------------
# 4. structural identity suite
# ---------------------------------------------------------------------------


def test_criterion_4_structural_identities(stack):
    with criterion("4 structural identities"):
        for n in range(13):
            t = stack.table(n)
            t.validate()  # row shape: strictly increasing, final 0, successor column
            p = t.periods
            assert p[0] == t.size and p[t.size - 1] == 1
            if n >= 1:
                assert p[t.size >> 1] == t.size >> 1
            hi = stack.table(n + 1)
            ph = hi.periods
            assert np.all((ph[: t.size] == p) | (ph[: t.size] == 2 * p))
            assert np.array_equal(ph[t.size :], p)
            for a in np.flatnonzero(ph[: t.size] == 2 * p):
                assert hi.apply(int(a), int(p[a])) == t.size

        # reduction homomorphism: exhaustive through rank 8, sampled above
        for n in range(9):
            hi, lo = stack.table(n + 1), stack.table(n)
            a = np.repeat(np.arange(hi.size), hi.size)
            b = np.tile(np.arange(hi.size), hi.size)
            assert np.array_equal(
                hi.apply_many(a, b) % lo.size, lo.apply_many(a % lo.size, b % lo.size)
            )
        rng = np.random.default_rng(2)
        for n in range(9, 13):
            hi, lo = stack.table(n + 1), stack.table(n)
            a, b = rng.integers(0, hi.size, size=(2, 1_000_000))
            assert np.array_equal(
                hi.apply_many(a, b) % lo.size, lo.apply_many(a % lo.size, b % lo.size)
            )

        # power identities two ranks up
        for n in range(11):
            t = stack.table(n + 2)
            assert t.apply(1 << n, 1 << n) == 1 << (n + 1)
            cols = np.arange(1, (1 << n) + 1)
            assert np.array_equal(
                t.apply_many(np.full(len(cols), 1 << n), cols), (1 << n) + cols
            )

        # left distributivity: exhaustive through rank 6 ...
        for n in range(7):
            t = stack.table(n)
            a = np.repeat(np.arange(t.size), t.size * t.size)
            b = np.tile(np.repeat(np.arange(t.size), t.size), t.size)
            c = np.tile(np.arange(t.size), t.size * t.size)
            lhs = t.apply_many(a, t.apply_many(b, c))
            rhs = t.apply_many(t.apply_many(a, b), t.apply_many(a, c))
            assert np.array_equal(lhs, rhs)
        # ... and a million random triples per rank up to 12
        for n in range(7, 13):
            t = stack.table(n)
            a, b, c = rng.integers(0, t.size, size=(3, 1_000_000))
            lhs = t.apply_many(a, t.apply_many(b, c))
            rhs = t.apply_many(t.apply_many(a, b), t.apply_many(a, c))
            assert np.array_equal(lhs, rhs)

        # all-ones action; small elements stay low on gamma_0
        for n in range(1, 13):
            assert act_on_gamma((1 << n) - 1, 0, stack, 13).expect_certified() == n
            if n <= 12:
                assert act_on_gamma((1 << n) - 1, 1, stack, 14).expect_certified() == n + 1
        for n in range(2, 13):
            for a in range(1, (1 << n) - 1):
                act = act_on_gamma(a, 0, stack, n)
                assert act.certified and act.value < n

        # named consistency checks
        for n in range(2, 13):
            _assert_verified(check_threshold_image_stability(n, stack), stack)
        for n in range(2, 13, 2):
            _assert_verified(check_shifted_range_transfer(n, stack), stack)
        for n in range(1, 12, 2):
            _assert_verified(check_upper_half_twin(n, stack), stack)


# ---------------------------------------------------------------------------
# 5. enumeration invariants per interval
# ---------------------------------------------------------------------------


def test_criterion_5_interval_invariants(stack):
    with criterion("5 interval invariants"):
        enum = OrdinalEnumerator(stack)
        for n in range(1, 12):
            entries = enum.interval(n).entries
            assert entries[0] == Pair((1 << n) - 1, 1, n)
            coeffs = [e.coeff for e in entries]
            assert all(x > y for x, y in zip(coeffs, coeffs[1:]))
            assert len({(e.coeff, e.gamma) for e in entries}) == len(entries)
            previous = Crit(n)
            for e in entries:
                assert image(e.coeff, enum.special_below(e.gamma), n, stack) == previous
                previous = e


# ---------------------------------------------------------------------------
# 6. performance and determinism
# ---------------------------------------------------------------------------


def test_criterion_6_performance(stack, tmp_path):
    with criterion("6 performance and determinism"):
        t0 = time.perf_counter()
        fresh = build_table(12)
        build_elapsed = time.perf_counter() - t0
        assert build_elapsed < 60.0, f"A_12 build took {build_elapsed:.1f}s"

        store.save(fresh, tmp_path)
        t0 = time.perf_counter()
        reloaded = store.load(tmp_path, 12)
        reload_elapsed = time.perf_counter() - t0
        assert reload_elapsed < 1.0, f"cached reload took {reload_elapsed:.2f}s"
        assert reloaded == fresh

        for n in range(13):
            t = stack.table(n)
            store.save(t, tmp_path)
            assert store.load(tmp_path, n) == t

        for which, n in (("th", 12), ("uh", 12), ("wth1", 12)):
            payloads = [
                run_verifier(which, n, stack, workers=w).payload() for w in (1, 4, 16)
            ]
            assert payloads[0] == payloads[1] == payloads[2]
