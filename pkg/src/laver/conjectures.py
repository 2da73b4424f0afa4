"""Witness-producing verifiers for the period/threshold conjectures.

Each verifier sweeps its full quantifier range over the finite algebras
and reports either "verified" or every violating tuple it found (up to a
configurable cap).  The statements checked:

* th       threshold conjecture: if p_n(a) = 2^k and c+1 is the threshold
           of a in A_n, the period of c doubles at rank k+1.
* wth      weak form, restricted to a whose period doubles at rank n+1
           (equivalently: gamma_n is in the range of a); wth1-wth3 are the
           equivalent reformulations through a*c and the composition image.
* twin     at odd n, range membership of gamma_n (for a below 2^(n-1))
           forces range membership of gamma_{n-1}.
* uh, wuh  uniqueness: elements of equal period cannot agree both on the
           action at gamma_i and on multiplication by the least range
           witness c (wuh adds the doubling hypothesis and drops the
           action agreement).

plus named consistency checks: stability of a*c and the composition image
across neighbouring ranks (lemma53), per-element agreement of the five
weak-threshold forms (lemma54), and the even/odd range-membership transfer
a <-> 2^(2m)+a (lemma59, with the upper-half twin extension as a separate
check).

Sweeps run over positive integers below the stated bound; the element 0
(the class of 2^n) never satisfies a gamma-action hypothesis and is only
swept where the statement is about raw table rows (th).  A report's
"verified" status always means the whole range was examined: verifiers
materialize every table they need up front and refuse to run partially.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from laver.crit import act_on_gamma, in_range, least_range_witness
from laver.errors import InsufficientTablesError, ResourceLimitError
from laver.table import TableStack

DEFAULT_MAX_COUNTEREXAMPLES = 100

VERIFIER_IDS = (
    "th",
    "wth",
    "wth1",
    "wth2",
    "wth3",
    "twin",
    "uh",
    "wuh",
    "lemma53",
    "lemma54",
    "lemma59",
)


@dataclass
class VerificationReport:
    """Outcome of one conjecture sweep."""

    conjecture: str
    n: int
    status: str  # verified | counterexample | resource-limited
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    truncated: bool = False
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def payload(self) -> dict:
        """Deterministic content: everything except wall time."""
        return {
            "conjecture": self.conjecture,
            "n": self.n,
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "truncated": self.truncated,
            "detail": self.detail,
        }

    def to_dict(self) -> dict:
        out = self.payload()
        out["elapsed_seconds"] = self.elapsed
        return out


# ---------------------------------------------------------------------------
# sweep plumbing
# ---------------------------------------------------------------------------


def _chunks(lo: int, hi: int, workers: int):
    count = hi - lo
    if count <= 0:
        return [(lo, hi)]
    workers = max(1, min(workers, count))
    step = -(-count // workers)
    return [(c, min(c + step, hi)) for c in range(lo, hi, step)]


def _run_sweep(lo, hi, workers, chunk_fn):
    """Run chunk_fn(lo, hi) -> (checked, violations) over a partition.

    Chunks are merged in range order, so the result is independent of the
    worker count.
    """
    parts = _chunks(lo, hi, workers)
    if len(parts) == 1:
        return chunk_fn(lo, hi)
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        results = list(pool.map(lambda span: chunk_fn(*span), parts))
    checked = sum(r[0] for r in results)
    bad = [cx for r in results for cx in r[1]]
    return checked, bad


def _finish(conjecture, n, checked, bad, max_cx, t0, detail):
    bad.sort(key=lambda d: [d[k] for k in sorted(d)])
    truncated = max_cx is not None and len(bad) > max_cx
    if truncated:
        bad = bad[:max_cx]
    return VerificationReport(
        conjecture=conjecture,
        n=n,
        status="counterexample" if bad else "verified",
        checked=checked,
        counterexamples=bad,
        truncated=truncated,
        elapsed=time.perf_counter() - t0,
        detail=detail,
    )


def _require(conjecture, n, stack, top_rank, t0):
    """Materialize ranks 0..top_rank; a resource-limited report on failure."""
    try:
        stack.require(*range(top_rank + 1))
        return None
    except (ResourceLimitError, InsufficientTablesError) as e:
        return VerificationReport(
            conjecture=conjecture,
            n=n,
            status="resource-limited",
            elapsed=time.perf_counter() - t0,
            detail={"reason": str(e)},
        )


def _doubles(stack, a, m):
    """gamma_m in range(a): period doubling between ranks m and m+1."""
    return stack.period_of(m + 1, a) == 2 * stack.period_of(m, a)


def _log2(x: int) -> int:
    return x.bit_length() - 1


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------


def verify_th(n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES):
    """Threshold conjecture over all elements a < 2^n - 1 of A_n.

    c = t_n(a) - 1 is read as an integer below 2^(k-1); c = 0 denotes the
    zero element, whose period doubles at every rank.
    """
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("rank must be >= 1")
    limited = _require("th", n, stack, n + 1, t0)
    if limited:
        return limited
    thresholds = stack.table(n).thresholds

    def chunk(lo, hi):
        bad = []
        for a in range(lo, hi):
            k = _log2(stack.period_of(n, a))
            c = int(thresholds[a]) - 1
            pk = stack.period_of(k, c)
            pk1 = stack.period_of(k + 1, c)
            if pk1 != 2 * pk:
                bad.append(
                    {
                        "a": a,
                        "k": k,
                        "period_a": 1 << k,
                        "threshold": c + 1,
                        "c": c,
                        "period_c_rank_k": pk,
                        "period_c_rank_k1": pk1,
                    }
                )
        return hi - lo, bad

    checked, bad = _run_sweep(0, (1 << n) - 1, workers, chunk)
    return _finish("th", n, checked, bad, max_counterexamples, t0, {})


_WTH_VARIANTS = ("base", "wth1", "wth2", "wth3")


def _wth_statement(stack, n, a, c, k, variant):
    if variant == "base":
        return _doubles(stack, c, k)
    if variant == "wth1":
        return _doubles(stack, stack.apply_in(n, a, c), n)
    if variant == "wth2":
        return _doubles(stack, stack.compose_in(n, a, c), n)
    if variant == "wth3":
        return _doubles(stack, stack.compose_in(n - 1, a, c), n - 1)
    raise ValueError(f"unknown variant {variant!r}")


def verify_wth(
    n,
    stack,
    *,
    variant="base",
    wide=None,
    workers=1,
    max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES,
):
    """Weak threshold conjecture (or one of its reformulations).

    Qualifying a have gamma_n in their range; k is read off the period
    (p_n(a) = 2^k) and c+1 = t_n(a).  The base form quantifies over
    a < 2^(n-1); the reformulations are stated over a < 2^n.  `wide`
    overrides the range either way.
    """
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("rank must be >= 1")
    if variant not in _WTH_VARIANTS:
        raise ValueError(f"variant must be one of {_WTH_VARIANTS}")
    if wide is None:
        wide = variant != "base"
    conjecture = "wth" if variant == "base" else variant
    limited = _require(conjecture, n, stack, n + 1, t0)
    if limited:
        return limited
    thresholds = stack.table(n).thresholds
    top = (1 << n) - 1
    hi = (1 << n) if wide else (1 << (n - 1))

    def chunk(lo, hi_):
        bad = []
        qualifying = 0
        for a in range(lo, hi_):
            if a == top or not _doubles(stack, a, n):
                continue
            qualifying += 1
            k = _log2(stack.period_of(n, a))
            c = int(thresholds[a]) - 1
            if not _wth_statement(stack, n, a, c, k, variant):
                bad.append({"a": a, "k": k, "threshold": c + 1, "c": c})
        return qualifying, bad

    checked, bad = _run_sweep(1, hi, workers, chunk)
    detail = {"variant": variant, "range": f"1 <= a < 2^{n if wide else n - 1}"}
    return _finish(conjecture, n, checked, bad, max_counterexamples, t0, detail)


def verify_twin(n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES):
    """Twin conjecture at odd n: range membership of gamma_n below 2^(n-1)
    forces range membership of gamma_{n-1}."""
    t0 = time.perf_counter()
    if n < 1 or n % 2 == 0:
        raise ValueError("the twin conjecture is stated for odd n >= 1")
    limited = _require("twin", n, stack, n + 1, t0)
    if limited:
        return limited

    def chunk(lo, hi):
        bad = []
        qualifying = 0
        for a in range(lo, hi):
            if not _doubles(stack, a, n):
                continue
            qualifying += 1
            if not _doubles(stack, a, n - 1):
                bad.append(
                    {
                        "a": a,
                        "period_rank_n_minus_1": stack.period_of(n - 1, a),
                        "period_rank_n": stack.period_of(n, a),
                        "period_rank_n_plus_1": stack.period_of(n + 1, a),
                    }
                )
        return qualifying, bad

    checked, bad = _run_sweep(1, 1 << (n - 1), workers, chunk)
    return _finish("twin", n, checked, bad, max_counterexamples, t0, {})


def check_upper_half_twin(n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES):
    """Upper-half companion of the twin conjecture at odd n: for
    2^(n-1) <= a < 2^n, gamma_{n+1} in range(a) forces gamma_n in range(a).

    Needs tables through rank n+2.
    """
    t0 = time.perf_counter()
    if n < 1 or n % 2 == 0:
        raise ValueError("stated for odd n >= 1")
    limited = _require("twin-upper", n, stack, n + 2, t0)
    if limited:
        return limited

    def chunk(lo, hi):
        bad = []
        qualifying = 0
        for a in range(lo, hi):
            if not _doubles(stack, a, n + 1):
                continue
            qualifying += 1
            if not _doubles(stack, a, n):
                bad.append({"a": a})
        return qualifying, bad

    checked, bad = _run_sweep(1 << (n - 1), 1 << n, workers, chunk)
    return _finish("twin-upper", n, checked, bad, max_counterexamples, t0, {})


def _uh_groups(n, stack):
    """Elements 1 <= a < 2^(n-1) grouped by log2 of their rank-n period."""
    groups: dict[int, list[int]] = {}
    for a in range(1, 1 << (n - 1)):
        groups.setdefault(_log2(stack.period_of(n, a)), []).append(a)
    return groups


def _witness_action_index(k, stack):
    """(c, i) where c is the least range witness of gamma_k and
    c . gamma_i = gamma_k.

    i is forced: the doubling of p(c) at rank k pins i = log2 p_k(c).
    The uniqueness assertion guards the table data, not the arithmetic.
    """
    c = least_range_witness(k, stack)
    i = _log2(stack.period_of(k, c))
    act = act_on_gamma(c, i, stack, k + 1)
    if not (act.certified and act.value == k):
        raise AssertionError(f"witness action c={c}, i={i} does not reach gamma_{k}")
    return c, i


def verify_uh(n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES):
    """Uniqueness conjecture: distinct a, b < 2^(n-1) of equal period 2^k
    cannot agree both on the action at gamma_i and on multiplication by the
    least range witness c of gamma_k."""
    t0 = time.perf_counter()
    if n < 2:
        raise ValueError("rank must be >= 2")
    limited = _require("uh", n, stack, n + 1, t0)
    if limited:
        return limited
    groups = _uh_groups(n, stack)
    witnesses = {
        k: _witness_action_index(k, stack)
        for k, els in sorted(groups.items())
        if len(els) >= 2
    }
    flat = [(k, a) for k, els in sorted(groups.items()) if k in witnesses for a in els]

    def chunk(lo, hi):
        keys = []
        for k, a in flat[lo:hi]:
            c, i = witnesses[k]
            action = act_on_gamma(a, i, stack, n + 1).expect_certified()
            keys.append((k, a, action, stack.apply_in(n, a, c)))
        return hi - lo, keys

    checked, keys = _run_sweep(0, len(flat), workers, chunk)
    bad = []
    pairs = 0
    seen: dict[tuple, int] = {}
    for k, a, action, product in keys:
        sig = (k, action, product)
        if sig in seen:
            c, i = witnesses[k]
            bad.append(
                {
                    "a": seen[sig],
                    "b": a,
                    "k": k,
                    "c": c,
                    "i": i,
                    "action_index": action,
                    "product": product,
                }
            )
        else:
            seen[sig] = a
    for k, els in groups.items():
        pairs += len(els) * (len(els) - 1) // 2
    detail = {
        "pairs_in_scope": pairs,
        "witnesses": {str(k): {"c": c, "i": i} for k, (c, i) in sorted(witnesses.items())},
    }
    return _finish("uh", n, checked, bad, max_counterexamples, t0, detail)


def verify_weak_uh(n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES):
    """Weak uniqueness: a, b < 2^(n-1) acting equally on gamma_k with value
    gamma_n (period 2^k doubling at n) and multiplying the least range
    witness c equally must coincide."""
    t0 = time.perf_counter()
    if n < 2:
        raise ValueError("rank must be >= 2")
    limited = _require("wuh", n, stack, n + 1, t0)
    if limited:
        return limited
    groups: dict[int, list[int]] = {}
    for a in range(1, 1 << (n - 1)):
        if _doubles(stack, a, n):
            groups.setdefault(_log2(stack.period_of(n, a)), []).append(a)
    witnesses = {
        k: least_range_witness(k, stack)
        for k, els in sorted(groups.items())
        if len(els) >= 2
    }
    flat = [(k, a) for k, els in sorted(groups.items()) if k in witnesses for a in els]

    def chunk(lo, hi):
        return hi - lo, [
            (k, a, stack.apply_in(n, a, witnesses[k])) for k, a in flat[lo:hi]
        ]

    checked, keys = _run_sweep(0, len(flat), workers, chunk)
    bad = []
    seen: dict[tuple, int] = {}
    for k, a, product in keys:
        sig = (k, product)
        if sig in seen:
            bad.append(
                {"a": seen[sig], "b": a, "k": k, "c": witnesses[k], "product": product}
            )
        else:
            seen[sig] = a
    detail = {"witnesses": {str(k): c for k, c in sorted(witnesses.items())}}
    return _finish("wuh", n, checked, bad, max_counterexamples, t0, detail)


def check_threshold_image_stability(
    n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES
):
    """For qualifying a < 2^(n-1) with c+1 = t_n(a): the value a*c is the
    same in ranks n-1, n, n+1, and the composition image a o c is the same
    in ranks n and n+1."""
    t0 = time.perf_counter()
    if n < 2:
        raise ValueError("rank must be >= 2")
    limited = _require("lemma53", n, stack, n + 1, t0)
    if limited:
        return limited
    thresholds = stack.table(n).thresholds

    def chunk(lo, hi):
        bad = []
        qualifying = 0
        for a in range(lo, hi):
            if not _doubles(stack, a, n):
                continue
            qualifying += 1
            c = int(thresholds[a]) - 1
            prod = (
                stack.apply_in(n - 1, a, c),
                stack.apply_in(n, a, c),
                stack.apply_in(n + 1, a, c),
            )
            comp = (stack.compose_in(n, a, c), stack.compose_in(n + 1, a, c))
            if len(set(prod)) != 1 or len(set(comp)) != 1:
                bad.append(
                    {
                        "a": a,
                        "c": c,
                        "product_ranks_n_minus_1_to_n_plus_1": list(prod),
                        "composition_ranks_n_to_n_plus_1": list(comp),
                    }
                )
        return qualifying, bad

    checked, bad = _run_sweep(1, 1 << (n - 1), workers, chunk)
    return _finish("lemma53", n, checked, bad, max_counterexamples, t0, {})


def check_variant_equivalence(
    n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES
):
    """Per-element agreement of the five weak-threshold forms over the wide
    range 1 <= a < 2^n (the base form evaluates on the whole range too)."""
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("rank must be >= 1")
    limited = _require("lemma54", n, stack, n + 1, t0)
    if limited:
        return limited
    thresholds = stack.table(n).thresholds
    top = (1 << n) - 1
    forms = ("base", "product_rank_n", "product_rank_n_minus_1", "composition_rank_n", "composition_rank_n_minus_1")

    def chunk(lo, hi):
        bad = []
        qualifying = 0
        for a in range(lo, hi):
            if a == top or not _doubles(stack, a, n):
                continue
            qualifying += 1
            k = _log2(stack.period_of(n, a))
            c = int(thresholds[a]) - 1
            statuses = {
                "base": _doubles(stack, c, k),
                "product_rank_n": _doubles(stack, stack.apply_in(n, a, c), n),
                "product_rank_n_minus_1": _doubles(stack, stack.apply_in(n - 1, a, c), n),
                "composition_rank_n": _doubles(stack, stack.compose_in(n, a, c), n),
                "composition_rank_n_minus_1": _doubles(
                    stack, stack.compose_in(n - 1, a, c), n - 1
                ),
            }
            if len(set(statuses.values())) != 1:
                bad.append({"a": a, "k": k, "c": c, "statuses": statuses})
        return qualifying, bad

    checked, bad = _run_sweep(1, 1 << n, workers, chunk)
    return _finish("lemma54", n, checked, bad, max_counterexamples, t0, {"forms": list(forms)})


def check_shifted_range_transfer(
    n, stack, *, workers=1, max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES
):
    """At even n = 2m+2: gamma_{2m+1} in range(a) iff
    gamma_{2m+2} in range(2^(2m) + a), for 1 <= a < 2^(2m)."""
    t0 = time.perf_counter()
    if n < 2 or n % 2:
        raise ValueError("stated for even n >= 2")
    m = (n - 2) // 2
    limited = _require("lemma59", n, stack, n + 1, t0)
    if limited:
        return limited
    shift = 1 << (2 * m)

    def chunk(lo, hi):
        bad = []
        for a in range(lo, hi):
            low_side = _doubles(stack, a, 2 * m + 1)
            high_side = _doubles(stack, shift + a, 2 * m + 2)
            if low_side != high_side:
                bad.append(
                    {"a": a, "low_member": low_side, "shifted": shift + a, "high_member": high_side}
                )
        return hi - lo, bad

    checked, bad = _run_sweep(1, shift, workers, chunk)
    return _finish("lemma59", n, checked, bad, max_counterexamples, t0, {"m": m})


# ---------------------------------------------------------------------------
# counterexample re-validation
# ---------------------------------------------------------------------------


def revalidate(report: VerificationReport, stack: TableStack) -> bool:
    """Recompute every reported counterexample from the primitive operations.

    True when each tuple still exhibits both the hypothesis and the
    violation; a report with no counterexamples re-validates trivially.
    """
    fn = _REVALIDATORS.get(report.conjecture)
    if fn is None:
        raise ValueError(f"no revalidator for {report.conjecture!r}")
    return all(fn(cx, report.n, stack) for cx in report.counterexamples)


def _revalidate_th(cx, n, stack):
    a = cx["a"]
    if not 0 <= a < (1 << n) - 1:
        return False
    k = _log2(stack.period_of(n, a))
    c = stack.threshold_in(n, a) - 1
    return k == cx["k"] and c == cx["c"] and not in_range(c, k, stack)


def _revalidate_wth(variant):
    def check(cx, n, stack):
        a, c, k = cx["a"], cx["c"], cx["k"]
        if not (1 <= a < (1 << n) - 1 and in_range(a, n, stack)):
            return False
        if _log2(stack.period_of(n, a)) != k or stack.threshold_in(n, a) - 1 != c:
            return False
        return not _wth_statement(stack, n, a, c, k, variant)

    return check


def _revalidate_twin(cx, n, stack):
    a = cx["a"]
    return (
        1 <= a < (1 << (n - 1))
        and in_range(a, n, stack)
        and not in_range(a, n - 1, stack)
    )


def _revalidate_twin_upper(cx, n, stack):
    a = cx["a"]
    return (
        (1 << (n - 1)) <= a < (1 << n)
        and in_range(a, n + 1, stack)
        and not in_range(a, n, stack)
    )


def _revalidate_uh(cx, n, stack):
    a, b, k = cx["a"], cx["b"], cx["k"]
    if not (1 <= a < b < (1 << (n - 1))):
        return False
    if stack.period_of(n, a) != 1 << k or stack.period_of(n, b) != 1 << k:
        return False
    c, i = _witness_action_index(k, stack)
    if (c, i) != (cx["c"], cx["i"]):
        return False
    act_a = act_on_gamma(a, i, stack, n + 1).expect_certified()
    act_b = act_on_gamma(b, i, stack, n + 1).expect_certified()
    return act_a == act_b and stack.apply_in(n, a, c) == stack.apply_in(n, b, c)


def _revalidate_wuh(cx, n, stack):
    a, b, k = cx["a"], cx["b"], cx["k"]
    if not (1 <= a < b < (1 << (n - 1))):
        return False
    for x in (a, b):
        if stack.period_of(n, x) != 1 << k or not in_range(x, n, stack):
            return False
    c = least_range_witness(k, stack)
    return c == cx["c"] and stack.apply_in(n, a, c) == stack.apply_in(n, b, c)


def _revalidate_lemma53(cx, n, stack):
    a, c = cx["a"], cx["c"]
    if not (1 <= a < (1 << (n - 1)) and in_range(a, n, stack)):
        return False
    if stack.threshold_in(n, a) - 1 != c:
        return False
    prods = {stack.apply_in(m, a, c) for m in (n - 1, n, n + 1)}
    comps = {stack.compose_in(m, a, c) for m in (n, n + 1)}
    return len(prods) != 1 or len(comps) != 1


def _revalidate_lemma54(cx, n, stack):
    a, c, k = cx["a"], cx["c"], cx["k"]
    if not (1 <= a < (1 << n) - 1 and in_range(a, n, stack)):
        return False
    if _log2(stack.period_of(n, a)) != k or stack.threshold_in(n, a) - 1 != c:
        return False
    truths = {
        _wth_statement(stack, n, a, c, k, v) for v in ("base", "wth1", "wth2", "wth3")
    }
    truths.add(_doubles(stack, stack.apply_in(n - 1, a, c), n))
    return len(truths) != 1


def _revalidate_lemma59(cx, n, stack):
    m = (n - 2) // 2
    a = cx["a"]
    if not 1 <= a < (1 << (2 * m)):
        return False
    return in_range(a, 2 * m + 1, stack) != in_range(
        (1 << (2 * m)) + a, 2 * m + 2, stack
    )


_REVALIDATORS = {
    "th": _revalidate_th,
    "wth": _revalidate_wth("base"),
    "wth1": _revalidate_wth("wth1"),
    "wth2": _revalidate_wth("wth2"),
    "wth3": _revalidate_wth("wth3"),
    "twin": _revalidate_twin,
    "twin-upper": _revalidate_twin_upper,
    "uh": _revalidate_uh,
    "wuh": _revalidate_wuh,
    "lemma53": _revalidate_lemma53,
    "lemma54": _revalidate_lemma54,
    "lemma59": _revalidate_lemma59,
}


def run_verifier(
    conjecture: str,
    n: int,
    stack: TableStack,
    *,
    workers=1,
    max_counterexamples=DEFAULT_MAX_COUNTEREXAMPLES,
    wide=None,
) -> VerificationReport:
    """Dispatch by verifier id (the CLI's vocabulary)."""
    kwargs = {"workers": workers, "max_counterexamples": max_counterexamples}
    if conjecture == "th":
        return verify_th(n, stack, **kwargs)
    if conjecture in ("wth", "wth1", "wth2", "wth3"):
        variant = "base" if conjecture == "wth" else conjecture
        return verify_wth(n, stack, variant=variant, wide=wide, **kwargs)
    if conjecture == "twin":
        return verify_twin(n, stack, **kwargs)
    if conjecture == "uh":
        return verify_uh(n, stack, **kwargs)
    if conjecture == "wuh":
        return verify_weak_uh(n, stack, **kwargs)
    if conjecture == "lemma53":
        return check_threshold_image_stability(n, stack, **kwargs)
    if conjecture == "lemma54":
        return check_variant_equivalence(n, stack, **kwargs)
    if conjecture == "lemma59":
        return check_shifted_range_transfer(n, stack, **kwargs)
    raise ValueError(f"unknown verifier {conjecture!r}")
