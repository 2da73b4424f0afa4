"""Critical-point calculus over the table stack.

The critical points form an increasing sequence indexed by the naturals,
and everything here manipulates those indices:

* crit(a) has index s(a), the signature (2-adic valuation for integers).
* The action a . gamma_k has index max{m : p_m(a) <= 2^k}; it exceeds
  gamma_n exactly when p_n(a) <= 2^k.
* gamma_n lies in the range of a exactly when the period of a doubles
  between rank n and rank n+1.

Period lookups reduce a mod 2^m, which the reduction homomorphism makes
sound.  Because a period can double at any later rank, a bounded search
proves a value only when the next doubling was actually witnessed; results
carry a certified flag and the bound used, and callers that need sound
answers must insist on certified ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from laver.errors import InsufficientTablesError, UncertifiedError
from laver.table import TableStack
from laver.words import Word, eval_word


@dataclass(frozen=True)
class CertifiedIndex:
    """A critical-point index plus the evidence status of the search."""

    value: int
    certified: bool
    bound: int

    def expect_certified(self) -> int:
        if not self.certified:
            raise UncertifiedError(
                f"index {self.value} not certified within rank bound {self.bound}"
            )
        return self.value


def signature(x: int | Word, stack: TableStack | None = None, bound: int | None = None) -> CertifiedIndex:
    """s(x): the largest n with [x]_n = 0.

    Exact for integers (the 2-adic valuation).  For words, a bounded scan:
    certified only when [x]_{s+1} != 0 was witnessed at a rank <= bound.
    """
    if isinstance(x, int):
        if x < 1:
            raise ValueError("signature needs a positive integer or a word")
        s = (x & -x).bit_length() - 1
        return CertifiedIndex(s, True, s + 1)
    if stack is None or bound is None:
        raise ValueError("word signatures need a table stack and a rank bound")
    for m in range(1, bound + 1):
        if eval_word(x, stack.table(m)) != 0:
            return CertifiedIndex(m - 1, True, bound)
    return CertifiedIndex(bound, False, bound)


def crit(x: int | Word, stack: TableStack | None = None, bound: int | None = None) -> CertifiedIndex:
    """Index of the critical point of x: crit(x) = gamma_{s(x)}."""
    return signature(x, stack, bound)


def act_on_gamma(a: int, k: int, stack: TableStack, bound: int) -> CertifiedIndex:
    """Index n of a . gamma_k, via n = max{m <= bound : p_m(a) <= 2^k}.

    Certified when p_{n+1}(a) > 2^k was witnessed, i.e. when n < bound.
    When 2^(k+1) divides a the scan stops at k itself: gamma_k is below
    crit(a) and is fixed.
    """
    if a < 1:
        raise ValueError("the acting embedding must be a positive integer")
    if k < 0:
        raise ValueError("critical-point index must be non-negative")
    two_k = 1 << k
    m = 0
    while m < bound and stack.period_of(m + 1, a) <= two_k:
        m += 1
    return CertifiedIndex(m, m < bound, bound)


def in_range(a: int, n: int, stack: TableStack) -> bool:
    """Whether gamma_n is in the range of a: does p(a) double at rank n+1?

    Needs tables through rank n+1; a = 0 is allowed and denotes the zero
    element, whose period always doubles.
    """
    if a < 0:
        raise ValueError("element must be non-negative")
    if n < 0:
        raise ValueError("critical-point index must be non-negative")
    try:
        stack.require(n, n + 1)
    except InsufficientTablesError as e:
        raise InsufficientTablesError(
            f"range membership at gamma_{n} needs tables through A_{n + 1}"
        ) from e
    return stack.period_of(n + 1, a) == 2 * stack.period_of(n, a)


def least_range_witness(k: int, stack: TableStack) -> int:
    """The least positive c whose range contains gamma_k.

    For k >= 2 the threshold structure guarantees a witness at or below
    2^(k-1) - 1; for k = 1 the witness is 1.
    """
    if k < 1:
        raise ValueError("least range witness needs k >= 1")
    limit = max(1, (1 << (k - 1)) - 1)
    for c in range(1, limit + 1):
        if in_range(c, k, stack):
            return c
    raise AssertionError(f"no range witness for gamma_{k} below {limit + 1}")
