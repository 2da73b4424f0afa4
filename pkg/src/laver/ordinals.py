"""Symbolic enumeration of the ordinals between consecutive critical points.

Representations
---------------
``Crit(n)`` stands for the n-th critical point gamma_n.  ``Pair(a, i, n)``
stands for the ordinal a"gamma_i (the sup of the action of a below
gamma_i) lying strictly between gamma_n and gamma_{n+1}; its coefficient
satisfies 1 <= a < 2^n, because coefficients in (2^n, 2^(n+1)) denote
ordinals disjoint from that interval.

Enumeration
-----------
Within the interval above gamma_n, each ordinal's successor is found by a
finite scan.  Writing "the special ordinal below gamma_j" for the last
entry of the interval below gamma_j (with gamma_0 playing that role below
gamma_1), the entry following a value v is the pair (c, j) maximizing c
over all 1 <= c < 2^n, 1 <= j <= n with

    c . (special below gamma_j)  =  v,

computed through the image law c.(e"gamma_l) = (c*e)"(c.gamma_l); the new
entry's value is then c"gamma_j.  The scan terminates when no candidate
matches: v is then itself special below gamma_{n+1}, and the interval is
complete.  Candidate matching compares representations for exact equality,
which the uniqueness of representations justifies; two distinct cofinality
indices for one maximal coefficient would be a soundness bug and raise
AmbiguousCandidateError rather than guess.

Interval n needs tables through rank n+2 (rank n+1 for the images, one
more to certify the invariant that every entry's coefficient acts on its
gamma index with value gamma_{n+1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from laver.crit import act_on_gamma, in_range
from laver.errors import (
    AmbiguousCandidateError,
    EnumerationError,
    InvalidRepresentationError,
    UncertifiedError,
)
from laver.table import TableStack


@dataclass(frozen=True)
class Crit:
    """The critical point gamma_index."""

    index: int


@dataclass(frozen=True)
class Pair:
    """The ordinal coeff"gamma_{gamma} inside (gamma_interval, gamma_{interval+1})."""

    coeff: int
    gamma: int
    interval: int


OrdinalRep = Crit | Pair


@dataclass
class IntervalEnumeration:
    """All ordinals strictly between gamma_n and gamma_{n+1}, in order."""

    n: int
    entries: list[Pair]

    @property
    def special(self) -> Pair:
        """The final entry: the one whose successor is gamma_{n+1}."""
        return self.entries[-1]


def image(c: int, x: OrdinalRep, n: int, stack: TableStack, *, strict: bool = True):
    """The representation of c . (value of x) inside interval n, or None.

    For x = Crit(m) the result is Crit of the action index.  For a pair
    e"gamma_l the image is (c*e)"(c . gamma_l) with the product taken in
    rank n+1; it is rejected (None) when the coefficient leaves (0, 2^n)
    or the new cofinality index exceeds n, both of which place the value
    outside the open interval.

    strict=True raises UncertifiedError when the action index cannot be
    certified within rank n+1; strict=False rejects instead, which is
    sound for matching because an uncertified index is provably > n.
    """
    if c < 1:
        raise ValueError("the acting embedding must be a positive integer")
    if isinstance(x, Crit):
        act = act_on_gamma(c, x.index, stack, n + 1)
        if not act.certified:
            if strict:
                raise UncertifiedError(
                    f"action of {c} on gamma_{x.index} not certified by rank {n + 1}"
                )
            return None
        return Crit(act.value)
    act = act_on_gamma(c, x.gamma, stack, n + 1)
    if not act.certified or act.value > n:
        # an uncertified index is already known to exceed n
        return None
    d = stack.apply_in(n + 1, c, x.coeff)
    if d == 0 or d >= (1 << n):
        return None
    return Pair(d, act.value, n)


def enumerate_interval(
    n: int, specials, stack: TableStack, *, validate: bool = True
) -> IntervalEnumeration:
    """Enumerate the interval above gamma_n given the specials below
    gamma_1..gamma_n (specials[1] must be Crit(0)).

    With validate=True (the default) the structural invariants are checked
    and rank n+2 is consulted; any failure raises EnumerationError instead
    of returning a repaired list.
    """
    if n < 1:
        raise ValueError("intervals start above gamma_1")
    if specials.get(1) != Crit(0):
        raise ValueError("specials[1] must be Crit(0)")
    for j in range(2, n + 1):
        if j not in specials:
            raise ValueError(f"missing special below gamma_{j}")

    size = 1 << n
    current: OrdinalRep = Crit(n)
    entries: list[Pair] = []
    steps = 0
    while True:
        steps += 1
        if steps > size:
            raise EnumerationError(f"interval {n} exceeded the {size}-step cap")
        matches = []
        for c in range(size - 1, 0, -1):
            for j in range(1, n + 1):
                if image(c, specials[j], n, stack, strict=False) == current:
                    matches.append((c, j))
            if matches:
                break
        if not matches:
            break
        if len(matches) > 1:
            raise AmbiguousCandidateError(
                f"interval {n}: maximal coefficient {matches[0][0]} matches "
                f"cofinality indices {sorted(j for _, j in matches)}"
            )
        c, j = matches[0]
        current = Pair(c, j, n)
        entries.append(current)

    if validate:
        _validate_interval(n, entries, specials, stack)
    return IntervalEnumeration(n, entries)


def _validate_interval(n, entries, specials, stack):
    size = 1 << n
    if not entries:
        raise EnumerationError(f"interval {n} came out empty")
    first = entries[0]
    if first.coeff != size - 1 or first.gamma != 1:
        raise EnumerationError(
            f"interval {n} must start with ({size - 1})\"gamma_1, got {first}"
        )
    coeffs = [e.coeff for e in entries]
    if any(x <= y for x, y in zip(coeffs, coeffs[1:])):
        raise EnumerationError(f"interval {n}: coefficients not strictly decreasing")
    if len({(e.coeff, e.gamma) for e in entries}) != len(entries):
        raise EnumerationError(f"interval {n}: duplicate representation")
    for e in entries:
        if not 1 <= e.coeff < size or e.gamma < 1 or e.gamma > n:
            raise EnumerationError(f"interval {n}: entry {e} out of bounds")
        act = act_on_gamma(e.coeff, e.gamma, stack, n + 2)
        if not (act.certified and act.value == n + 1):
            raise EnumerationError(
                f"interval {n}: {e} does not act on gamma_{e.gamma} with value "
                f"gamma_{n + 1}"
            )
        if not in_range(e.coeff, n + 1, stack):
            raise EnumerationError(
                f"interval {n}: gamma_{n + 1} not in the range of {e.coeff}"
            )


class OrdinalEnumerator:
    """Caches interval enumerations and the chain of specials they feed."""

    def __init__(self, stack: TableStack, *, validate: bool = True):
        self.stack = stack
        self.validate = validate
        self._intervals: dict[int, IntervalEnumeration] = {}

    def special_below(self, j: int) -> OrdinalRep:
        """The special ordinal below gamma_j (gamma_0 for j = 1)."""
        if j < 1:
            raise ValueError("specials exist below gamma_1 and upward")
        if j == 1:
            return Crit(0)
        return self.interval(j - 1).special

    def interval(self, n: int) -> IntervalEnumeration:
        iv = self._intervals.get(n)
        if iv is None:
            specials = {j: self.special_below(j) for j in range(1, n + 1)}
            iv = enumerate_interval(n, specials, self.stack, validate=self.validate)
            self._intervals[n] = iv
        return iv

    def below(self, top: int) -> list[OrdinalRep]:
        """All represented ordinals below gamma_top, in order: gamma_0,
        gamma_1, interval 1, gamma_2, interval 2, ..."""
        if top < 1:
            raise ValueError("need top >= 1")
        out: list[OrdinalRep] = [Crit(0)]
        for n in range(1, top):
            out.append(Crit(n))
            out.extend(self.interval(n).entries)
        return out

    def is_special(self, x: Pair) -> bool:
        """Whether x is the last ordinal before gamma_{x.interval + 1}."""
        iv = self.interval(x.interval)
        if x not in iv.entries:
            raise InvalidRepresentationError(
                f"{x} does not occur in interval {x.interval}"
            )
        return x == iv.entries[-1]


def enumerate_below(top: int, stack: TableStack) -> list[OrdinalRep]:
    """Convenience wrapper: OrdinalEnumerator(stack).below(top)."""
    return OrdinalEnumerator(stack).below(top)


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------


def render_line(x: OrdinalRep) -> str:
    if isinstance(x, Crit):
        return f"γ_{x.index}"
    return f'{x.coeff}"γ_{x.gamma}'


def render_text(reps) -> str:
    """One ordinal per line, in the interleaved gamma/pair layout."""
    return "".join(render_line(x) + "\n" for x in reps)


def rep_to_dict(x: OrdinalRep) -> dict:
    if isinstance(x, Crit):
        return {"kind": "critical", "index": x.index}
    return {"kind": "pair", "coeff": x.coeff, "gamma": x.gamma, "interval": x.interval}


def render_json(reps) -> list[dict]:
    return [rep_to_dict(x) for x in reps]
