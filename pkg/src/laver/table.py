"""Cyclic left-distributive algebras on {0, ..., 2^n - 1} (Laver tables).

A_n carries the unique left-distributive operation * with a*1 = a+1
(mod 2^n).  Every row is eventually periodic with a power-of-two period
p(a): the row a*1 < a*2 < ... strictly increases until it hits 0 at
column p(a), then repeats.  We therefore store each row period-compressed:
exactly p(a) entries, the last of which is 0.

Conventions used throughout the package:

* Elements are 0-based; 0 is the top element of the classical 1-based
  presentation (the row of 0 is the successor row, period 2^n).
* Columns are arbitrary non-negative integers, reduced into the row's
  period; a*0 = 0 (column 0 is the wrap, b = 0 being divisible by every
  period).

Rows are built highest element first via a*b = (a*(b-1)) * (a+1): each
intermediate value exceeds a until the row wraps, so all lookups land in
rows that are already complete.
"""

from __future__ import annotations

import numpy as np

from laver import kernels
from laver.errors import (
    ElementRangeError,
    InsufficientTablesError,
    TableInvariantError,
    UndefinedThresholdError,
)

DEFAULT_ENTRY_CAP = 1 << 28


def _element_dtype(n: int):
    """Smallest unsigned dtype holding 2^n - 1."""
    if n <= 8:
        return np.uint8
    if n <= 16:
        return np.uint16
    return np.uint32


class LaverTable:
    """The algebra A_n with period-compressed rows.

    Immutable once constructed; all queries are read-only and safe to
    share across threads.
    """

    __slots__ = (
        "n",
        "size",
        "values",
        "offsets",
        "periods",
        "_values_list",
        "_offsets_list",
        "_periods_list",
        "_thresholds",
    )

    def __init__(self, n: int, values: np.ndarray, offsets: np.ndarray):
        self.n = n
        self.size = 1 << n
        self.values = np.ascontiguousarray(values, dtype=_element_dtype(n))
        self.offsets = np.ascontiguousarray(offsets, dtype=np.int64)
        self.periods = np.diff(self.offsets)
        # plain-list mirrors for scalar hot paths (numpy scalar indexing is
        # several times slower than list indexing)
        self._values_list = self.values.tolist()
        self._offsets_list = self.offsets.tolist()
        self._periods_list = self.periods.tolist()
        self._thresholds = None

    # -- scalar queries ----------------------------------------------------

    def apply(self, a: int, b: int) -> int:
        """a * b, with b >= 0 reduced into the period of a; a*0 = 0."""
        if not 0 <= a < self.size:
            raise ElementRangeError(f"element {a} out of range for A_{self.n}")
        if b < 0:
            raise ValueError("column must be non-negative")
        # (b-1) & (p-1) maps b = 0 onto the final row entry, which is 0
        return self._values_list[self._offsets_list[a] + ((b - 1) & (self._periods_list[a] - 1))]

    def period(self, a: int) -> int:
        """p(a): the least b with a*b = 0; always a power of two."""
        if not 0 <= a < self.size:
            raise ElementRangeError(f"element {a} out of range for A_{self.n}")
        return self._periods_list[a]

    def threshold(self, a: int) -> int:
        """t(a): the least c with a*c >= 2^(n-1).

        Undefined for the top element 2^n - 1, whose row is constantly 0.
        """
        if not 0 <= a < self.size:
            raise ElementRangeError(f"element {a} out of range for A_{self.n}")
        if a == self.size - 1:
            raise UndefinedThresholdError(
                f"threshold undefined for {a} = 2^{self.n} - 1"
            )
        off = self.offsets[a]
        p = self._periods_list[a]
        # row[:p-1] is strictly increasing, so bisect for the first entry
        # reaching the midpoint
        t = int(np.searchsorted(self.values[off : off + p - 1], self.size >> 1)) + 1
        if t >= p + 1:
            raise TableInvariantError(f"row of {a} never reaches 2^{self.n - 1}")
        return t

    def compose(self, a: int, b: int) -> int:
        """a o b = (a * (b+1)) - 1 mod 2^n, the image of composition."""
        if not 0 <= b < self.size:
            raise ElementRangeError(f"element {b} out of range for A_{self.n}")
        return (self.apply(a, b + 1) - 1) % self.size

    def row(self, a: int) -> np.ndarray:
        """The stored row of a: a*1, ..., a*p(a) (read-only view)."""
        if not 0 <= a < self.size:
            raise ElementRangeError(f"element {a} out of range for A_{self.n}")
        r = self.values[self.offsets[a] : self.offsets[a + 1]]
        r.flags.writeable = False
        return r

    # -- vector queries ----------------------------------------------------

    def apply_many(self, a, b) -> np.ndarray:
        """Elementwise a*b over integer arrays (same reduction as apply)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        idx = self.offsets[a] + ((b - 1) & (self.periods[a] - 1))
        return self.values[idx].astype(np.int64)

    @property
    def thresholds(self) -> np.ndarray:
        """t(a) for every a < 2^n - 1, as an int64 array."""
        if self._thresholds is None:
            out = np.empty(self.size - 1, dtype=np.int64)
            half = self.size >> 1
            for a in range(self.size - 1):
                off = self.offsets[a]
                p = self._periods_list[a]
                out[a] = np.searchsorted(self.values[off : off + p - 1], half) + 1
            self._thresholds = out
            self._thresholds.flags.writeable = False
        return self._thresholds

    # -- structure ----------------------------------------------------------

    @property
    def total_entries(self) -> int:
        return int(self.offsets[-1])

    def validate(self) -> None:
        """Check the structural row invariants; raise TableInvariantError."""
        size = self.size
        if self.offsets[0] != 0 or len(self.offsets) != size + 1:
            raise TableInvariantError("bad offsets")
        p = self.periods
        if np.any(p < 1) or np.any(p & (p - 1)):
            raise TableInvariantError("periods must be powers of two")
        if p[0] != size or p[size - 1] != 1:
            raise TableInvariantError("period of 0 must be 2^n and of 2^n-1 must be 1")
        if self.n >= 1 and p[size >> 1] != size >> 1:
            raise TableInvariantError("period of 2^(n-1) must be 2^(n-1)")
        v = self.values
        if np.any(v >= size):
            raise TableInvariantError("row value out of range")
        ends = self.offsets[1:] - 1
        if np.any(v[ends] != 0):
            raise TableInvariantError("rows must end in 0")
        firsts = self.offsets[:-1]
        if np.any(v[firsts].astype(np.int64) != (np.arange(size) + 1) % size):
            raise TableInvariantError("a*1 must be a+1 mod 2^n")
        if len(v) > 1:
            # strict increase inside each row prefix; the wrap into the
            # final 0 and the steps across row boundaries are exempt
            diffs = np.diff(v.astype(np.int64))
            exempt = np.zeros(len(diffs), dtype=bool)
            inside = ends[:-1][ends[:-1] < len(diffs)]
            exempt[inside] = True
            wraps = ends[p >= 2] - 1
            exempt[wraps] = True
            if np.any(diffs[~exempt] <= 0):
                raise TableInvariantError("rows must strictly increase until the wrap")

    def __eq__(self, other):
        if not isinstance(other, LaverTable):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.n, self.total_entries))

    def __repr__(self):
        return f"LaverTable(n={self.n}, entries={self.total_entries})"


def build_table(
    n: int,
    cache_dir=None,
    *,
    max_entries: int = DEFAULT_ENTRY_CAP,
    on_corrupt: str = "rebuild",
) -> LaverTable:
    """Build A_n (or load it from cache_dir when a valid cache file exists).

    on_corrupt: "rebuild" silently replaces a corrupt cache file,
    "fail" raises the cache error instead.
    """
    if n < 0:
        raise ValueError("rank must be non-negative")
    if on_corrupt not in ("rebuild", "fail"):
        raise ValueError("on_corrupt must be 'rebuild' or 'fail'")
    if cache_dir is not None:
        from laver import store
        from laver.errors import CacheError

        try:
            return store.load(cache_dir, n)
        except FileNotFoundError:
            pass
        except CacheError:
            if on_corrupt == "fail":
                raise
    values, offsets = kernels.build_rows(n, max_entries)
    table = LaverTable(n, values, offsets)
    table.validate()
    if cache_dir is not None:
        from laver import store

        store.save(table, cache_dir)
    return table


class TableStack:
    """Lazily built family A_0, A_1, ... shared by the higher-level calculus.

    Ranks are built (or loaded from the cache directory) on first use.
    max_rank, when set, is a hard ceiling: requests beyond it raise
    InsufficientTablesError instead of building.
    """

    def __init__(
        self,
        *,
        cache_dir=None,
        max_rank: int | None = None,
        max_entries: int = DEFAULT_ENTRY_CAP,
        on_corrupt: str = "rebuild",
    ):
        self.cache_dir = cache_dir
        self.max_rank = max_rank
        self.max_entries = max_entries
        self.on_corrupt = on_corrupt
        self._tables: dict[int, LaverTable] = {}

    def table(self, m: int) -> LaverTable:
        t = self._tables.get(m)
        if t is None:
            if self.max_rank is not None and m > self.max_rank:
                raise InsufficientTablesError(
                    f"A_{m} needed but the stack is capped at rank {self.max_rank}"
                )
            t = build_table(
                m,
                self.cache_dir,
                max_entries=self.max_entries,
                on_corrupt=self.on_corrupt,
            )
            self._tables[m] = t
        return t

    def require(self, *ranks: int) -> None:
        """Materialize the given ranks up front (fail fast, no partial work)."""
        for m in ranks:
            self.table(m)

    def built_ranks(self) -> list[int]:
        return sorted(self._tables)

    # -- reduced queries: the integer a is reduced mod 2^m, which is sound
    # -- because reduction is a homomorphism A_{m+1} -> A_m

    def period_of(self, m: int, a: int) -> int:
        return self.table(m)._periods_list[a & ((1 << m) - 1)]

    def apply_in(self, m: int, a: int, b: int) -> int:
        return self.table(m).apply(a & ((1 << m) - 1), b)

    def compose_in(self, m: int, a: int, b: int) -> int:
        mask = (1 << m) - 1
        return self.table(m).compose(a & mask, b & mask)

    def threshold_in(self, m: int, a: int) -> int:
        return self.table(m).threshold(a & ((1 << m) - 1))

    def periods(self, m: int) -> np.ndarray:
        return self.table(m).periods
