# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row builder: the hot loop of table construction.

Identical contract to kernels._fallback.build_rows; rows are produced in
descending element order into a growable scratch buffer, then repacked in
ascending order.
"""

import numpy as np


def build_rows(n, max_entries):
    """Return (values, offsets) for A_n; see the fallback for the layout."""
    cdef long long size = 1LL << n
    cdef long long budget = max_entries
    if size > budget:
        _entry_budget_exceeded(n, size, max_entries)
    if n == 0:
        return (np.zeros(1, dtype=np.uint32), np.array([0, 1], dtype=np.int64))

    cdef long long cap = 8 * size if 8 * size < budget else budget
    scratch_arr = np.empty(cap, dtype=np.uint32)
    cdef unsigned int[::1] scratch = scratch_arr
    starts_arr = np.empty(size, dtype=np.int64)
    lens_arr = np.empty(size, dtype=np.int64)
    cdef long long[::1] starts = starts_arr
    cdef long long[::1] lens = lens_arr

    cdef long long a, pos, start, off
    cdef unsigned int prev

    # top row is the single entry [0]
    starts[size - 1] = 0
    lens[size - 1] = 1
    scratch[0] = 0
    pos = 1

    for a in range(size - 2, -1, -1):
        start = pos
        prev = <unsigned int> (a + 1)
        while True:
            if pos == cap:
                if cap >= budget:
                    _entry_budget_exceeded(n, pos + 1, max_entries)
                cap = 2 * cap if 2 * cap < budget else budget
                scratch_arr = np.resize(scratch_arr, cap)
                scratch = scratch_arr
            scratch[pos] = prev
            pos += 1
            if prev == 0:
                break
            # a*b = (a*(b-1)) * (a+1): look up column a+1 of the
            # already-built row of prev, reduced into its period
            off = starts[prev]
            prev = scratch[off + (a & (lens[prev] - 1))]
        starts[a] = start
        lens[a] = pos - start

    # repack ascending
    offsets_arr = np.empty(size + 1, dtype=np.int64)
    cdef long long[::1] offsets = offsets_arr
    offsets[0] = 0
    for a in range(size):
        offsets[a + 1] = offsets[a] + lens[a]
    values_arr = np.empty(pos, dtype=np.uint32)
    cdef unsigned int[::1] values = values_arr
    cdef long long i, dst
    for a in range(size):
        dst = offsets[a]
        start = starts[a]
        for i in range(lens[a]):
            values[dst + i] = scratch[start + i]
    return values_arr, offsets_arr


def _entry_budget_exceeded(n, reached, max_entries):
    from laver.errors import ResourceLimitError

    raise ResourceLimitError(
        f"building A_{n} exceeds the entry budget "
        f"({reached} > {max_entries}); raise max_entries to proceed"
    )
