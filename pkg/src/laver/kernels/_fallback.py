"""Pure-Python row builder, used when the compiled extension is absent.

Same contract as the compiled kernel: build all period-compressed rows of
the rank-n algebra bottom-up, highest element first.
"""

import numpy as np


def build_rows(n, max_entries):
    """Return (values, offsets) for A_n.

    values is a flat uint32 array holding the rows in ascending element
    order; row a occupies values[offsets[a]:offsets[a+1]] and lists
    a*1, a*2, ..., a*p(a) with the final entry 0.
    """
    size = 1 << n
    if size > max_entries:
        _entry_budget_exceeded(n, size, max_entries)
    if n == 0:
        return (np.zeros(1, dtype=np.uint32), np.array([0, 1], dtype=np.int64))

    rows = [None] * size
    rows[size - 1] = [0]
    total = 1
    for a in range(size - 2, -1, -1):
        prev = a + 1  # a*1
        row = [prev]
        # a*b = (a*(b-1)) * (a+1); the first factor is always a larger,
        # already-built element until the row wraps to 0
        while prev:
            r = rows[prev]
            prev = r[a & (len(r) - 1)]
            row.append(prev)
        rows[a] = row
        total += len(row)
        if total > max_entries:
            _entry_budget_exceeded(n, total, max_entries)

    offsets = np.zeros(size + 1, dtype=np.int64)
    for a in range(size):
        offsets[a + 1] = offsets[a] + len(rows[a])
    values = np.empty(total, dtype=np.uint32)
    for a in range(size):
        values[offsets[a]:offsets[a + 1]] = rows[a]
    return values, offsets


def _entry_budget_exceeded(n, reached, max_entries):
    from laver.errors import ResourceLimitError

    raise ResourceLimitError(
        f"building A_{n} exceeds the entry budget "
        f"({reached} > {max_entries}); raise max_entries to proceed"
    )
