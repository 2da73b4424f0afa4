"""Binary cache for built tables, one file per rank.

Format (all integers little-endian):

    bytes 0-3   magic "LAVR"
    byte  4     format version (currently 1)
    byte  5     rank n
    then, per element a = 0, ..., 2^n - 1:
        uint32  period p(a)
        uint32  values a*1, ..., a*p(a)   (p(a) of them, last is 0)
    uint32  CRC-32 of all preceding bytes

Writes are atomic (temp file + rename); loads validate the checksum and
the table's structural invariants, so a corrupt file can never produce a
silently wrong table.
"""

from __future__ import annotations

import os
import struct
import tempfile
import zlib
from pathlib import Path

import numpy as np

from laver.errors import (
    CacheCorruptionError,
    CacheFormatError,
    CacheVersionError,
    LaverError,
)
from laver.table import LaverTable

MAGIC = b"LAVR"
VERSION = 1


def cache_path(directory, n: int) -> Path:
    return Path(directory) / f"A{n}.lavr"


def encode(table: LaverTable) -> bytes:
    """Serialize a table to the cache byte format."""
    if table.n > 255:
        raise CacheFormatError("rank does not fit the one-byte header field")
    header = MAGIC + struct.pack("<BB", VERSION, table.n)
    total = table.total_entries
    body = np.empty(table.size + total, dtype="<u4")
    pos = 0
    for a in range(table.size):
        p = int(table.periods[a])
        body[pos] = p
        body[pos + 1 : pos + 1 + p] = table.values[table.offsets[a] : table.offsets[a + 1]]
        pos += 1 + p
    payload = header + body.tobytes()
    return payload + struct.pack("<I", zlib.crc32(payload))


def decode(blob: bytes) -> LaverTable:
    """Parse and fully validate a cache blob."""
    if len(blob) < 10:
        raise CacheFormatError("cache file too short")
    if blob[:4] != MAGIC:
        raise CacheFormatError("bad magic; not a table cache file")
    version, n = struct.unpack_from("<BB", blob, 4)
    if version != VERSION:
        raise CacheVersionError(f"cache format version {version}, expected {VERSION}")
    (crc_stored,) = struct.unpack_from("<I", blob, len(blob) - 4)
    if zlib.crc32(blob[:-4]) != crc_stored:
        raise CacheCorruptionError("checksum mismatch")
    size = 1 << n
    words = np.frombuffer(blob[6:-4], dtype="<u4")
    offsets = np.zeros(size + 1, dtype=np.int64)
    pos = 0
    for a in range(size):
        if pos >= len(words):
            raise CacheCorruptionError("truncated element records")
        p = int(words[pos])
        offsets[a + 1] = offsets[a] + p
        pos += 1 + p
    if pos != len(words):
        raise CacheCorruptionError("trailing bytes after element records")
    values = np.empty(offsets[-1], dtype=np.uint32)
    pos = 0
    for a in range(size):
        p = int(offsets[a + 1] - offsets[a])
        values[offsets[a] : offsets[a + 1]] = words[pos + 1 : pos + 1 + p]
        pos += 1 + p
    try:
        table = LaverTable(n, values, offsets)
        table.validate()
    except LaverError as e:
        raise CacheCorruptionError(f"decoded table invalid: {e}") from e
    return table


def save(table: LaverTable, directory) -> Path:
    """Write the cache file for the table's rank; atomic replace."""
    directory = Path(directory)
    target = cache_path(directory, table.n)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as f:
                f.write(encode(table))
            os.replace(tmp_name, target)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    except OSError as e:
        raise OSError(f"cannot write table cache {target}: {e}") from e
    return target


def load(directory, n: int) -> LaverTable:
    """Load and validate rank n from the cache directory.

    Raises FileNotFoundError when absent and a CacheError subclass on any
    format, version, checksum, or invariant problem.
    """
    path = cache_path(directory, n)
    blob = path.read_bytes()
    table = decode(blob)
    if table.n != n:
        raise CacheFormatError(f"{path} holds rank {table.n}, expected {n}")
    return table
