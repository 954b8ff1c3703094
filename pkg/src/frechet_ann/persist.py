"""Dataset files (JSON lines) and binary index archives.

Archive layout, all integers little-endian::

    magic        8 bytes  b"FRANNIDX"
    version      uint32
    header_len   uint64
    header       UTF-8 JSON (sorted keys): kind, parameters, corpus, stats
    tables       uint32 count, then per table:
                   n        uint64
                   lengths  n x uint32   key lengths
                   owners   n x int64    corpus positions
                   cells    sum(lengths) x int64

Entries are written in dictionary insertion order, so an archive written
from a loaded index is byte-identical to the original.
"""

from itertools import chain
import io
import json
import math
import struct

import numpy as np

from ._dictindex import CurveStats, DictIndex
from .core import as_series
from .errors import DatasetError
from .lsh import LshIndex

MAGIC = b"FRANNIDX"
VERSION = 1


# datasets ------------------------------------------------------------------

def _parse_record(text, lineno):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"invalid JSON: {exc.msg}", lineno) from None
    if not isinstance(obj, dict):
        raise DatasetError("record must be a JSON object", lineno)
    ident = obj.get("id")
    if not isinstance(ident, str):
        raise DatasetError("record needs a string 'id'", lineno)
    values = obj.get("values")
    if not isinstance(values, list):
        raise DatasetError(f"record {ident!r}: 'values' must be a list", lineno)
    if not values:
        raise DatasetError(f"record {ident!r}: 'values' is empty", lineno)
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise DatasetError(f"record {ident!r}: non-finite or non-numeric value {v!r}", lineno)
    return ident, as_series(values)


def parse_dataset(lines):
    """Parse JSON-lines records into an ordered {id: series} dict.

    Blank lines are ignored.
    """
    out = {}
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        ident, series = _parse_record(text, lineno)
        if ident in out:
            raise DatasetError(f"duplicate id {ident!r}", lineno)
        out[ident] = series
    return out


def read_dataset(path):
    with open(path, encoding="utf-8") as fh:
        return parse_dataset(fh)


def format_dataset(records):
    lines = []
    for ident, values in records.items():
        lines.append(json.dumps({"id": ident, "values": [float(v) for v in values]}))
    return "".join(line + "\n" for line in lines)


def write_dataset(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_dataset(records))


# archives --------------------------------------------------------------------

def _header(index):
    corpus = {"ids": list(index.ids), "curves": [c.tolist() for c in index.curves]}
    stats = [[s.signature_length, s.candidates, s.stored, s.skipped] for s in index.stats]
    if isinstance(index, LshIndex):
        params = {"k": index.k, "radius": index.radius, "width": index.width,
                  "seed": index.seed, "shifts": list(index.shifts)}
        tables = index.tables
    else:
        params = {"epsilon": index.epsilon, "k": index.k, "radius": index.radius}
        tables = [index.table]
    header = {"kind": index.kind, "parameters": params, "corpus": corpus, "stats": stats}
    return header, tables


def _write_table(out, table):
    n = len(table)
    out.write(struct.pack("<Q", n))
    lengths = np.fromiter((len(k) for k in table), dtype="<u4", count=n)
    owners = np.fromiter(table.values(), dtype="<i8", count=n)
    cells = np.fromiter(chain.from_iterable(table), dtype="<i8", count=int(lengths.sum()))
    out.write(lengths.tobytes())
    out.write(owners.tobytes())
    out.write(cells.tobytes())


def dump_index(index):
    """Serialize an index to bytes."""
    header, tables = _header(index)
    blob = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")
    out = io.BytesIO()
    out.write(MAGIC)
    out.write(struct.pack("<IQ", VERSION, len(blob)))
    out.write(blob)
    out.write(struct.pack("<I", len(tables)))
    for table in tables:
        _write_table(out, table)
    return out.getvalue()


def save_index(index, path):
    data = dump_index(index)
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)


class _Reader:
    def __init__(self, data):
        self.data = memoryview(data)
        self.pos = 0

    def take(self, n):
        if self.pos + n > len(self.data):
            raise DatasetError("archive is truncated")
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def unpack(self, fmt):
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def array(self, dtype, count):
        dtype = np.dtype(dtype)
        return np.frombuffer(self.take(dtype.itemsize * count), dtype=dtype)


def _read_table(reader):
    (n,) = reader.unpack("<Q")
    lengths = reader.array("<u4", n).tolist()
    owners = reader.array("<i8", n).tolist()
    cells = reader.array("<i8", sum(lengths)).tolist()
    table = {}
    at = 0
    for length, owner in zip(lengths, owners):
        table[tuple(cells[at:at + length])] = owner
        at += length
    return table


def load_index_bytes(data):
    reader = _Reader(data)
    if bytes(reader.take(len(MAGIC))) != MAGIC:
        raise DatasetError("not an index archive (bad magic)")
    version, hlen = reader.unpack("<IQ")
    if version != VERSION:
        raise DatasetError(f"unsupported archive version {version}")
    try:
        header = json.loads(bytes(reader.take(hlen)).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DatasetError(f"corrupt archive header: {exc}") from None
    (count,) = reader.unpack("<I")
    tables = [_read_table(reader) for _ in range(count)]
    if reader.pos != len(reader.data):
        raise DatasetError("trailing bytes after archive tables")
    ids = header["corpus"]["ids"]
    curves = [as_series(c) for c in header["corpus"]["curves"]]
    stats = [CurveStats(a, b, c, d) for a, b, c, d in header["stats"]]
    p = header["parameters"]
    kind = header["kind"]
    if kind == "lsh":
        return LshIndex(p["k"], p["radius"], p["width"], p["seed"], tuple(p["shifts"]),
                        ids, curves, tables, stats)
    if kind in ("five-eps", "two-eps") and count == 1:
        return DictIndex(kind, p["epsilon"], p["k"], p["radius"], ids, curves, tables[0], stats)
    raise DatasetError(f"unknown index kind {kind!r}")


def load_index(path):
    with open(path, "rb") as fh:
        return load_index_bytes(fh.read())
