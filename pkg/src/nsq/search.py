"""Exhaustive, pruned enumeration of the equivalence classes of NS(n).

The enumerator interleaves the two code prefixes in one outward-in
branch-and-bound (see _engine); every leaf already satisfies the twelve
canonical-form conditions, so the classes are exactly the leaves.  Each
leaf is nonetheless re-verified through the independent sequence-level
predicates before it is emitted.
"""

from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass

import numpy as np

from . import _engine
from .core import BinarySeq, NormalQuadruple, NpafTable, is_normal, npaf, three_squares_feasible
from .equivalence import canonical_raw, canonical_violation, is_golay_type
from .quadcodec import QuadCode, decode_quadruple

log = logging.getLogger(__name__)


class SearchError(RuntimeError):
    """An enumeration leaf failed re-verification (must never happen)."""


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class: its canonical representative in code form."""

    n: int
    index: int
    p_code: str
    q_code: str
    golay_type: bool


@dataclass(frozen=True)
class SearchTarget:
    """The combined (C;D) correlation table a fixed A forces.

    Entry 0 is 2n (two length-n sequences); every other entry must equal
    minus twice the autocorrelation of A."""

    n: int
    target_table: NpafTable


def search_target(a: BinarySeq) -> SearchTarget:
    table = npaf(a)
    values = (2 * a.n,) + tuple(-2 * table[i] for i in range(1, a.n))
    return SearchTarget(a.n, NpafTable(values, a.n))


_CACHE: dict[int, tuple[ClassRecord, ...]] = {}


def _codes_from_leaves(leaves: dict, n: int) -> list[tuple[str, str]]:
    aa_syms, cd_syms = leaves["syms"]
    centrals = leaves["centrals"]
    to_symbol = np.zeros(16, dtype=np.int8)
    for raw, sym in _engine.RAW_TO_SYMBOL.items():
        to_symbol[raw] = sym
    out = []
    for row in range(len(aa_syms)):
        p = "".join(str(int(s)) for s in to_symbol[aa_syms[row]])
        q = "".join(str(int(s)) for s in to_symbol[cd_syms[row]])
        if centrals is not None:
            p += str(int(centrals[0][row]))
            q += str(int(centrals[1][row]))
        out.append((p, q))
    return out


def _record_from_codes(n: int, p_text: str, q_text: str) -> tuple[str, str, NormalQuadruple]:
    odd = n % 2 == 1
    p_digits = [int(ch) for ch in p_text]
    q_digits = [int(ch) for ch in q_text]
    if odd:
        p = QuadCode(tuple(p_digits[:-1]), p_digits[-1], "aa")
        q = QuadCode(tuple(q_digits[:-1]), q_digits[-1], "cd")
    else:
        p = QuadCode(tuple(p_digits), None, "aa")
        q = QuadCode(tuple(q_digits), None, "cd")
    quad = decode_quadruple(p, q)
    if not is_normal(quad):
        raise SearchError(f"leaf {p_text} {q_text} is not normal")
    violation = canonical_violation(quad)
    if violation is not None:
        raise SearchError(f"leaf {p_text} {q_text} violates {violation}")
    if canonical_raw(quad.raw()) != quad.raw():
        raise SearchError(f"leaf {p_text} {q_text} is not its orbit's canonical member")
    return p_text, q_text, quad


def _shard_worker(args: tuple[int, int, int]) -> list[tuple[str, str]]:
    n, index, total = args
    leaves = _engine.search_normal(n, shard=(index, total))
    return _codes_from_leaves(leaves, n)


def enumerate_classes(n: int, workers: int = 1) -> list[ClassRecord]:
    """One record per equivalence class of NS(n), in code order.

    Results are cached per n; the worker count changes the schedule, not
    the output.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    cached = _CACHE.get(n)
    if cached is None:
        cached = _CACHE[n] = tuple(_enumerate(n, workers))
    return list(cached)


def _enumerate(n: int, workers: int) -> list[ClassRecord]:
    if not three_squares_feasible(n):
        log.info("NS(%d) is empty: %d is not a sum of three squares", n, 2 * n)
        return []
    if workers > 1 and n >= 8:
        shards = max(workers * 4, workers)
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(
                _shard_worker, [(n, i, shards) for i in range(shards)]
            )
        codes = [pair for part in parts for pair in part]
    else:
        codes = _codes_from_leaves(_engine.search_normal(n), n)
    codes.sort()
    records = []
    previous = None
    for rank, (p_text, q_text) in enumerate(codes, start=1):
        if (p_text, q_text) == previous:
            raise SearchError(f"duplicate class {p_text} {q_text}")
        previous = (p_text, q_text)
        p_text, q_text, quad = _record_from_codes(n, p_text, q_text)
        records.append(
            ClassRecord(n, rank, p_text, q_text, is_golay_type(quad))
        )
    return records


def summarize(n_lo: int, n_hi: int, workers: int = 1) -> list[tuple[int, int, int, int]]:
    """(n, classes, Golay-type, sporadic) for each n in the range."""
    rows = []
    for n in range(n_lo, n_hi + 1):
        records = enumerate_classes(n, workers=workers)
        golay = sum(1 for r in records if r.golay_type)
        rows.append((n, len(records), golay, len(records) - golay))
    return rows


def record_quadruple(record: ClassRecord) -> NormalQuadruple:
    """Decode a record back into its representative quadruple."""
    _, _, quad = _record_from_codes(record.n, record.p_code, record.q_code)
    return quad


def exhaustive_normal_quadruples(n: int) -> list[tuple]:
    """Every raw (A;C;D) triple passing the normality identity, found by
    brute force over all 2^(3n) sign patterns.  Capped at n = 10."""
    if not 1 <= n <= 10:
        raise ValueError("exhaustive enumeration is capped at n = 10")
    count = 1 << n
    bits = (np.arange(count, dtype=np.int64)[:, None] >> np.arange(n)[::-1]) & 1
    seqs = (1 - 2 * bits).astype(np.int8)
    shifts = n - 1
    corr = np.zeros((count, shifts), dtype=np.int16)
    for i in range(1, n):
        corr[:, i - 1] = (
            seqs[:, : n - i].astype(np.int16) * seqs[:, i:].astype(np.int16)
        ).sum(axis=1)
    if shifts == 0:
        pairs = [(c, d) for c in range(count) for d in range(count)]
        return [
            (tuple(seqs[a].tolist()), tuple(seqs[c].tolist()), tuple(seqs[d].tolist()))
            for a in range(count)
            for c, d in pairs
        ]
    cd = (corr[:, None, :] + corr[None, :, :]).reshape(count * count, shifts)
    keys = (-2 * corr).astype(np.int16)

    def rows_view(arr: np.ndarray) -> np.ndarray:
        arr = np.ascontiguousarray(arr)
        return arr.view([("", arr.dtype)] * arr.shape[1]).ravel()

    cd_view = rows_view(cd)
    order = np.argsort(cd_view, kind="stable")
    cd_sorted = cd_view[order]
    key_view = rows_view(keys)
    los = np.searchsorted(cd_sorted, key_view, side="left")
    his = np.searchsorted(cd_sorted, key_view, side="right")
    out = []
    seq_tuples = [tuple(seqs[i].tolist()) for i in range(count)]
    for a in range(count):
        for flat in order[los[a] : his[a]]:
            c, d = divmod(int(flat), count)
            out.append((seq_tuples[a], seq_tuples[c], seq_tuples[d]))
    return out
