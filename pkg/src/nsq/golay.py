"""Exhaustive Golay pair search, the two embeddings into normal
sequences, and the Golay-type class count.

The pair search reuses the outward-in engine with the target table
identically zero, so one pruning core backs both enumerations."""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

import numpy as np

from . import _engine
from .core import BinarySeq, NormalQuadruple, alternate, negate, npaf, reverse
from .equivalence import are_equivalent, canonical_raw


class GolayError(ValueError):
    """Raised for invalid pairs or out-of-budget searches."""


MAX_EXHAUSTIVE = 20


@dataclass(frozen=True)
class GolayPair:
    """Two sequences whose autocorrelations cancel at every nonzero shift."""

    a: BinarySeq
    b: BinarySeq

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise GolayError("the two sequences must share one length")
        na = npaf(self.a)
        nb = npaf(self.b)
        if any(na[i] + nb[i] != 0 for i in range(1, len(self.a))):
            raise GolayError("autocorrelations do not cancel; not a Golay pair")

    @property
    def n(self) -> int:
        return len(self.a)


def _pairs_from_leaves(leaves: dict, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    syms = leaves["syms"][0]
    centrals = leaves["centrals"][0] if leaves["centrals"] is not None else None
    count = len(syms)
    m = n // 2
    top = np.zeros((count, n), dtype=np.int8)
    bottom = np.zeros((count, n), dtype=np.int8)
    for j in range(m):
        col = syms[:, j]
        top[:, j] = _engine.TOP_LEFT[col]
        top[:, n - 1 - j] = _engine.TOP_RIGHT[col]
        bottom[:, j] = _engine.BOT_LEFT[col]
        bottom[:, n - 1 - j] = _engine.BOT_RIGHT[col]
    if centrals is not None:
        top[:, m] = _engine.VEC[centrals, 0]
        bottom[:, m] = _engine.VEC[centrals, 1]
    return [
        (tuple(top[i].tolist()), tuple(bottom[i].tolist())) for i in range(count)
    ]


def _golay_worker(args: tuple[int, int, int]):
    n, index, total = args
    return _pairs_from_leaves(_engine.search_golay(n, shard=(index, total)), n)


def golay_pairs(n: int, workers: int = 1, max_exhaustive: int = MAX_EXHAUSTIVE) -> list[GolayPair]:
    """All ordered Golay pairs of length n, exhaustively."""
    if n < 1:
        raise GolayError("n must be at least 1")
    if n > max_exhaustive:
        raise GolayError(
            f"exhaustive pair search is budgeted up to n = {max_exhaustive}"
        )
    if workers > 1 and n >= 10:
        shards = max(workers * 4, workers)
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_golay_worker, [(n, i, shards) for i in range(shards)])
        raw_pairs = [p for part in parts for p in part]
    else:
        raw_pairs = _pairs_from_leaves(_engine.search_golay(n), n)
    raw_pairs.sort()
    return [GolayPair(BinarySeq(a), BinarySeq(b)) for a, b in raw_pairs]


def embed(pair: GolayPair) -> tuple[NormalQuadruple, NormalQuadruple]:
    """The two normal sequences (A;A;B;B) and (B;B;A;A) a pair yields."""
    first = NormalQuadruple(pair.a, pair.b, pair.b)
    second = NormalQuadruple(pair.b, pair.a, pair.a)
    return first, second


def two_embeddings_equivalent(pair: GolayPair) -> bool:
    """Whether the two embeddings land in one equivalence class.

    For even n > 2 this is the closed-form test: the alternation of B
    must be A up to negation and reversal.  Smaller or odd lengths fall
    back to direct orbit comparison.
    """
    n = pair.n
    if n > 2 and n % 2 == 0:
        alt_b = alternate(pair.b)
        images = {pair.a, negate(pair.a), reverse(pair.a), negate(reverse(pair.a))}
        return alt_b in images
    first, second = embed(pair)
    return are_equivalent(first, second)


def golay_type_class_count(n: int, workers: int = 1) -> int:
    """Number of distinct classes met by the embeddings of all pairs."""
    canonical = set()
    for pair in golay_pairs(n, workers=workers):
        for quad in embed(pair):
            canonical.add(canonical_raw(quad.raw()))
    return len(canonical)


def golay_class_codes(n: int, workers: int = 1) -> set[tuple[str, str]]:
    """Canonical code pairs of every Golay-type class, for cross-checks."""
    from .quadcodec import encode_quadruple

    codes = set()
    for pair in golay_pairs(n, workers=workers):
        for quad in embed(pair):
            canon = NormalQuadruple.from_raw(canonical_raw(quad.raw()))
            p, q = encode_quadruple(canon)
            codes.add((p.text, q.text))
    return codes
