"""Chunked, vectorised outward-in quad search.

Shared by the class enumerator and the Golay pair search.  Sequences are
filled pairwise from the outside in: step k fixes positions k and n+1-k
of every sequence at once (one quad per pair of sequences).  After step k
the combined correlation at shift n-k is fully determined, so each step
filters candidates against one exact equation; every other shift is
bounded by the number of products it still misses, and partial row sums
are checked against the integer solutions of the square identity the
completed sequences must satisfy.  All arithmetic is integer.

Quads are held as raw ids 4*left + right, where left/right are the
column states 0=(+,+) 1=(+,-) 2=(-,+) 3=(-,-); the column state ids
coincide with the central-column labels of the text codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Callable

import numpy as np

VEC = np.array([[1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=np.int8)
DOT4 = (VEC @ VEC.T).astype(np.int16)  # (4,4), values in {-2,0,2}

_L = np.arange(16) // 4
_R = np.arange(16) % 4

# Pairwise contribution tables for raw quads a (at pair j) and b (at pair k):
#   DD[a,b] -> shift k-j   (left-left plus right-right products)
#   SS[a,b] -> shift n+1-j-k  (the two crossed products)
#   SC[a]   -> shift n+1-2j   (a quad against itself)
#   CENTRE[a,z] -> shift m+1-j (a quad against the central column z)
DD = DOT4[_L[:, None], _L[None, :]] + DOT4[_R[:, None], _R[None, :]]
SS = DOT4[_L[:, None], _R[None, :]] + DOT4[_L[None, :], _R[:, None]]
SC = DOT4[_L, _R]
CENTRE = DOT4[_L] + DOT4[_R]  # (16, 4)

# Per-row sign values of a raw quad's two positions.
TOP_LEFT = VEC[_L, 0]
TOP_RIGHT = VEC[_R, 0]
BOT_LEFT = VEC[_L, 1]
BOT_RIGHT = VEC[_R, 1]

# Text-code label <-> raw id for the eight recognised quads.
SYMBOL_TO_RAW = {1: 0, 2: 5, 3: 12, 4: 6, 5: 9, 6: 3, 7: 10, 8: 15}
RAW_TO_SYMBOL = {raw: sym for sym, raw in SYMBOL_TO_RAW.items()}

_AA_RAWS = (0, 12, 3, 15)  # labels 1, 3, 6, 8
_CD_RAWS = tuple(SYMBOL_TO_RAW[s] for s in range(1, 9))
# Raw ids whose columns are orthogonal; these are the only quads a pair
# with identically vanishing combined correlation can contain.
ORTHOGONAL_RAWS = tuple(int(i) for i in range(16) if DOT4[_L[i], _R[i]] == 0)

_SYMMETRIC_RAWS = frozenset({0, 5, 10, 15})  # labels 1, 2, 7, 8


@dataclass(frozen=True)
class TrackSpec:
    """One sequence pair being searched: its quad alphabet, the running
    prefix filter (a small state machine), and the central-column rules."""

    first: np.ndarray            # allowed raw ids at pair 1
    alphabet: np.ndarray         # allowed raw ids at pairs >= 2
    allow: np.ndarray            # (states, 16) bool
    trans: np.ndarray            # (states, 16) int8
    start_state: int
    centrals: tuple[int, ...]    # allowed central states for odd n
    central_mask: Callable | None  # (syms, z) -> bool mask, extra odd-n rules
    pair_rows: int               # 1 when the pair repeats one sequence


def _aa_tables(odd: bool) -> tuple[np.ndarray, np.ndarray]:
    # State bits: 1 seen symmetric, 2 seen skew, 4 same-type adjacency
    # consumed, 8 previous quad was skew, 16 at least one quad placed.
    allow = np.zeros((32, 16), dtype=bool)
    trans = np.zeros((32, 16), dtype=np.int8)
    for state in range(32):
        seen_sym = state & 1
        seen_skew = state & 2
        vdone = state & 4
        prev_skew = state & 8
        has_prev = state & 16
        for raw in _AA_RAWS:
            skew = raw not in _SYMMETRIC_RAWS
            adjacency = has_prev and not vdone and bool(prev_skew) == skew
            ok = True
            if not skew and not seen_sym and raw != 0:
                ok = False  # first symmetric quad must be label 1
            if skew and not seen_skew and raw != 3:
                ok = False  # first skew quad must be label 6
            if odd and adjacency and raw not in (0, 3):
                ok = False  # first same-type adjacency pins it to {1,6}
            allow[state, raw] = ok
            new = state | (2 if skew else 1) | 16
            if odd and adjacency:
                new |= 4
            new = (new & ~8) | (8 if skew else 0)
            trans[state, raw] = new
    return allow, trans


def _cd_tables() -> tuple[np.ndarray, np.ndarray]:
    # State bits: 1 seen symmetric, 2 seen skew, 4 seen {2,7}, 8 seen {4,5}.
    allow = np.zeros((16, 16), dtype=bool)
    trans = np.zeros((16, 16), dtype=np.int8)
    for state in range(16):
        for raw in _CD_RAWS:
            skew = raw not in _SYMMETRIC_RAWS
            ok = True
            if not skew and not state & 1 and raw != 0:
                ok = False  # first symmetric quad must be label 1
            if skew and not state & 2 and raw != 3:
                ok = False  # first skew quad must be label 6
            if raw in (5, 10) and not state & 4 and raw != 5:
                ok = False  # first of {2,7} must be label 2
            if raw in (6, 9) and not state & 8 and raw != 6:
                ok = False  # first of {4,5} must be label 4
            allow[state, raw] = ok
            new = state | (2 if skew else 1)
            if raw in (5, 10):
                new |= 4
            if raw in (6, 9):
                new |= 8
            trans[state, raw] = new
    return allow, trans


def _aa_central_mask(syms: np.ndarray, z: int) -> np.ndarray:
    skew = np.isin(syms, (3, 12))
    all_skew = skew.all(axis=1)
    if syms.shape[1] > 1:
        adjacency = (skew[:, :-1] == skew[:, 1:]).any(axis=1)
    else:
        adjacency = np.zeros(len(syms), dtype=bool)
    last_sym = ~skew[:, -1] if syms.shape[1] else np.zeros(len(syms), dtype=bool)
    forced_zero = all_skew | (~adjacency & last_sym)
    if z == 0:
        return np.ones(len(syms), dtype=bool)
    return ~forced_zero


def _cd_central_mask(syms: np.ndarray, z: int) -> np.ndarray:
    ok = np.ones(len(syms), dtype=bool)
    if z == 2:
        ok &= (syms == 5).any(axis=1)      # central 2 needs a label-2 quad somewhere
    if z != 0:
        ok &= (syms == 0).any(axis=1)      # no label-1 quad pins the central to 0
    return ok


def ns_tracks(n: int) -> tuple[TrackSpec, TrackSpec]:
    odd = n % 2 == 1
    aa_allow, aa_trans = _aa_tables(odd)
    cd_allow, cd_trans = _cd_tables()
    aa_first = np.array([0] if not odd else [0, 3], dtype=np.int8)
    cd_first = np.array([0, 3], dtype=np.int8)
    aa = TrackSpec(
        first=aa_first,
        alphabet=np.array(_AA_RAWS, dtype=np.int8),
        allow=aa_allow,
        trans=aa_trans,
        start_state=0,
        centrals=(0, 3),
        central_mask=_aa_central_mask,
        pair_rows=1,
    )
    cd = TrackSpec(
        first=cd_first,
        alphabet=np.array(_CD_RAWS, dtype=np.int8),
        allow=cd_allow,
        trans=cd_trans,
        start_state=0,
        centrals=(0, 1, 2, 3),
        central_mask=_cd_central_mask,
        pair_rows=2,
    )
    return aa, cd


def golay_tracks(n: int) -> tuple[TrackSpec]:
    del n
    raws = np.array(ORTHOGONAL_RAWS, dtype=np.int8)
    track = TrackSpec(
        first=raws,
        alphabet=raws,
        allow=np.ones((1, 16), dtype=bool),
        trans=np.zeros((1, 16), dtype=np.int8),
        start_state=0,
        centrals=(0, 1, 2, 3),
        central_mask=None,
        pair_rows=2,
    )
    return (track,)


def ns_solutions(n: int) -> np.ndarray:
    """Integer solutions (a, c, d) of 2a^2 + c^2 + d^2 = 4n with the
    parity a = c = d = n (mod 2) forced on every row sum."""
    sols = []
    amax = isqrt(2 * n)
    cmax = isqrt(4 * n)
    for a in range(-amax, amax + 1):
        if (a - n) % 2:
            continue
        rest = 4 * n - 2 * a * a
        for c in range(-cmax, cmax + 1):
            if (c - n) % 2 or c * c > rest:
                continue
            d2 = rest - c * c
            d = isqrt(d2)
            if d * d != d2 or (d - n) % 2:
                continue
            sols.append((a, c, d))
            if d:
                sols.append((a, c, -d))
    return np.array(sols, dtype=np.int16).reshape(-1, 3)


def golay_solutions(n: int) -> np.ndarray:
    """Integer solutions (a, b) of a^2 + b^2 = 2n, same parity rule."""
    sols = []
    amax = isqrt(2 * n)
    for a in range(-amax, amax + 1):
        if (a - n) % 2:
            continue
        b2 = 2 * n - a * a
        b = isqrt(b2)
        if b * b != b2 or (b - n) % 2:
            continue
        sols.append((a, b))
        if b:
            sols.append((a, -b))
    return np.array(sols, dtype=np.int16).reshape(-1, 2)


@lru_cache(maxsize=None)
def _bounds(n: int, weight: int) -> np.ndarray:
    """bounds[k][i]: largest |combined correlation at shift i| reachable
    with pairs 1..k placed; weight is the number of underlying sequences."""
    out = np.zeros((n // 2 + 1, n), dtype=np.int16)
    for k in range(n // 2 + 1):
        known = [False] * (n + 1)
        for j in range(1, k + 1):
            known[j] = True
            known[n + 1 - j] = True
        for i in range(1, n):
            undetermined = sum(
                1 for j in range(1, n - i + 1) if not (known[j] and known[i + j])
            )
            out[k, i] = weight * undetermined
    return out


def _reachable(partial: np.ndarray, solutions: np.ndarray, remaining: int) -> np.ndarray:
    if not len(solutions):
        return np.zeros(len(partial), dtype=bool)
    diff = solutions[None, :, :].astype(np.int16) - partial[:, None, :]
    ok = (np.abs(diff) <= remaining) & (((diff - remaining) & 1) == 0)
    return ok.all(axis=2).any(axis=1)


class _Block:
    __slots__ = ("p", "syms", "fst", "plain", "alt")

    def __init__(self, p, syms, fst, plain, alt):
        self.p = p
        self.syms = syms
        self.fst = fst
        self.plain = plain
        self.alt = alt

    def take(self, idx):
        return _Block(
            self.p[idx],
            [s[idx] for s in self.syms],
            self.fst[idx],
            self.plain[idx],
            self.alt[idx],
        )

    def __len__(self):
        return len(self.p)


def _root(n: int, tracks, rows: int) -> _Block:
    return _Block(
        np.zeros((1, n), dtype=np.int16),
        [np.zeros((1, 0), dtype=np.int8) for _ in tracks],
        np.array([[t.start_state for t in tracks]], dtype=np.int8),
        np.zeros((1, rows), dtype=np.int16),
        np.zeros((1, rows), dtype=np.int16),
    )


def _combo_grid(alphabets: list[np.ndarray]) -> list[np.ndarray]:
    grids = np.meshgrid(*alphabets, indexing="ij")
    return [g.reshape(-1).astype(np.int8) for g in grids]


def _expand(block: _Block, n: int, k: int, tracks, bounds, solutions) -> _Block | None:
    """Place pair k (1-based) on every state of the block and keep the
    survivors of the exact, bound and row-sum checks."""
    alphas = [t.first if k == 1 else t.alphabet for t in tracks]
    units = _combo_grid(alphas)

    # Exact check at the newly determined shift n-k.  For k = 1 the only
    # contribution is each new quad against itself; afterwards it is each
    # new quad crossed with pair 1.
    if k == 1:
        delta = sum(SC[u] for u in units)
        value = block.p[:, n - k][:, None] + delta[None, :]
        mask = value == 0
    else:
        value = block.p[:, n - k][:, None] + sum(
            SS[block.syms[t][:, 0][:, None], units[t][None, :]]
            for t in range(len(tracks))
        )
        mask = value == 0
        for t, track in enumerate(tracks):
            mask &= track.allow[block.fst[:, t][:, None], units[t][None, :]]

    rows_idx, combo_idx = np.nonzero(mask)
    if not len(rows_idx):
        return None

    selected = [u[combo_idx] for u in units]
    p_new = block.p[rows_idx]
    syms_new = []
    fst_new = np.empty((len(rows_idx), len(tracks)), dtype=np.int8)
    for t, track in enumerate(tracks):
        u = selected[t]
        prior = block.syms[t][rows_idx]
        for j in range(1, k):
            pj = prior[:, j - 1]
            p_new[:, k - j] += DD[pj, u]
            p_new[:, n + 1 - j - k] += SS[pj, u]
        p_new[:, n + 1 - 2 * k] += SC[u]
        syms_new.append(np.concatenate([prior, u[:, None]], axis=1))
        fst_new[:, t] = track.trans[block.fst[rows_idx, t], u]

    # Row sums, plain and alternating.
    plain_new = block.plain[rows_idx].copy()
    alt_new = block.alt[rows_idx].copy()
    sign_left = 1 if k % 2 else -1          # position k
    sign_right = 1 if (n - k) % 2 == 0 else -1  # position n+1-k
    row = 0
    for t, track in enumerate(tracks):
        u = selected[t]
        plain_new[:, row] += TOP_LEFT[u] + TOP_RIGHT[u]
        alt_new[:, row] += sign_left * TOP_LEFT[u] + sign_right * TOP_RIGHT[u]
        row += 1
        if track.pair_rows == 2:
            plain_new[:, row] += BOT_LEFT[u] + BOT_RIGHT[u]
            alt_new[:, row] += sign_left * BOT_LEFT[u] + sign_right * BOT_RIGHT[u]
            row += 1

    keep = (np.abs(p_new[:, 1:]) <= bounds[k][1:]).all(axis=1)
    remaining = n - 2 * k
    if remaining < n:
        keep &= _reachable(plain_new, solutions, remaining)
        keep &= _reachable(alt_new, solutions, remaining)
    if not keep.all():
        idx = np.nonzero(keep)[0]
        if not len(idx):
            return None
        return _Block(
            p_new[idx],
            [s[idx] for s in syms_new],
            fst_new[idx],
            plain_new[idx],
            alt_new[idx],
        )
    return _Block(p_new, syms_new, fst_new, plain_new, alt_new)


def _central_leaves(block: _Block, n: int, tracks) -> list[dict]:
    """For odd n, try every allowed central combination and keep the
    states whose full correlation table vanishes."""
    m = n // 2
    leaves = []
    combos = _combo_grid([np.array(t.centrals, dtype=np.int8) for t in tracks])
    for c in range(len(combos[0])):
        zs = [int(combos[t][c]) for t in range(len(tracks))]
        p_c = block.p.copy()
        for t in range(len(tracks)):
            for j in range(1, m + 1):
                p_c[:, m + 1 - j] += CENTRE[block.syms[t][:, j - 1], zs[t]]
        mask = (p_c[:, 1:] == 0).all(axis=1)
        for t, track in enumerate(tracks):
            if track.central_mask is not None:
                mask &= track.central_mask(block.syms[t], zs[t])
        idx = np.nonzero(mask)[0]
        if not len(idx):
            continue
        leaves.append(
            {
                "syms": [block.syms[t][idx] for t in range(len(tracks))],
                "centrals": [
                    np.full(len(idx), zs[t], dtype=np.int8)
                    for t in range(len(tracks))
                ],
            }
        )
    return leaves


def _merge_leaves(parts: list[dict], tracks, n: int) -> dict:
    m = n // 2
    ntracks = len(tracks)
    if not parts:
        return {
            "syms": [np.zeros((0, m), dtype=np.int8) for _ in range(ntracks)],
            "centrals": (
                [np.zeros(0, dtype=np.int8) for _ in range(ntracks)]
                if n % 2
                else None
            ),
        }
    out = {
        "syms": [
            np.concatenate([p["syms"][t] for p in parts]) for t in range(ntracks)
        ]
    }
    if n % 2:
        out["centrals"] = [
            np.concatenate([p["centrals"][t] for p in parts]) for t in range(ntracks)
        ]
    else:
        out["centrals"] = None
    return out


def run_search(
    n: int,
    tracks,
    solutions: np.ndarray,
    shard: tuple[int, int] = (0, 1),
    chunk: int = 1 << 15,
) -> dict:
    """Enumerate every completed assignment; returns stacked symbol arrays.

    shard=(i, w) deterministically keeps every w-th state of the level-3
    frontier, so w workers started with i = 0..w-1 partition the search.
    """
    m = n // 2
    rows = sum(t.pair_rows for t in tracks)
    weight = 2 * len(tracks)
    bounds = _bounds(n, weight)
    shard_index, shard_count = shard
    split_level = min(3, m) if shard_count > 1 else 0

    blocks = [_root(n, tracks, rows)]
    leaves: list[dict] = []
    for k in range(1, m + 1):
        nxt: list[_Block] = []
        for block in blocks:
            for lo in range(0, len(block), chunk):
                piece = block.take(slice(lo, lo + chunk))
                expanded = _expand(piece, n, k, tracks, bounds, solutions)
                if expanded is not None:
                    nxt.append(expanded)
        blocks = nxt
        if k == split_level and shard_count > 1:
            total = sum(len(b) for b in blocks)
            merged = _Block(
                np.concatenate([b.p for b in blocks]) if blocks else np.zeros((0, n), np.int16),
                [
                    np.concatenate([b.syms[t] for b in blocks])
                    if blocks
                    else np.zeros((0, k), np.int8)
                    for t in range(len(tracks))
                ],
                np.concatenate([b.fst for b in blocks]) if blocks else np.zeros((0, len(tracks)), np.int8),
                np.concatenate([b.plain for b in blocks]) if blocks else np.zeros((0, rows), np.int16),
                np.concatenate([b.alt for b in blocks]) if blocks else np.zeros((0, rows), np.int16),
            )
            del blocks
            keep = np.arange(shard_index, total, shard_count)
            blocks = [merged.take(keep)] if len(keep) else []
        if not blocks:
            break

    if n % 2 == 0:
        # bounds[m] is identically zero, so survivors already satisfy every
        # equation; they are the leaves.
        for block in blocks:
            leaves.append(
                {"syms": [block.syms[t] for t in range(len(tracks))], "centrals": None}
            )
    else:
        if m == 0:
            blocks = [_root(n, tracks, rows)]
        for block in blocks:
            leaves.extend(_central_leaves(block, n, tracks))
    return _merge_leaves(leaves, tracks, n)


def search_normal(n: int, shard: tuple[int, int] = (0, 1)) -> dict:
    """All canonical-form candidates for NS(n), as raw symbol arrays."""
    return run_search(n, ns_tracks(n), ns_solutions(n), shard=shard)


def search_golay(n: int, shard: tuple[int, int] = (0, 1)) -> dict:
    """All ordered pairs with identically vanishing combined correlation."""
    return run_search(n, golay_tracks(n), golay_solutions(n), shard=shard)
