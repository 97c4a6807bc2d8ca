"""Exhaustive subset search for kappa and kappa' over all ``C`` in ``V``.

The vertex set is split into a low block (the first ``LOW_BITS`` vertices)
that is enumerated as one numpy vector, and a high block whose assignments
form the outer loop.  For each high assignment the parity vector
``P(C) = XOR_{v in C} N(v)`` of every low completion is one vectorized XOR,
and ``Odd(C) = P & ~C``, ``C | Odd(C) = C | P``.

A high assignment is skipped when a bound computed from the high vertices
whose neighbourhoods lie entirely inside the high block (their status is
already decided) shows it cannot reach the incumbent.  Results merge by
(value, lexicographic witness) so they do not depend on chunk order.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graph import sorted_members

LOW_BITS = 20
MAX_VECTOR_ORDER = 64


@lru_cache(maxsize=4)
def _low_masks(bits: int) -> tuple[np.ndarray, np.ndarray]:
    masks = np.arange(1 << bits, dtype=np.uint64)
    return masks, (np.bitwise_count(masks) & 1).astype(bool)


def _parity_table(rows: tuple[int, ...], bits: int) -> np.ndarray:
    table = np.zeros(1, dtype=np.uint64)
    for v in range(bits):
        table = np.concatenate([table, table ^ np.uint64(rows[v])])
    return table


def lex_min_mask(cands: np.ndarray) -> int:
    """Mask whose sorted member sequence is lexicographically smallest.

    A proper prefix sorts first, so the empty set beats everything and
    ``{0}`` beats ``{0, 5}``.
    """
    prefix = 0
    one = np.uint64(1)
    while True:
        if (cands == 0).any():
            return prefix
        low = cands & (~cands + one)
        m = low.min()
        cands = cands[low == m] ^ m
        prefix |= int(m)


def _lex_key(mask: int) -> tuple[int, ...]:
    return sorted_members(mask)


def exhaustive(rows: tuple[int, ...], want_kappa: bool = True, want_prime: bool = True):
    """Return ``(kappa, kappa_witness, kappa_prime, kappa_prime_witness)``.

    Entries for an objective that was not requested are ``None``.
    """
    n = len(rows)
    low = min(n, LOW_BITS)
    high = n - low
    masks, low_odd = _low_masks(low)
    p_low = _parity_table(rows, low)
    c_or_p_low = np.bitwise_count(masks | p_low)  # reused when high == 0

    full = (1 << n) - 1
    low_full = (1 << low) - 1
    # high vertices whose closed neighbourhood lies in the high block
    frozen = 0
    for v in range(low, n):
        if not rows[v] & low_full:
            frozen |= 1 << v

    best_k: tuple[int, tuple[int, ...]] | None = None
    best_kp: tuple[int, tuple[int, ...]] | None = None
    p_high = [0] * (1 << high)
    for h in range(1 << high):
        if h:
            lowbit = h & -h
            p_high[h] = p_high[h ^ lowbit] ^ rows[low + lowbit.bit_length() - 1]
        ph = p_high[h]
        hmask = h << low
        hsize = h.bit_count()
        decided_out = frozen & ~hmask

        do_k = want_kappa
        if do_k and best_k is not None:
            # frozen, not in C, even parity: can never be in Odd(C)
            ub = n - hsize - (decided_out & ~ph).bit_count()
            do_k = ub >= best_k[0]
        do_kp = want_prime
        if do_kp and best_kp is not None:
            lb = hsize + (decided_out & ph).bit_count()
            do_kp = lb <= best_kp[0]
        if not (do_k or do_kp):
            continue

        if high:
            p = p_low ^ np.uint64(ph)
            c = masks | np.uint64(hmask)
        else:
            p, c = p_low, masks

        if do_k:
            vals = np.bitwise_count(p & ~c & np.uint64(full))
            top = int(vals.max())
            if best_k is None or top >= best_k[0]:
                w = lex_min_mask(c[vals == top])
                cand = (top, _lex_key(w))
                if best_k is None or top > best_k[0] or cand[1] < best_k[1]:
                    best_k = cand
        if do_kp:
            sizes = c_or_p_low if not high else np.bitwise_count(c | p)
            odd = low_odd if hsize % 2 == 0 else ~low_odd
            vals = np.where(odd, sizes, np.uint8(255))
            bottom = int(vals.min())
            if bottom != 255 and (best_kp is None or bottom <= best_kp[0]):
                w = lex_min_mask(c[vals == bottom])
                cand = (bottom, _lex_key(w))
                if best_kp is None or bottom < best_kp[0] or cand[1] < best_kp[1]:
                    best_kp = cand

    kv = kw = kpv = kpw = None
    if best_k is not None:
        kv, kw = best_k
    if best_kp is not None:
        kpv, kpw = best_kp
    return kv, kw, kpv, kpw
