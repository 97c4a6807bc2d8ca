"""Greedy WOD construction and the three FPT deciders.

Each decider answers from a closed-form bound when the parameter is small
relative to the graph and otherwise falls back to the exact kernel on a
graph whose order is bounded by a function of the parameter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AllIsolated, ParameterOutOfRange
from .graph import Graph, complement, strip_isolated, universal_vertices
from .kernel import (
    NonWodCertificate,
    WodCertificate,
    kappa,
    kappa_prime,
    kappa_q,
    odd_mask,
)


@dataclass(frozen=True)
class GreedyTrace:
    picks: tuple[int, ...]
    odd_sizes: tuple[int, ...]  # |Odd(A)| after each pick


def greedy_trace(g: Graph) -> GreedyTrace:
    """Grow ``A`` while some vertex of ``Even(A)`` sees more of ``Even(A)`` than of ``Odd(A)``.

    The best-scoring vertex (even neighbours minus odd neighbours, ties to the
    lowest index) is added at each step.  Adding ``v`` flips the parity of its
    neighbours, so ``Odd`` gains ``|N(v) & Even|`` and loses ``|N(v) & Odd|``.
    """
    rows = g.rows
    full = g.full_mask
    a = 0
    parity = 0
    picks: list[int] = []
    sizes: list[int] = []
    while True:
        odd = parity & ~a
        even = full & ~(a | odd)
        best_v, best_gain = -1, 0
        rest = even
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            gain = (rows[v] & even).bit_count() - (rows[v] & odd).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
            rest ^= low
        if best_v < 0:
            break
        a |= 1 << best_v
        parity ^= rows[best_v]
        picks.append(best_v)
        sizes.append((parity & ~a).bit_count())
    return GreedyTrace(tuple(picks), tuple(sizes))


def greedy_wod(g: Graph) -> WodCertificate:
    """Greedy WOD certificate, or the best single vertex if that dominates more."""
    trace = greedy_trace(g)
    greedy = WodCertificate.of(g, trace.picks)
    hub = max(range(g.order), key=lambda v: (g.degree(v), -v))
    single = WodCertificate.of(g, [hub])
    return single if single.value > greedy.value else greedy


def _lift(cert: WodCertificate, index: dict[int, int], g: Graph) -> WodCertificate:
    back = {new: old for old, new in index.items()}
    return WodCertificate.of(g, [back[v] for v in cert.witness])


def decide_kappa_at_least(
    g: Graph, k: int, force: bool = False
) -> tuple[bool, WodCertificate | None]:
    """Is kappa(G) >= k?  Bound branch when ``4k^2 <= n'``, exact otherwise."""
    if k < 0:
        raise ParameterOutOfRange("k must be >= 0")
    if k == 0:
        return True, WodCertificate.of(g, 0)
    try:
        stripped, index = strip_isolated(g)
    except AllIsolated:
        return False, None
    n1 = stripped.order
    if 4 * k * k <= n1:
        # no isolated vertex left: the greedy certificate reaches sqrt(n')/2 >= k
        return True, _lift(greedy_wod(stripped), index, g)
    cert = kappa(stripped, force=force)
    if cert.value >= k:
        return True, _lift(cert, index, g)
    return False, None


def _nonwod_from_complement(g: Graph, d: int, spare: int) -> NonWodCertificate:
    """Turn ``D`` (with large Odd in the complement) into an odd witness in ``G``.

    ``spare`` holds vertices isolated in the complement: adding or removing
    one changes ``|D|`` by one without touching ``Odd``.
    """
    if not d.bit_count() & 1:
        free = spare & ~d
        if free:
            d |= free & -free
        else:
            d ^= spare & d & -(spare & d)
    return NonWodCertificate.of(g, d)


def decide_kappa_prime_at_most(
    g: Graph, k: int, force: bool = False
) -> tuple[bool, NonWodCertificate | None]:
    """Is kappa'(G) <= n - k?"""
    n = g.order
    if not 0 <= k <= n:
        raise ParameterOutOfRange(f"k must lie in 0..{n}")
    if k == 0:
        return True, NonWodCertificate.of(g, 1)
    universal = universal_vertices(g)
    if universal:
        # kappa'(G) + kappa(co-G) = n with a universal vertex present
        comp = complement(g)
        ok, cert = decide_kappa_at_least(comp, k, force=force)
        if not ok:
            return False, None
        spare = 0
        for u in universal:
            spare |= 1 << u
        return True, _nonwod_from_complement(g, sum(1 << v for v in cert.witness), spare)
    if 16 * k * k <= n:
        # no universal vertex: build D in the complement with |Odd(D)| >= sqrt(n)/4
        comp = complement(g)
        c = sum(1 << v for v in greedy_wod(comp).witness)
        d = c
        if not c.bit_count() & 1:
            v = (c & -c).bit_length() - 1
            if 16 * comp.degree(v) ** 2 >= n:
                d = 1 << v
            else:
                d = c ^ (1 << v)
        cert = NonWodCertificate.of(g, d)
        assert n - cert.value >= k, "complement construction fell short of the bound"
        return True, cert
    cert = kappa_prime(g, force=force)
    if cert.value <= n - k:
        return True, cert
    return False, None


def decide_kappa_q_at_least(g: Graph, k: int, force: bool = False) -> bool:
    """Is kappa_Q(G) >= k?  Always true for ``k <= n/2``."""
    if k < 0:
        raise ParameterOutOfRange("k must be >= 0")
    if 2 * k <= g.order:
        return True
    value, _ = kappa_q(g, force=force)
    return value >= k


def complement_odd(g: Graph, c: int) -> int:
    """Odd set of ``c`` in the complement graph, computed from ``g``."""
    full = g.full_mask
    odd = odd_mask(g, c)
    if c.bit_count() & 1:
        return full & ~(c | odd)
    return odd


__all__ = [
    "GreedyTrace",
    "greedy_trace",
    "greedy_wod",
    "decide_kappa_at_least",
    "decide_kappa_prime_at_most",
    "decide_kappa_q_at_least",
    "complement_odd",
]
