"""Odd/Even operators, WOD tests, and exact kappa, kappa', kappa_Q with certificates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from . import _bounded, _exhaustive
from .errors import MemberOutOfRange, ParameterOutOfRange, TooLarge, WodError
from .gf2 import Gf2System
from .graph import Graph, mask_of, members

EXACT_GUARD = 30
BRUTEFORCE_GUARD = 25


# -- operators on masks ------------------------------------------------------

def parity_mask(rows: tuple[int, ...], c: int) -> int:
    """Vertices with an odd number of neighbours in ``c`` (members of ``c`` included)."""
    p = 0
    while c:
        low = c & -c
        p ^= rows[low.bit_length() - 1]
        c ^= low
    return p


def odd_mask(g: Graph, c: int) -> int:
    return parity_mask(g.rows, c) & ~c


def even_mask(g: Graph, a: int) -> int:
    return g.full_mask & ~(a | odd_mask(g, a))


def odd_neighborhood(g: Graph, c: Iterable[int] | int) -> frozenset[int]:
    return members(odd_mask(g, mask_of(c, g.order)))


def even_set(g: Graph, a: Iterable[int] | int) -> frozenset[int]:
    return members(even_mask(g, mask_of(a, g.order)))


# -- certificates ----------------------------------------------------------------

@dataclass(frozen=True)
class WodCertificate:
    """``witness`` oddly dominates ``dominated``; proves kappa >= value."""

    witness: frozenset[int]
    dominated: frozenset[int]
    value: int

    kind = "wod"

    @classmethod
    def of(cls, g: Graph, witness: Iterable[int] | int) -> "WodCertificate":
        c = mask_of(witness, g.order)
        d = odd_mask(g, c)
        return cls(members(c), members(d), d.bit_count())

    def to_json(self) -> dict:
        return {
            "kind": "wod",
            "witness": sorted(self.witness),
            "dominated": sorted(self.dominated),
            "value": self.value,
        }


@dataclass(frozen=True)
class NonWodCertificate:
    """Odd-size ``witness`` whose closure ``witness | Odd(witness)`` is not WOD."""

    witness: frozenset[int]
    closure: frozenset[int]
    value: int

    kind = "nonwod"

    @classmethod
    def of(cls, g: Graph, witness: Iterable[int] | int) -> "NonWodCertificate":
        c = mask_of(witness, g.order)
        cl = c | odd_mask(g, c)
        return cls(members(c), members(cl), cl.bit_count())

    def to_json(self) -> dict:
        return {
            "kind": "nonwod",
            "witness": sorted(self.witness),
            "closure": sorted(self.closure),
            "value": self.value,
        }


Certificate = Union[WodCertificate, NonWodCertificate]


def certificate_from_json(data: dict) -> Certificate:
    try:
        kind = data["kind"]
        witness = frozenset(int(v) for v in data["witness"])
        value = int(data["value"])
        if kind == "wod":
            return WodCertificate(witness, frozenset(int(v) for v in data["dominated"]), value)
        if kind == "nonwod":
            return NonWodCertificate(witness, frozenset(int(v) for v in data["closure"]), value)
    except (KeyError, TypeError, ValueError) as exc:
        raise WodError(f"malformed certificate: {exc}") from None
    raise WodError(f"unknown certificate kind {kind!r}")


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    try:
        c = mask_of(cert.witness, g.order)
        if isinstance(cert, WodCertificate):
            d = odd_mask(g, c)
            return mask_of(cert.dominated, g.order) == d and cert.value == d.bit_count()
        if isinstance(cert, NonWodCertificate):
            if not c.bit_count() & 1:
                return False
            cl = c | odd_mask(g, c)
            return mask_of(cert.closure, g.order) == cl and cert.value == cl.bit_count()
    except MemberOutOfRange:
        return False
    return False


# -- WOD tests -----------------------------------------------------------------

def wod_system(g: Graph, b: int) -> Gf2System:
    """One parity-1 constraint per ``v`` in ``b`` over variables ``V - b``."""
    system = Gf2System(variables=g.full_mask & ~b)
    rest = b
    while rest:
        low = rest & -rest
        system.add(g.rows[low.bit_length() - 1], 1)
        rest ^= low
    return system


def is_wod(g: Graph, b: Iterable[int] | int) -> tuple[bool, frozenset[int] | None]:
    bm = mask_of(b, g.order)
    x = wod_system(g, bm).solve()
    if x is None:
        return False, None
    return True, members(x)


def is_wod_bruteforce(g: Graph, b: Iterable[int] | int) -> bool:
    """Enumerate every ``C`` in ``V - B`` and count neighbours directly."""
    bset = members(mask_of(b, g.order))
    outside = [v for v in range(g.order) if v not in bset]
    if len(outside) > BRUTEFORCE_GUARD:
        raise TooLarge(f"{len(outside)} free vertices exceed the brute-force guard")
    adj = [g.neighbors(v) for v in range(g.order)]
    for size in range(len(outside) + 1):
        for combo in combinations(outside, size):
            cs = set(combo)
            if all(len(adj[v] & cs) % 2 == 1 for v in bset):
                return True
    return False


# -- exact solvers -------------------------------------------------------------

def check_guard(g: Graph, force: bool) -> None:
    if g.order > _exhaustive.MAX_VECTOR_ORDER:
        raise TooLarge(f"order {g.order} exceeds the {_exhaustive.MAX_VECTOR_ORDER}-bit search kernel")
    if g.order > EXACT_GUARD and not force:
        raise TooLarge(f"order {g.order} exceeds the exact-solver guard {EXACT_GUARD}; pass force")


def _as_mask(seq: tuple[int, ...]) -> int:
    m = 0
    for v in seq:
        m |= 1 << v
    return m


def kappa(g: Graph, force: bool = False) -> WodCertificate:
    """Greatest WOD set, witnessed by the lexicographically first maximizing ``C``."""
    check_guard(g, force)
    _, w, _, _ = _exhaustive.exhaustive(g.rows, want_kappa=True, want_prime=False)
    return WodCertificate.of(g, _as_mask(w))


def kappa_prime(g: Graph, force: bool = False) -> NonWodCertificate:
    """Smallest non-WOD set ``C | Odd(C)`` over odd-size ``C``."""
    check_guard(g, force)
    _, _, _, w = _exhaustive.exhaustive(g.rows, want_kappa=False, want_prime=True)
    return NonWodCertificate.of(g, _as_mask(w))


def kappa_q(g: Graph, force: bool = False) -> tuple[int, Certificate]:
    """``max(kappa, n - kappa')`` and the certificate realizing it (ties go to kappa)."""
    check_guard(g, force)
    _, kw, _, kpw = _exhaustive.exhaustive(g.rows)
    wod = WodCertificate.of(g, _as_mask(kw))
    nonwod = NonWodCertificate.of(g, _as_mask(kpw))
    if wod.value >= g.order - nonwod.value:
        return wod.value, wod
    return g.order - nonwod.value, nonwod


def kappa_prime_at_most(
    g: Graph, t: int, method: str = "auto", max_nodes: int | None = None
) -> NonWodCertificate | None:
    """Some certificate with value <= t if kappa'(G) <= t, else None."""
    if t < 1:
        raise ParameterOutOfRange("threshold must be >= 1")
    if t >= g.order:
        return NonWodCertificate.of(g, 1)
    if method == "exact" or (method == "auto" and g.order <= 16):
        cert = kappa_prime(g, force=True)
        return cert if cert.value <= t else None
    w = _bounded.bounded_search(g, t, "closure", max_nodes=max_nodes)
    return None if w is None else NonWodCertificate.of(g, w)


def kappa_at_least(
    g: Graph, t: int, method: str = "auto", max_nodes: int | None = None
) -> WodCertificate | None:
    """Some certificate with value >= t if kappa(G) >= t, else None."""
    if t <= 0:
        return WodCertificate.of(g, 0)
    if t >= g.order:
        return None  # Odd(C) misses C, and C = {} dominates nothing
    if method == "exact" or (method == "auto" and g.order <= 16):
        cert = kappa(g, force=True)
        return cert if cert.value >= t else None
    w = _bounded.bounded_search(g, g.order - t, "coverage", max_nodes=max_nodes)
    return None if w is None else WodCertificate.of(g, w)
