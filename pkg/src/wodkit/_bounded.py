"""Size-bounded witness search for the threshold questions.

Both threshold questions ask for a set ``C`` whose "cost set" ``T(C)`` is
small:

* ``closure`` mode: ``T(C) = C | Odd(C)`` and ``|C|`` must be odd
  (``kappa'(G) <= budget``);
* ``coverage`` mode: ``T(C) = C | Even(C) = V - Odd(C)``
  (``kappa(G) >= n - budget``).

The search keeps a partial ``C`` and a set of *accepted* vertices that are
promised to end up in ``T``.  A vertex that is currently in ``T - C`` and not
yet accepted either stays in ``T`` (accept it) or leaves ``T``, which needs
some neighbour of it to join ``C``.  Every branch grows ``C | accepted`` or
``C`` and both are bounded by the budget, so the tree has depth at most
``2 * budget``.  Only one vertex per twin class is ever put in ``C``: two
twins in ``C`` can be dropped together without growing ``T`` or changing
``|C| mod 2``, and a lone twin can be swapped for its class representative.
"""

from __future__ import annotations

from .errors import BudgetExceeded
from .graph import Graph, twin_classes


def representatives(g: Graph) -> int:
    mask = 0
    for cls in twin_classes(g):
        mask |= 1 << cls[0]
    return mask


def bounded_search(
    g: Graph,
    budget: int,
    mode: str,
    max_nodes: int | None = None,
) -> int | None:
    """Return a witness mask ``C`` with ``|T(C)| <= budget``, or ``None``."""
    if mode not in ("closure", "coverage"):
        raise ValueError(f"unknown mode {mode!r}")
    rows = g.rows
    full = g.full_mask
    cand = representatives(g)
    need_odd = mode == "closure"
    seen: set[tuple[int, int]] = set()
    nodes = 0

    def cost_set(c: int, p: int) -> int:
        if need_odd:
            return c | (p & ~c)
        return full & ~(p & ~c)

    def rec(c: int, p: int, acc: int) -> int | None:
        nonlocal nodes
        key = (c, acc)
        if key in seen:
            return None
        seen.add(key)
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded(f"bounded search exceeded {max_nodes} nodes")

        t = cost_set(c, p)
        parity_ok = not need_odd or c.bit_count() & 1
        if parity_ok and t.bit_count() <= budget:
            return c
        used = (c | acc).bit_count()
        pending = t & ~c & ~acc
        if pending:
            best_w, best_fix, best_n = -1, 0, None
            rest = pending
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                fix = rows[w] & cand & ~c
                k = fix.bit_count()
                if best_n is None or k < best_n:
                    best_w, best_fix, best_n = w, fix, k
                    if k == 0:
                        break
                rest ^= low
            if used + 1 <= budget:
                found = rec(c, p, acc | 1 << best_w)
                if found is not None:
                    return found
            branches = best_fix
        else:
            # T(C) already fits; only the parity of |C| is wrong
            branches = cand & ~c
        while branches:
            low = branches & -branches
            z = low.bit_length() - 1
            branches ^= low
            if (c | acc | low).bit_count() > budget:
                continue
            found = rec(c | low, p ^ rows[z], acc)
            if found is not None:
                return found
        return None

    if budget < 0:
        return None
    return rec(0, 0, 0)
