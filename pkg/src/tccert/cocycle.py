"""The canonical degree-1 cocycle and its powers.

For a bar tuple ``[(g1,h1)|...|(gn,hn)]`` over ``pi x pi`` the i-th factor of
the n-th power is

    (g1...g(i-1)) (ui - 1) (h(i-1)^-1 ... h1^-1),   ui = gi hi^-1.

Writing ``Pi = g1...gi hi^-1...h1^-1`` (``P0 = 1``) this factor is exactly
``Pi - P(i-1)``, so one left-to-right pass over the tuple produces all
factors.  The integral sign ``(-1)^(n(n-1)/2)`` is invisible over F2.
"""

from __future__ import annotations

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor

from .bar import BarChain, BarTuple
from .groups import Pair
from .ring import RingElement, xor_support
from .tensor import TensorElement, tensor_product


def nu(p: Pair) -> RingElement:
    """``(g, h) -> g h^-1 - 1``."""
    return RingElement.of(p.left * p.right.inverse(), p.left.identity)


def power_factors(t: BarTuple) -> list[frozenset] | None:
    """Basis coordinates of each factor of ``nu^n(t)``; None if some factor is 0."""
    if not t:
        return []
    one = t[0].left.identity
    left = right = one
    previous = one
    factors = []
    for p in t:
        left = left * p.left
        right = p.right.inverse() * right
        current = left * right
        if current == previous:
            return None
        factors.append(frozenset(u for u in (current, previous) if not u.is_identity))
        previous = current
    return factors


def nu_power_tuple(t: BarTuple) -> Iterable[tuple]:
    factors = power_factors(t)
    if factors is None:
        return ()
    return tensor_product(factors)


def _evaluate(tuples: list[BarTuple]) -> frozenset:
    return xor_support(b for t in tuples for b in nu_power_tuple(t))


def nu_power(n: int, c: BarChain, workers: int = 1) -> TensorElement:
    """Evaluate the n-th power cocycle on a degree-n chain over ``pi x pi``."""
    if c.degree != n:
        raise ValueError(f"chain has degree {c.degree}, cocycle has degree {n}")
    tuples = sorted(c.terms)
    if workers <= 1 or len(tuples) < 2 * workers:
        return TensorElement(n, _evaluate(tuples))
    chunks = [tuples[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_evaluate, chunks))
    merged: frozenset = frozenset()
    for part in parts:
        merged = merged ^ part
    return TensorElement(n, merged)
