"""Normalized bar complex with trivial F2 coefficients.

A chain of degree ``m`` is an F2 combination of bar tuples ``[g1|...|gm]``
with every entry different from the identity.  Passing from the bar
resolution to ``B(pi) (x)_pi Z2`` forgets the left action, so the first face
of the boundary is simply ``[g2|...|gm]``; signs disappear over F2.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .groups import Dihedral, Element, FreeWord, Homomorphism, Pair, ParseError, parse_pair
from .ring import xor_support

BarTuple = tuple


def _normalized(tuples: Iterable[BarTuple]) -> Iterable[BarTuple]:
    for t in tuples:
        if not any(g.is_identity for g in t):
            yield t


@dataclass(frozen=True)
class BarChain:
    degree: int
    terms: frozenset = frozenset()

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        for t in self.terms:
            if len(t) != self.degree:
                raise ValueError(f"tuple {t} has length {len(t)}, expected {self.degree}")
            if any(g.is_identity for g in t):
                raise ValueError(f"degenerate tuple {t} stored in a normalized chain")

    @classmethod
    def from_tuples(cls, degree: int, tuples: Iterable[BarTuple]) -> BarChain:
        """Build a chain, dropping degenerate tuples and cancelling pairs."""
        return cls(degree, xor_support(_normalized(tuple(t) for t in tuples)))

    @classmethod
    def unit(cls) -> BarChain:
        """The degree-0 generator ``[]``."""
        return cls(0, frozenset({()}))

    @classmethod
    def parse(cls, text: str, group, pairs: bool = False, degree: int | None = None) -> BarChain:
        """Parse ``"[x|x] + [yx|x]"``; with ``pairs`` entries look like ``(x,1)``."""
        text = text.strip()
        if text in ("", "0"):
            if degree is None:
                raise ParseError("degree of the zero chain must be given")
            return cls(degree)
        tuples = []
        for body in re.findall(r"\[([^\]]*)\]", text):
            if re.sub(r"\[[^\]]*\]|\+|\s", "", text):
                raise ParseError(f"malformed chain {text!r}")
            entries = [] if not body.strip() else body.split("|")
            parse = (lambda s: parse_pair(s, group)) if pairs else group.parse
            tuples.append(tuple(parse(s) for s in entries))
        degrees = {len(t) for t in tuples}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) != 1:
            raise ParseError(f"mixed degrees in chain {text!r}")
        return cls.from_tuples(degrees.pop(), tuples)

    def __add__(self, other: BarChain) -> BarChain:
        if other.degree != self.degree:
            raise ValueError("cannot add chains of different degrees")
        return BarChain(self.degree, self.terms ^ other.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def map_entries(self, h: Homomorphism) -> BarChain:
        """Image under a group homomorphism applied entrywise."""
        return BarChain.from_tuples(self.degree, (tuple(h(g) for g in t) for t in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_tuple(t) for t in sorted(self.terms))


def format_tuple(t: BarTuple) -> str:
    return "[" + "|".join(str(g) for g in t) + "]"


def _faces(t: BarTuple) -> Iterable[BarTuple]:
    m = len(t)
    yield t[1:]
    for i in range(m - 1):
        yield t[:i] + (t[i] * t[i + 1],) + t[i + 2 :]
    yield t[:-1]


def boundary(c: BarChain) -> BarChain:
    if c.degree == 0:
        raise ValueError("boundary is not defined in degree 0")
    return BarChain.from_tuples(c.degree - 1, (f for t in c.terms for f in _faces(t)))


def boundary_or_zero(c: BarChain) -> BarChain:
    """Boundary with the augmented end cut off: degree-0 chains go to 0."""
    if c.degree == 0:
        return BarChain(0)
    return boundary(c)


# --------------------------------------------------------------------------
# Distinguished cycles
# --------------------------------------------------------------------------


def constant_cycle(g: Element, i: int) -> BarChain:
    """``[g|g|...|g]`` (``i`` entries); a cycle whenever ``g`` is an involution."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    return BarChain.from_tuples(i, [(g,) * i])


def alpha_cycle(i: int) -> BarChain:
    return constant_cycle(Dihedral(0, 1), i)


def beta_cycle(i: int) -> BarChain:
    return constant_cycle(Dihedral(1, 1), i)


def gamma_cycle(i: int) -> BarChain:
    """``alpha + beta``, representing the image of the top class in degree ``i``."""
    if i < 1:
        # in degree 0 the two classes coincide and the sum is meaningless
        raise ValueError("gamma_cycle is defined for i >= 1")
    return alpha_cycle(i) + beta_cycle(i)


def free_alpha_cycle(i: int) -> BarChain:
    return constant_cycle(FreeWord((1,)), i)


def free_beta_cycle(i: int) -> BarChain:
    return constant_cycle(FreeWord((2,)), i)


# --------------------------------------------------------------------------
# Eilenberg-Zilber and Alexander-Whitney
# --------------------------------------------------------------------------


def _identity_for(*chains: BarChain) -> Element | None:
    for c in chains:
        for t in c.terms:
            if t:
                return t[0].identity
    return None


def shuffle_tuples(g: BarTuple, h: BarTuple, one: Element) -> Iterable[BarTuple]:
    """All interleavings of ``(g_k, 1)`` and ``(1, h_k)``; left block positions chosen as subsets."""
    i, j = len(g), len(h)
    n = i + j
    left = [Pair(gk, one) for gk in g]
    right = [Pair(one, hk) for hk in h]
    for positions in combinations(range(n), i):
        chosen = set(positions)
        li = ri = 0
        word = []
        for k in range(n):
            if k in chosen:
                word.append(left[li])
                li += 1
            else:
                word.append(right[ri])
                ri += 1
        yield tuple(word)


def ez(c: BarChain, d: BarChain) -> BarChain:
    """Shuffle map ``B(pi) (x) B(pi) -> B(pi x pi)``, extended bilinearly."""
    degree = c.degree + d.degree
    one = _identity_for(c, d)
    if one is None:
        # no entries anywhere: zero chains, or both inputs are the degree-0 unit
        return BarChain.from_tuples(degree, [()] if degree == 0 and c and d else [])
    return BarChain.from_tuples(
        degree, (w for g in c.terms for h in d.terms for w in shuffle_tuples(g, h, one))
    )


@dataclass(frozen=True)
class BiChain:
    """F2 combination of pairs ``front (x) back`` of bar tuples."""

    terms: frozenset = frozenset()

    def __add__(self, other: BiChain) -> BiChain:
        return BiChain(self.terms ^ other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(len(f), len(b)) for f, b in self.terms}

    def boundary(self) -> BiChain:
        """``d (x) 1 + 1 (x) d``, with degree-0 parts sent to 0."""
        out = []
        for front, back in self.terms:
            if front:
                out.extend((f, back) for f in _faces(front))
            if back:
                out.extend((front, b) for b in _faces(back))
        return BiChain(
            xor_support(
                (f, b)
                for f, b in out
                if not any(g.is_identity for g in f) and not any(g.is_identity for g in b)
            )
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_tuple(f)}(x){format_tuple(b)}" for f, b in sorted(self.terms))


def aw(c: BarChain) -> BiChain:
    """Alexander-Whitney coproduct ``[g1..gm] -> sum_i [g1..gi] (x) [g(i+1)..gm]``."""
    return BiChain(xor_support((t[:i], t[i:]) for t in c.terms for i in range(len(t) + 1)))


def kunneth_project(b: BiChain, i: int, j: int) -> BiChain:
    return BiChain(frozenset((f, g) for f, g in b.terms if len(f) == i and len(g) == j))


def bichain_of(front: BarChain, back: BarChain) -> BiChain:
    """The pure tensor ``front (x) back``."""
    return BiChain(frozenset((f, b) for f in front.terms for b in back.terms))
