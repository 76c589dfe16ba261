"""The mod-2 group ring and its augmentation ideal.

Elements are stored by their support: the set of group elements whose
coefficient is 1.  Addition is symmetric difference.  Only F2 coefficients
exist here, so signs in integral formulas (``1 - x`` versus ``x - 1``) are
irrelevant everywhere downstream.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

from .groups import Element, Homomorphism, ParseError


def xor_support(items: Iterable) -> frozenset:
    """Collect items with multiplicity mod 2."""
    out: set = set()
    for item in items:
        if item in out:
            out.remove(item)
        else:
            out.add(item)
    return frozenset(out)


@dataclass(frozen=True)
class RingElement:
    support: frozenset = frozenset()

    @classmethod
    def of(cls, *elements: Element) -> RingElement:
        return cls(xor_support(elements))

    @classmethod
    def zero(cls) -> RingElement:
        return cls()

    @classmethod
    def parse(cls, text: str, group) -> RingElement:
        """Parse ``"x + yx + 1"``; ``-`` is accepted and means ``+`` over F2."""
        text = text.strip()
        if text == "0" or not text:
            return cls()
        terms = re.split(r"(?<!\^)[+-]", text)
        if any(not t.strip() for t in terms):
            # leading sign as in "-x + 1"
            if terms[0].strip() or any(not t.strip() for t in terms[1:]):
                raise ParseError(f"malformed ring element {text!r}")
            terms = terms[1:]
        return cls(xor_support(group.parse(t) for t in terms))

    def __add__(self, other: RingElement) -> RingElement:
        return RingElement(self.support ^ other.support)

    __sub__ = __add__

    def __mul__(self, other) -> RingElement:
        if isinstance(other, RingElement):
            return RingElement(xor_support(g * h for g in self.support for h in other.support))
        return RingElement(frozenset(g * other for g in self.support))

    def __rmul__(self, other) -> RingElement:
        # left multiplication by a group element
        return RingElement(frozenset(other * g for g in self.support))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def augmentation(self) -> int:
        return len(self.support) % 2

    def biaction(self, a: Element, b: Element) -> RingElement:
        """``(a, b) . r = a r b^-1``."""
        b_inv = b.inverse()
        return RingElement(frozenset(a * g * b_inv for g in self.support))

    def map(self, h: Homomorphism) -> RingElement:
        return RingElement(xor_support(h(g) for g in self.support))

    def basis_coordinates(self) -> frozenset:
        """Coordinates in the basis ``{g - 1 : g != 1}`` of the augmentation ideal."""
        if self.augmentation():
            raise ValueError(f"{self} is not in the augmentation ideal")
        return frozenset(g for g in self.support if not g.is_identity)

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(str(g) for g in sorted(self.support))


def augmentation(r: RingElement) -> int:
    return r.augmentation()


def biaction(a: Element, r: RingElement, b: Element) -> RingElement:
    return r.biaction(a, b)


def ring_map(h: Homomorphism, r: RingElement) -> RingElement:
    return r.map(h)


def minus_one(g: Element) -> RingElement:
    """The augmentation-ideal element ``g - 1``."""
    return RingElement.of(g, g.identity)
