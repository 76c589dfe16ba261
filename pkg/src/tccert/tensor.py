"""Tensor powers of augmentation ideals and their coinvariants.

A basis tensor is a tuple ``(g1, ..., gm)`` of non-identity group elements
and stands for ``(g1 - 1) (x) ... (x) (gm - 1)``.  Since ``{g - 1 : g != 1}``
is an F2 basis of ``I(pi; Z2)``, equality of tensors is equality of supports.

Coinvariants are only ever computed for finite dihedral quotients ``D_m``:
a nonzero image there certifies a nonzero class upstairs.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product

from .gf2 import EchelonBasis
from .groups import Dihedral, DihedralGroup, Element, Homomorphism, Pair, to_quotient
from .ring import RingElement, xor_support

DEFAULT_DIMENSION_CAP = 10**6


@dataclass(frozen=True)
class TensorElement:
    arity: int
    terms: frozenset = frozenset()

    def __post_init__(self) -> None:
        for t in self.terms:
            if len(t) != self.arity:
                raise ValueError(f"basis tensor {t} does not have arity {self.arity}")
            if any(g.is_identity for g in t):
                raise ValueError(f"basis tensor {t} has an identity entry")

    @classmethod
    def from_tuples(cls, arity: int, tuples: Iterable[tuple]) -> TensorElement:
        return cls(arity, xor_support(t for t in tuples if not any(g.is_identity for g in t)))

    def __add__(self, other: TensorElement) -> TensorElement:
        if other.arity != self.arity:
            raise ValueError("cannot add tensors of different arity")
        return TensorElement(self.arity, self.terms ^ other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def __str__(self) -> str:
        return format_tensor(self)


def format_tensor(t: TensorElement) -> str:
    if not t.terms:
        return "0"
    return " + ".join(format_basis_tensor(b) for b in sorted(t.terms))


def format_basis_tensor(b: tuple) -> str:
    return "(x)".join(f"({g}-1)" for g in b)


def tensor_product(factors: Sequence[Iterable]) -> Iterable[tuple]:
    """Basis tuples of ``c1 (x) ... (x) cm`` given coordinate sets ``ci``."""
    return product(*factors)


def expand(factors: Sequence[RingElement]) -> TensorElement:
    """Pure tensor of augmentation-ideal elements, in the ``(g - 1)`` basis."""
    coords = [r.basis_coordinates() for r in factors]
    # coordinates within a factor are distinct, so the product has no repeats
    return TensorElement(len(factors), frozenset(tensor_product(coords)))


def map_factors(t: TensorElement, homs: Sequence[Homomorphism]) -> TensorElement:
    """Apply ``homs[i]`` to factor ``i``; ``(g - 1) -> (h(g) - 1)``, which dies if ``h(g) = 1``."""
    if len(homs) != t.arity:
        raise ValueError(f"need {t.arity} homomorphisms, got {len(homs)}")
    return TensorElement.from_tuples(
        t.arity, (tuple(h(g) for h, g in zip(homs, b)) for b in t.terms)
    )


def _acted_coordinates(a: Element, g: Element, b_inv: Element) -> frozenset:
    # a (g - 1) b^-1 = (a g b^-1 - 1) + (a b^-1 - 1)
    return xor_support(u for u in (a * g * b_inv, a * b_inv) if not u.is_identity)


def diagonal_action(p: Pair, t: TensorElement) -> TensorElement:
    a, b_inv = p.left, p.right.inverse()
    out = []
    for basis in t.terms:
        coords = [_acted_coordinates(a, g, b_inv) for g in basis]
        out.extend(tensor_product(coords))
    return TensorElement.from_tuples(t.arity, out)


def finite_quotient(m: int, t: TensorElement) -> TensorElement:
    """Image under ``D -> D_m`` in every factor."""
    q = to_quotient(m)
    return map_factors(t, [q] * t.arity)


# --------------------------------------------------------------------------
# I (x) wedge^3 I
# --------------------------------------------------------------------------


def sorted_wedge(entries: Sequence[Element]) -> tuple | None:
    """Sorted basis wedge, or None when an entry repeats."""
    ordered = tuple(sorted(entries))
    if len(set(ordered)) < len(ordered):
        return None
    return ordered


@dataclass(frozen=True)
class WedgeElement:
    """Combination of ``(u - 1) (x) (v1 - 1)^(v2 - 1)^(v3 - 1)`` with ``v1 < v2 < v3``."""

    terms: frozenset = frozenset()

    def __add__(self, other: WedgeElement) -> WedgeElement:
        return WedgeElement(self.terms ^ other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def map_first(self, h: Homomorphism) -> WedgeElement:
        return WedgeElement(
            xor_support((h(u), w) for u, w in self.terms if not h(u).is_identity)
        )

    def coefficient(self, u: Element) -> frozenset:
        """The ``wedge^3`` part multiplying ``(u - 1)``."""
        return frozenset(w for v, w in self.terms if v == u)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({u}-1)(x){format_wedge(w)}" for u, w in sorted(self.terms))


def format_wedge(w: tuple) -> str:
    return "^".join(f"({g}-1)" for g in w)


def wedge_project(t: TensorElement) -> WedgeElement:
    """``I^(x)4 -> I (x) wedge^3 I``: keep factor 1, antisymmetrize factors 2-4."""
    if t.arity != 4:
        raise ValueError("wedge projection needs arity 4")
    out = []
    for basis in t.terms:
        w = sorted_wedge(basis[1:])
        if w is not None:
            out.append((basis[0], w))
    return WedgeElement(xor_support(out))


def wedge3(*factors: RingElement) -> frozenset:
    """Expand ``r1 ^ r2 ^ r3`` into sorted basis wedges."""
    if len(factors) != 3:
        raise ValueError("wedge3 takes three factors")
    coords = [r.basis_coordinates() for r in factors]
    return xor_support(
        w for w in (sorted_wedge(c) for c in tensor_product(coords)) if w is not None
    )


def s_element() -> frozenset:
    """``(x - 1) ^ (yx - 1) ^ (y - y^-1)`` in ``wedge^3 I(D; Z2)``."""
    D = DihedralGroup()
    x, y, yx = D.x, D.y, D.parse("yx")
    return wedge3(
        RingElement.of(x, D.identity),
        RingElement.of(yx, D.identity),
        RingElement.of(y, y.inverse()),
    )


def s_element_nonzero() -> tuple[bool, frozenset]:
    s = s_element()
    return bool(s), s


# --------------------------------------------------------------------------
# Coinvariants over finite dihedral quotients
# --------------------------------------------------------------------------


def standard_generators(m: int) -> list[Pair]:
    """``(x,1), (y,1), (1,x), (1,y)``: generators of ``D_m x D_m``."""
    D = DihedralGroup(m)
    one = D.identity
    return [Pair(D.x, one), Pair(D.y, one), Pair(one, D.x), Pair(one, D.y)]


@dataclass(frozen=True)
class CoinvariantClass:
    m: int
    arity: int
    residue: frozenset
    coinvariant_dimension: int

    @property
    def is_zero(self) -> bool:
        return not self.residue

    def __str__(self) -> str:
        return format_tensor(TensorElement(self.arity, self.residue))


class DimensionCapExceeded(RuntimeError):
    pass


@dataclass
class CoinvariantSpace:
    """Relation space ``span{b + p.b}`` inside ``I(D_m; Z2)^(x)arity``."""

    m: int
    arity: int
    generators: tuple = ()
    cap: int = DEFAULT_DIMENSION_CAP
    basis: list = field(init=False)
    index: dict = field(init=False)
    relations: EchelonBasis = field(init=False)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("quotient modulus must be >= 1")
        size = (2 * self.m - 1) ** self.arity
        if size > self.cap:
            raise DimensionCapExceeded(
                f"I(D_{self.m})^(x){self.arity} has dimension {size} > cap {self.cap}"
            )
        if not self.generators:
            self.generators = tuple(standard_generators(self.m))
        nontrivial = [g for g in DihedralGroup(self.m).elements() if not g.is_identity]
        # lexicographic order on (k mod m, e) fixes the pivot order
        self.basis = list(product(nontrivial, repeat=self.arity))
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.relations = EchelonBasis()
        for p in self.generators:
            for b in self.basis:
                moved = diagonal_action(p, TensorElement(self.arity, frozenset({b})))
                self.relations.insert(self.vector(moved) ^ (1 << self.index[b]))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def coinvariant_dimension(self) -> int:
        return len(self.basis) - len(self.relations)

    def vector(self, t: TensorElement) -> int:
        v = 0
        for b in t.terms:
            v ^= 1 << self.index[b]
        return v

    def reduce(self, t: TensorElement) -> CoinvariantClass:
        if t.arity != self.arity:
            raise ValueError("arity mismatch")
        v = self.relations.reduce(self.vector(t))
        residue = frozenset(self.basis[i] for i in range(v.bit_length()) if (v >> i) & 1)
        return CoinvariantClass(self.m, self.arity, residue, self.coinvariant_dimension)


    def dual_witness(self, t: TensorElement) -> frozenset | None:
        """Support of a functional vanishing on all relations with value 1 on ``t``.

        Reading off one non-pivot coordinate of the reduced form is such a
        functional; None when ``t`` reduces to zero.
        """
        residue = self.relations.reduce(self.vector(t))
        if not residue:
            return None
        column = (residue & -residue).bit_length() - 1
        support = [self.basis[column]]
        for i in self.relations.pivots:
            if (self.relations.reduce(1 << i) >> column) & 1:
                support.append(self.basis[i])
        return frozenset(support)


def pairing(functional: frozenset, t: TensorElement) -> int:
    return len(functional & t.terms) % 2


def verify_witness(
    functional: frozenset, t: TensorElement, m: int, generators: Sequence[Pair] | None = None
) -> bool:
    """Check a dual witness directly: zero on every ``b + p.b``, one on ``t``.

    Uses only the group action, never the elimination, so it double-checks
    a nonzero residue.
    """
    if not all(_is_quotient_element(g, m) for b in t.terms for g in b):
        t = finite_quotient(m, t)
    if pairing(functional, t) != 1:
        return False
    gens = list(generators or standard_generators(m))
    nontrivial = [g for g in DihedralGroup(m).elements() if not g.is_identity]
    for b in product(nontrivial, repeat=t.arity):
        single = TensorElement(t.arity, frozenset({b}))
        for p in gens:
            if pairing(functional, single + diagonal_action(p, single)):
                return False
    return True


@functools.lru_cache(maxsize=32)
def coinvariant_space(
    m: int, arity: int, generators: tuple = (), cap: int = DEFAULT_DIMENSION_CAP
) -> CoinvariantSpace:
    return CoinvariantSpace(m, arity, generators, cap)


def _is_quotient_element(g: Element, m: int) -> bool:
    return isinstance(g, Dihedral) and g.mod == m


def coinvariant_reduce(
    t: TensorElement,
    m: int,
    generators: Sequence[Pair] | None = None,
    cap: int = DEFAULT_DIMENSION_CAP,
) -> CoinvariantClass:
    """Canonical residue of ``t`` (over ``D`` or ``D_m``) in the ``D_m x D_m`` coinvariants."""
    if not all(_is_quotient_element(g, m) for b in t.terms for g in b):
        t = finite_quotient(m, t)
    space = coinvariant_space(m, t.arity, tuple(generators or ()), cap)
    return space.reduce(t)
