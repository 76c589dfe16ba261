"""Exact arithmetic in free products of Z/2 and in the infinite dihedral group.

Two presentations of the same group are supported. Words in the free product
``Z2 * ... * Z2`` use letters ``a, b, c, ...`` (each an involution).  The
infinite dihedral group ``D = <x, y | yxy = x, x^2 = 1>`` uses the closed
normal form ``y^k x^e``.  From ``yxy = x`` and ``x^2 = 1`` one gets
``x y x = y^-1``, hence ``x y^m = y^-m x``, which gives

    (y^k x^e)(y^m x^f) = y^(k + (-1)^e m) x^(e + f).

A ``mod`` of ``m > 0`` turns the same normal form into the finite dihedral
group of order ``2m`` (extra relation ``y^m = 1``).
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from typing import Callable, Iterator, Union

LETTERS = string.ascii_lowercase

_TOKEN = re.compile(r"([a-z])(?:\^(-?\d+))?")


class ParseError(ValueError):
    pass


def _tokens(text: str) -> list[tuple[str, int]]:
    text = text.strip()
    if text in ("", "1", "e"):
        return []
    compact = re.sub(r"\s+", "", text)
    pos = 0
    out = []
    for match in _TOKEN.finditer(compact):
        if match.start() != pos:
            raise ParseError(f"cannot parse word {text!r}")
        out.append((match.group(1), int(match.group(2) or 1)))
        pos = match.end()
    if pos != len(compact):
        raise ParseError(f"cannot parse word {text!r}")
    return out


# --------------------------------------------------------------------------
# Free product of copies of Z/2
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True, slots=True)
class FreeWord:
    """Reduced word in ``Z2 * ... * Z2``; letters are generator indices >= 1."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for i in range(len(self.letters) - 1):
            if self.letters[i] == self.letters[i + 1]:
                raise ValueError(f"word {self.letters} is not reduced")

    @staticmethod
    def reduce(letters) -> FreeWord:
        stack: list[int] = []
        for letter in letters:
            if stack and stack[-1] == letter:
                stack.pop()
            else:
                stack.append(letter)
        return FreeWord(tuple(stack))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        left = list(self.letters)
        right = other.letters
        j = 0
        while left and j < len(right) and left[-1] == right[j]:
            left.pop()
            j += 1
        return FreeWord(tuple(left) + right[j:])

    def inverse(self) -> FreeWord:
        return FreeWord(self.letters[::-1])

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def identity(self) -> FreeWord:
        return FreeWord()

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(LETTERS[i - 1] for i in self.letters)


@dataclass(frozen=True)
class FreeProduct:
    """The group ``pi_g``: free product of ``g`` copies of Z/2."""

    g: int

    def __post_init__(self) -> None:
        if self.g < 1 or self.g > len(LETTERS):
            raise ValueError(f"number of factors must be in 1..{len(LETTERS)}")

    @property
    def identity(self) -> FreeWord:
        return FreeWord()

    @property
    def generators(self) -> list[FreeWord]:
        return [FreeWord((i,)) for i in range(1, self.g + 1)]

    def word(self, *letters: int) -> FreeWord:
        for letter in letters:
            if not 1 <= letter <= self.g:
                raise ValueError(f"letter {letter} outside 1..{self.g}")
        return FreeWord.reduce(letters)

    def parse(self, text: str) -> FreeWord:
        letters: list[int] = []
        for name, power in _tokens(text):
            index = LETTERS.index(name) + 1
            if index > self.g:
                raise ParseError(f"generator {name!r} not in a group with {self.g} factors")
            letters.extend([index] * (power % 2))
        return FreeWord.reduce(letters)


# --------------------------------------------------------------------------
# Dihedral groups
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True, slots=True)
class Dihedral:
    """``y^k x^e``; ``mod == 0`` is the infinite group, else ``y^mod = 1``."""

    k: int
    e: int
    mod: int = 0

    def __post_init__(self) -> None:
        if self.e not in (0, 1):
            raise ValueError("x exponent must be 0 or 1")
        if self.mod < 0:
            raise ValueError("modulus must be >= 0")
        if self.mod and not 0 <= self.k < self.mod:
            object.__setattr__(self, "k", self.k % self.mod)

    def __mul__(self, other: Dihedral) -> Dihedral:
        if not isinstance(other, Dihedral):
            return NotImplemented
        if other.mod != self.mod:
            raise ValueError("cannot multiply elements of different dihedral groups")
        k = self.k - other.k if self.e else self.k + other.k
        return Dihedral(k, self.e ^ other.e, self.mod)

    def inverse(self) -> Dihedral:
        # reflections y^k x are involutions
        if self.e:
            return self
        return Dihedral(-self.k, 0, self.mod)

    @property
    def is_identity(self) -> bool:
        return self.k == 0 and self.e == 0

    @property
    def identity(self) -> Dihedral:
        return Dihedral(0, 0, self.mod)

    def __str__(self) -> str:
        parts = []
        if self.k == 1:
            parts.append("y")
        elif self.k:
            parts.append(f"y^{self.k}")
        if self.e:
            parts.append("x")
        if not parts:
            return "1"
        return " ".join(parts) if "^" in parts[0] else "".join(parts)


@dataclass(frozen=True)
class DihedralGroup:
    """``D`` when ``mod == 0``; otherwise the dihedral group of order ``2*mod``."""

    mod: int = 0

    @property
    def identity(self) -> Dihedral:
        return Dihedral(0, 0, self.mod)

    @property
    def x(self) -> Dihedral:
        return Dihedral(0, 1, self.mod)

    @property
    def y(self) -> Dihedral:
        return Dihedral(1, 0, self.mod)

    @property
    def generators(self) -> list[Dihedral]:
        return [self.x, self.y]

    @property
    def order(self) -> int | None:
        return 2 * self.mod if self.mod else None

    def elements(self) -> list[Dihedral]:
        if not self.mod:
            raise ValueError("the infinite dihedral group cannot be enumerated")
        return sorted(Dihedral(k, e, self.mod) for k in range(self.mod) for e in (0, 1))

    def parse(self, text: str) -> Dihedral:
        result = self.identity
        for name, power in _tokens(text):
            if name == "x":
                factor = Dihedral(0, power % 2, self.mod)
            elif name == "y":
                factor = Dihedral(power, 0, self.mod)
            else:
                raise ParseError(f"unknown dihedral generator {name!r}")
            result = result * factor
        return result


INFINITE_DIHEDRAL = DihedralGroup()


# --------------------------------------------------------------------------
# Cyclic groups of order two (targets Y = <y> and Z = <z>)
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True, slots=True)
class CyclicTwo:
    symbol: str
    bit: int

    def __mul__(self, other: CyclicTwo) -> CyclicTwo:
        if not isinstance(other, CyclicTwo):
            return NotImplemented
        if other.symbol != self.symbol:
            raise ValueError(f"cannot multiply <{self.symbol}> by <{other.symbol}>")
        return CyclicTwo(self.symbol, self.bit ^ other.bit)

    def inverse(self) -> CyclicTwo:
        return self

    @property
    def is_identity(self) -> bool:
        return not self.bit

    @property
    def identity(self) -> CyclicTwo:
        return CyclicTwo(self.symbol, 0)

    def __str__(self) -> str:
        return self.symbol if self.bit else "1"


@dataclass(frozen=True)
class CyclicTwoGroup:
    symbol: str

    @property
    def identity(self) -> CyclicTwo:
        return CyclicTwo(self.symbol, 0)

    @property
    def generator(self) -> CyclicTwo:
        return CyclicTwo(self.symbol, 1)

    @property
    def generators(self) -> list[CyclicTwo]:
        return [self.generator]

    def elements(self) -> list[CyclicTwo]:
        return [self.identity, self.generator]

    def parse(self, text: str) -> CyclicTwo:
        bit = 0
        for name, power in _tokens(text):
            if name != self.symbol:
                raise ParseError(f"unknown generator {name!r} for <{self.symbol}>")
            bit ^= power % 2
        return CyclicTwo(self.symbol, bit)


Y_GROUP = CyclicTwoGroup("y")
Z_GROUP = CyclicTwoGroup("z")


# --------------------------------------------------------------------------
# Products pi x pi
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True, slots=True)
class Pair:
    left: "Element"
    right: "Element"

    def __mul__(self, other: Pair) -> Pair:
        if not isinstance(other, Pair):
            return NotImplemented
        return Pair(self.left * other.left, self.right * other.right)

    def inverse(self) -> Pair:
        return Pair(self.left.inverse(), self.right.inverse())

    @property
    def is_identity(self) -> bool:
        return self.left.is_identity and self.right.is_identity

    @property
    def identity(self) -> Pair:
        return Pair(self.left.identity, self.right.identity)

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


Element = Union[FreeWord, Dihedral, CyclicTwo, Pair]
Homomorphism = Callable[[Element], Element]


def parse_pair(text: str, group) -> Pair:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")) or text.count(",") != 1:
        raise ParseError(f"pair must look like '(g,h)', got {text!r}")
    left, right = text[1:-1].split(",")
    return Pair(group.parse(left), group.parse(right))


# --------------------------------------------------------------------------
# Homomorphisms
# --------------------------------------------------------------------------


def iso_to_dihedral(u: FreeWord) -> Dihedral:
    """``Z2 * Z2 -> D`` with ``a -> x`` and ``b -> yx``."""
    images = {1: Dihedral(0, 1), 2: Dihedral(1, 1)}
    result = Dihedral(0, 0)
    for letter in u.letters:
        try:
            result = result * images[letter]
        except KeyError:
            raise ValueError("iso_to_dihedral needs a word over two letters") from None
    return result


def dihedral_to_free(u: Dihedral) -> FreeWord:
    """Inverse of :func:`iso_to_dihedral` (``x -> a``, ``y -> ba``)."""
    if u.mod:
        raise ValueError("only the infinite dihedral group is isomorphic to Z2 * Z2")
    # y^k = (ba)^k for k >= 0 and (ab)^|k| for k < 0
    unit = (2, 1) if u.k >= 0 else (1, 2)
    letters = list(unit * abs(u.k))
    if u.e:
        letters.append(1)
    return FreeWord.reduce(letters)


def project_last_generator(u: FreeWord, g: int) -> FreeWord:
    """``pi_g -> pi_{g-1}`` killing the last Z/2 factor."""
    if g < 2:
        raise ValueError("projection needs g >= 2")
    return FreeWord.reduce(letter for letter in u.letters if letter != g)


def project_to_y(u: Dihedral) -> CyclicTwo:
    """``D -> Y``, ``x -> 1``, ``y -> y``."""
    return CyclicTwo("y", u.k % 2)


def project_to_z(u: Dihedral) -> CyclicTwo:
    """``D -> Z``, ``x -> z``, ``y -> z`` (so ``yx -> 1``)."""
    return CyclicTwo("z", (u.k + u.e) % 2)


def to_quotient(m: int) -> Callable[[Dihedral], Dihedral]:
    """``D -> D_m`` adding the relation ``y^m = 1``."""
    if m < 1:
        raise ValueError("quotient modulus must be >= 1")

    def reduce(u: Dihedral) -> Dihedral:
        return Dihedral(u.k, u.e, m)

    return reduce


def pair_map(h: Homomorphism, h_right: Homomorphism | None = None) -> Callable[[Pair], Pair]:
    h_right = h_right or h
    return lambda p: Pair(h(p.left), h_right(p.right))


def identity_map(u: Element) -> Element:
    return u


def power(u: Element, n: int) -> Element:
    result = u.identity
    base = u if n >= 0 else u.inverse()
    for _ in range(abs(n)):
        result = result * base
    return result


def words_up_to(g: int, length: int) -> Iterator[FreeWord]:
    """All reduced words of ``pi_g`` of length at most ``length``."""
    frontier = [FreeWord()]
    yield FreeWord()
    for _ in range(length):
        nxt = []
        for w in frontier:
            for letter in range(1, g + 1):
                if not w.letters or w.letters[-1] != letter:
                    word = FreeWord(w.letters + (letter,))
                    nxt.append(word)
                    yield word
        frontier = nxt
