"""Symbolic motion planner for a finite cell complex.

Domains are ``F_i = union over k + l = i of V^k x V^l`` where ``V^k`` is the
union of open k-cells.  On ``V^k x V^l`` the rule contracts to a chosen
point ``v_k``, follows a fixed path ``gamma_{k,l}`` and expands from ``v_l``.
Everything here is an identifier; no geometry is computed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path


class DescriptionError(ValueError):
    pass


@dataclass(frozen=True)
class CellComplexDescription:
    dimension: int
    cells: tuple[int, ...]
    points: tuple[str, ...] = ()
    paths: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self) -> None:
        n = self.dimension
        if n < 0:
            raise DescriptionError("dimension must be nonnegative")
        if len(self.cells) != n + 1:
            raise DescriptionError(f"need cell counts for dimensions 0..{n}, got {len(self.cells)}")
        if any(c < 1 for c in self.cells):
            raise DescriptionError("every dimension 0..n needs at least one cell")
        if not self.points:
            object.__setattr__(self, "points", tuple(f"v{k}" for k in range(n + 1)))
        if len(self.points) != n + 1:
            raise DescriptionError("need one chosen point per dimension")
        paths = {}
        for k in range(n + 1):
            for l in range(n + 1):
                paths[(k, l)] = self.paths.get((k, l), f"gamma_{k}_{l}")
        extra = set(self.paths) - set(paths)
        if extra:
            raise DescriptionError(f"path table has indices outside 0..{n}: {sorted(extra)}")
        object.__setattr__(self, "paths", paths)

    @classmethod
    def from_dict(cls, data: dict) -> CellComplexDescription:
        try:
            cells = tuple(int(c) for c in data["cells"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DescriptionError(f"bad or missing 'cells': {exc}") from None
        dimension = int(data.get("dimension", len(cells) - 1))
        paths = {}
        for key, label in (data.get("paths") or {}).items():
            try:
                k, l = (int(s) for s in str(key).split(","))
            except ValueError:
                raise DescriptionError(f"path key {key!r} must look like 'k,l'") from None
            paths[(k, l)] = str(label)
        return cls(
            dimension=dimension,
            cells=cells,
            points=tuple(data.get("points") or ()),
            paths=paths,
            name=str(data.get("name", "")),
        )

    @classmethod
    def load(cls, path: str | Path) -> CellComplexDescription:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DescriptionError(f"{path}: {exc}") from None
        if not isinstance(data, dict):
            raise DescriptionError(f"{path}: expected a JSON object")
        return cls.from_dict(data)


def projective_sum_preset(n: int, g: int) -> CellComplexDescription:
    """One 0-cell, ``g`` cells in each dimension ``1..n-1``, one n-cell.

    This is one natural CW structure on the connected sum of ``g`` copies of
    ``RP^n``; any other choice with cells in every dimension gives the same
    planner shape.
    """
    if n < 1 or g < 1:
        raise DescriptionError("preset needs n >= 1 and g >= 1")
    cells = (1,) + (g,) * (n - 1) + (1,)
    return CellComplexDescription(n, cells, name=f"P^{n}_{g}")


@dataclass(frozen=True)
class Rule:
    contract_to: str
    path: str
    expand_from: str

    @property
    def segments(self) -> tuple[str, str, str]:
        return (f"contract:{self.contract_to}", f"path:{self.path}", f"expand:{self.expand_from}")


@dataclass(frozen=True)
class Block:
    k: int
    l: int
    rule: Rule


@dataclass(frozen=True)
class Domain:
    index: int
    blocks: tuple[Block, ...]


@dataclass(frozen=True)
class PlannerTable:
    complex: CellComplexDescription
    domains: tuple[Domain, ...]

    @property
    def size(self) -> int:
        return len(self.domains)

    def index_pairs(self) -> list[tuple[int, int]]:
        return [(b.k, b.l) for d in self.domains for b in d.blocks]

    def to_dict(self) -> dict:
        return {
            "complex": self.complex.name,
            "dimension": self.complex.dimension,
            "cells": list(self.complex.cells),
            "domains": [
                {
                    "index": d.index,
                    "blocks": [
                        {"k": b.k, "l": b.l, "rule": list(b.rule.segments)} for b in d.blocks
                    ],
                }
                for d in self.domains
            ],
        }

    def to_text(self) -> str:
        lines = [f"motion planner for {self.complex.name or 'complex'}: {self.size} domains"]
        for d in self.domains:
            blocks = ", ".join(f"V^{b.k} x V^{b.l}" for b in d.blocks)
            lines.append(f"  F_{d.index} = {blocks}")
            for b in d.blocks:
                lines.append(f"    ({b.k},{b.l}): " + " -> ".join(b.rule.segments))
        return "\n".join(lines)


def synthesize(cx: CellComplexDescription) -> PlannerTable:
    n = cx.dimension
    domains = []
    for i in range(2 * n + 1):
        blocks = tuple(
            Block(k, i - k, Rule(cx.points[k], cx.paths[(k, i - k)], cx.points[i - k]))
            for k in range(max(0, i - n), min(i, n) + 1)
        )
        domains.append(Domain(i, blocks))
    return PlannerTable(cx, tuple(domains))


@dataclass(frozen=True)
class TCBracket:
    n: int
    g: int
    supported: bool
    lower: int | None = None
    upper: int | None = None
    reason: str = ""

    @property
    def optimal(self) -> bool:
        return self.supported and self.lower is not None and self.lower == self.upper

    def to_dict(self) -> dict:
        return asdict(self) | {"optimal": self.optimal}


def tc_bracket(n: int, g: int, lower_bound_verified=None) -> TCBracket:
    """Upper bound from the planner, lower bound from the certificate.

    ``lower_bound_verified(n, g)`` defaults to running the certificate
    pipeline (the g = 2 certificate plus each genus-reduction step).
    """
    if n < 3 or g < 2:
        return TCBracket(n, g, False, reason="outside n >= 3, g >= 2")
    upper = synthesize(projective_sum_preset(n, g)).size - 1
    if lower_bound_verified is None:
        from .certificate import lower_bound_verified
    lower = 2 * n if lower_bound_verified(n, g) else None
    return TCBracket(n, g, True, lower=lower, upper=upper)
