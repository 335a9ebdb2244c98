"""Finitely generated abelian grading groups Z^r x Z_{n1} x ... x Z_{nk}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GroupMismatchError, InfiniteGroupError


@dataclass(frozen=True)
class GradingGroup:
    """Z^free_rank x Z_{torsion[0]} x ... ; generators are the unit vectors."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(n < 2 for n in self.torsion):
            raise ValueError("torsion moduli must be >= 2")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteGroupError("infinite group has no order")
        out = 1
        for n in self.torsion:
            out *= n
        return out

    def _reduce(self, coords) -> tuple[int, ...]:
        coords = tuple(coords)
        if len(coords) != self.ngens:
            raise ValueError(
                f"expected {self.ngens} coordinates, got {len(coords)}")
        r = self.free_rank
        return coords[:r] + tuple(
            c % n for c, n in zip(coords[r:], self.torsion))

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, self._reduce(coords))

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def generator(self, i: int) -> "GroupElement":
        if not 0 <= i < self.ngens:
            raise ValueError(f"generator index {i} out of range")
        return self.element(tuple(int(j == i) for j in range(self.ngens)))

    def generators(self) -> list["GroupElement"]:
        return [self.generator(i) for i in range(self.ngens)]

    def elements(self) -> list["GroupElement"]:
        """All elements in lexicographic coordinate order; finite groups only."""
        if not self.is_finite:
            raise InfiniteGroupError("enumeration requires finite group")
        return [GroupElement(self, coords)
                for coords in itertools.product(*(range(n) for n in self.torsion))]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{n}" for n in self.torsion]
        return " x ".join(parts) if parts else "trivial"


@dataclass(frozen=True)
class GroupElement:
    """Element of a GradingGroup; torsion coordinates stored reduced."""

    group: GradingGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group._reduce(self.coords))

    def _check(self, other: "GroupElement"):
        if self.group != other.group:
            raise GroupMismatchError(
                f"elements of {self.group} and {other.group} cannot be combined")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-c for c in self.coords))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement(self.group, tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def is_identity(self) -> bool:
        return all(c == 0 for c in self.coords)

    def reduce_mod(self, n: int) -> "GroupElement":
        """Image under the componentwise surjection Z^N -> Z_n^N."""
        if self.group.torsion:
            raise ValueError("reduction applies to free groups only")
        if n < 2:
            raise ValueError("reduction modulus must be >= 2")
        target = GradingGroup(0, (n,) * self.group.free_rank)
        return target.element(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"
