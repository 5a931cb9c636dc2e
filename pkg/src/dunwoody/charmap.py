"""Finitely supported maps Z -> Z/2, written multiplicatively with values in {1, -1}.

A map is stored by its support, the points sent to -1. Pointwise product is
symmetric difference of supports; H acts by ``(h.v)(j) = v(h^-1(j))``, which
moves the support forward along ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .perm import ShiftedPermutation


@dataclass(frozen=True, slots=True)
class VMap:
    support: frozenset[int] = frozenset()

    @classmethod
    def of(cls, points: Iterable[int]) -> "VMap":
        return cls(frozenset(points))

    def __call__(self, j: int) -> int:
        return -1 if j in self.support else 1

    def __mul__(self, other: "VMap") -> "VMap":
        return vmul(self, other)

    def is_trivial(self) -> bool:
        return not self.support

    def __str__(self) -> str:
        return format_vmap(self)

    def __repr__(self) -> str:
        return f"VMap({format_vmap(self)!r})"


TRIVIAL = VMap()


def vmul(a: VMap, b: VMap) -> VMap:
    return VMap(a.support ^ b.support)


def conj(h: ShiftedPermutation, v: VMap) -> VMap:
    if h.is_identity():
        return v
    return VMap(frozenset(h(j) for j in v.support))


def z(i: int) -> VMap:
    return VMap(frozenset(range(-i, i + 1)))


def in_V_i(v: VMap, i: int) -> bool:
    return not v.support or (min(v.support) >= -i and max(v.support) <= i)


def format_vmap(v: VMap) -> str:
    return "v{" + ",".join(map(str, sorted(v.support))) + "}"
