"""The finite factors G_i = V_i x| H_i and their edge subgroups K_i = <z_i> x H_i.

Elements carry an explicit level. Although V_i and H_i sit inside V_{i+1} and
H_{i+1} as sets, elements of different levels never multiply: G_i and G_{i+1}
are distinct factors of the amalgam, glued only along K_i via ``transfer_K``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from . import charmap, perm
from .charmap import VMap
from .errors import DomainError, EnumerationTooLarge, LevelMismatch
from .perm import ShiftedPermutation

DEFAULT_G_ENUM_CAP = 2
DEFAULT_K_ENUM_CAP = 3


@dataclass(frozen=True, slots=True)
class GElement:
    level: int
    v: VMap = charmap.TRIVIAL
    h: ShiftedPermutation = perm.IDENTITY

    def __post_init__(self):
        if self.level < 1:
            raise DomainError(f"level must be positive, got {self.level}")
        if not charmap.in_V_i(self.v, self.level):
            raise DomainError(f"{self.v} is not in V_{self.level}")
        if not perm.in_H_i(self.h, self.level):
            raise DomainError(f"{self.h} is not in H_{self.level}")

    def __mul__(self, other: "GElement") -> "GElement":
        return gmul(self, other)

    def __invert__(self) -> "GElement":
        return ginv(self)

    def is_identity(self) -> bool:
        return self.v.is_trivial() and self.h.is_identity()

    def __str__(self) -> str:
        return format_gelement(self)

    def __repr__(self) -> str:
        return f"GElement({format_gelement(self)!r})"


def identity(level: int) -> GElement:
    return GElement(level)


def gmul(a: GElement, b: GElement) -> GElement:
    """(v0 h0)(v1 h1) = (v0 . h0(v1)) (h0 h1)."""
    if a.level != b.level:
        raise LevelMismatch()
    return GElement(
        a.level,
        charmap.vmul(a.v, charmap.conj(a.h, b.v)),
        perm.compose(a.h, b.h),
    )


def ginv(a: GElement) -> GElement:
    hinv = perm.inverse(a.h)
    return GElement(a.level, charmap.conj(hinv, a.v), hinv)


def in_K(a: GElement, i: int) -> bool:
    if a.level not in (i, i + 1):
        raise DomainError("K_i not a designated subgroup of this factor")
    return (a.v.is_trivial() or a.v == charmap.z(i)) and perm.in_H_i(a.h, i)


def transfer_K(a: GElement, i: int, target_level: int) -> GElement:
    if target_level not in (i, i + 1) or not in_K(a, i):
        raise DomainError("not in K_i")
    if a.level == target_level:
        return a
    return GElement(target_level, a.v, a.h)


def _iter_G(i: int) -> Iterator[GElement]:
    window = range(-i, i + 1)
    vmaps = [
        VMap(frozenset(c))
        for r in range(len(window) + 1)
        for c in itertools.combinations(window, r)
    ]
    for h in perm.sym(window):
        for v in vmaps:
            yield GElement(i, v, h)


def enumerate_G(i: int, cap: int = DEFAULT_G_ENUM_CAP) -> Iterator[GElement]:
    """Every element of G_i, 2^(2i+1) (2i+1)! in all."""
    if i < 1:
        raise DomainError("level must be positive")
    if i > cap:
        raise EnumerationTooLarge(f"enumeration too large: G_{i} exceeds cap {cap}")
    return _iter_G(i)


def enumerate_K(i: int, cap: int = DEFAULT_K_ENUM_CAP, level: int | None = None) -> Iterator[GElement]:
    """The 2 (2i+1)! elements of K_i, tagged at ``level`` (i or i+1, default i)."""
    if i < 1:
        raise DomainError("level must be positive")
    if i > cap:
        raise EnumerationTooLarge(f"enumeration too large: K_{i} exceeds cap {cap}")
    level = i if level is None else level
    if level not in (i, i + 1):
        raise DomainError("K_i not a designated subgroup of this factor")
    zi = charmap.z(i)
    return (
        GElement(level, v, h)
        for h in perm.enumerate_H_i(i, cap=cap)
        for v in (charmap.TRIVIAL, zi)
    )


def order_G(i: int) -> int:
    return 2 ** (2 * i + 1) * math.factorial(2 * i + 1)


def order_K(i: int) -> int:
    return 2 * math.factorial(2 * i + 1)


def format_gelement(a: GElement) -> str:
    return f"g@{a.level}[{charmap.format_vmap(a.v)}; {perm.format_perm(a.h)}]"
