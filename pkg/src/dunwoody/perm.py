"""Permutations of the integers generated by the transposition (0 1) and the shift.

Every element of H is stored as ``j -> pi(j) + k`` where ``k`` is an integer
shift and ``pi`` is a finitely supported permutation in fixed-point-free form.
Structural equality therefore coincides with group equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, EnumerationTooLarge

DEFAULT_H_ENUM_CAP = 3


@dataclass(frozen=True, slots=True)
class FinitePermutation:
    """A finitely supported bijection of Z, listed only on its support."""

    pairs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "FinitePermutation":
        moved = {j: k for j, k in mapping.items() if j != k}
        if set(moved) != set(moved.values()):
            raise DomainError("mapping is not a bijection of its domain")
        return cls(tuple(sorted(moved.items())))

    @classmethod
    def _trusted(cls, mapping: Mapping[int, int]) -> "FinitePermutation":
        # caller guarantees a bijection
        return cls(tuple(sorted((j, k) for j, k in mapping.items() if j != k)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __call__(self, j: int) -> int:
        for a, b in self.pairs:
            if a == j:
                return b
        return j

    @property
    def support(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        mapping = self.as_dict()
        seen: set[int] = set()
        out = []
        for start in sorted(mapping):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = mapping[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = mapping[j]
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True, slots=True)
class ShiftedPermutation:
    """Element of H acting by ``j -> finite_part(j) + shift``."""

    shift: int = 0
    finite_part: FinitePermutation = FinitePermutation()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], shift: int = 0) -> "ShiftedPermutation":
        return cls(shift, FinitePermutation.from_mapping(mapping))

    @classmethod
    def cycle(cls, *points: int) -> "ShiftedPermutation":
        if len(set(points)) != len(points):
            raise DomainError(f"repeated point in cycle {points}")
        if len(points) < 2:
            return IDENTITY
        mapping = {a: b for a, b in zip(points, points[1:] + points[:1])}
        return cls.from_mapping(mapping)

    def __call__(self, j: int) -> int:
        return self.finite_part(j) + self.shift

    def __mul__(self, other: "ShiftedPermutation") -> "ShiftedPermutation":
        return compose(self, other)

    def __invert__(self) -> "ShiftedPermutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return self.shift == 0 and not self.finite_part.pairs

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"ShiftedPermutation({format_perm(self)!r})"


IDENTITY = ShiftedPermutation()
SHIFT = ShiftedPermutation(1)
TRANSPOSITION = ShiftedPermutation.cycle(0, 1)


def transposition(a: int, b: int) -> ShiftedPermutation:
    return ShiftedPermutation.cycle(a, b)


def shift(k: int) -> ShiftedPermutation:
    return ShiftedPermutation(k)


def apply(h: ShiftedPermutation, j: int) -> int:
    return h(j)


def compose(a: ShiftedPermutation, b: ShiftedPermutation) -> ShiftedPermutation:
    """The permutation ``j -> a(b(j))``."""
    # a(b(j)) = pa(pb(j) + kb) + ka, so the finite part is j -> pa(pb(j) + kb) - kb
    if b.is_identity():
        return a
    if a.is_identity():
        return b
    kb = b.shift
    pa = a.finite_part.as_dict()
    pb = b.finite_part.as_dict()
    domain = set(pb)
    domain.update(x - kb for x in pa)
    mapping = {}
    for j in domain:
        y = pb.get(j, j) + kb
        mapping[j] = pa.get(y, y) - kb
    return ShiftedPermutation(a.shift + kb, FinitePermutation._trusted(mapping))


def inverse(h: ShiftedPermutation) -> ShiftedPermutation:
    # h^-1(y) = p^-1(y - k), written as q(y) - k with q(y) = p^-1(y - k) + k
    k = h.shift
    return ShiftedPermutation(
        -k, FinitePermutation._trusted({b + k: a + k for a, b in h.finite_part.pairs})
    )


def support(h: ShiftedPermutation) -> frozenset[int]:
    if h.shift != 0:
        raise DomainError("infinite support")
    return h.finite_part.support


def in_H_i(h: ShiftedPermutation, i: int) -> bool:
    pairs = h.finite_part.pairs
    # pairs are sorted, so the ends bound the support
    return h.shift == 0 and (not pairs or (pairs[0][0] >= -i and pairs[-1][0] <= i))


def enumerate_H_i(i: int, cap: int = DEFAULT_H_ENUM_CAP) -> Iterator[ShiftedPermutation]:
    """All (2i+1)! permutations of [-i, i], in lexicographic image order."""
    if i < 0:
        raise DomainError("level must be nonnegative")
    if i > cap:
        raise EnumerationTooLarge(f"enumeration too large: H_{i} exceeds cap {cap}")
    return _iter_sym(range(-i, i + 1))


def _iter_sym(points: Iterable[int]) -> Iterator[ShiftedPermutation]:
    points = tuple(points)
    for image in itertools.permutations(points):
        yield ShiftedPermutation.from_mapping(dict(zip(points, image)))


def sym(points: Iterable[int]) -> Iterator[ShiftedPermutation]:
    """Every permutation of a finite point set, without any cap."""
    return _iter_sym(sorted(set(points)))


def format_perm(h: ShiftedPermutation) -> str:
    """Canonical text: ``s^k`` (when k != 0) then the cycles of the finite part.

    Juxtaposition is the group product, so ``s^1 (0 1)`` is compose(s, (0 1)).
    """
    parts = []
    if h.shift:
        parts.append(f"s^{h.shift}")
    parts.extend("(" + " ".join(map(str, c)) + ")" for c in h.finite_part.cycles())
    return " ".join(parts) if parts else "()"
