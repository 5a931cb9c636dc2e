"""Words in the segment amalgam A *_C B with A = G_i, B = G_{i+1}, C = K_i.

Equality is decided without transversals: two words are equal iff the
difference word reduces to the identity. Reduction is the usual rewriting
for amalgams (drop identities, merge neighbours on the same side, push
C-syllables across and merge), applied leftmost-first so output is
deterministic. A reduced word of length >= 2 is never trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from . import semidirect
from .errors import DomainError, LevelMismatch
from .semidirect import GElement, gmul, ginv, in_K, transfer_K
from .perm import ShiftedPermutation
from . import charmap

Side = Literal["A", "B"]
OTHER: dict[str, Side] = {"A": "B", "B": "A"}


@dataclass(frozen=True, slots=True)
class Syllable:
    side: Side
    element: GElement

    def __str__(self) -> str:
        return f"{self.side}:{self.element}"


@dataclass(frozen=True, slots=True)
class Word:
    level: int
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        for s in self.syllables:
            want = self.level if s.side == "A" else self.level + 1
            if s.side not in ("A", "B"):
                raise DomainError(f"unknown side {s.side!r}")
            if s.element.level != want:
                raise LevelMismatch(
                    f"level mismatch: side {s.side} of segment {self.level} needs level {want}"
                )

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return wmul(self, other)

    def __invert__(self) -> "Word":
        return winv(self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def side_level(level: int, side: Side) -> int:
    return level if side == "A" else level + 1


def word(level: int, *syllables: tuple[Side, GElement] | Syllable) -> Word:
    out = []
    for s in syllables:
        out.append(s if isinstance(s, Syllable) else Syllable(s[0], s[1]))
    return Word(level, tuple(out))


def empty(level: int) -> Word:
    return Word(level)


def from_element(level: int, g: GElement) -> Word:
    """Single-syllable word; the side is read off the element's level."""
    if g.level == level:
        return Word(level, (Syllable("A", g),))
    if g.level == level + 1:
        return Word(level, (Syllable("B", g),))
    raise LevelMismatch()


def embed_H(level: int, p: ShiftedPermutation) -> Word:
    """p in H_i as the C-syllable (trivial, p) on side A."""
    return Word(level, (Syllable("A", GElement(level, charmap.TRIVIAL, p)),))


def _in_C(s: Syllable, i: int) -> bool:
    return in_K(s.element, i)


def _cross(s: Syllable, i: int) -> Syllable:
    side = OTHER[s.side]
    return Syllable(side, transfer_K(s.element, i, side_level(i, side)))


def _reduce_list(syl: list[Syllable], i: int) -> list[Syllable]:
    while True:
        k = next((k for k, s in enumerate(syl) if s.element.is_identity()), None)
        if k is not None:
            del syl[k]
            continue
        k = next((k for k in range(len(syl) - 1) if syl[k].side == syl[k + 1].side), None)
        if k is not None:
            syl[k : k + 2] = [Syllable(syl[k].side, gmul(syl[k].element, syl[k + 1].element))]
            continue
        if len(syl) >= 2:
            k = next((k for k, s in enumerate(syl) if _in_C(s, i)), None)
            if k is not None:
                c = _cross(syl[k], i)
                # merge into the left neighbour when there is one, else the right
                if k > 0:
                    left = syl[k - 1]
                    syl[k - 1 : k + 1] = [Syllable(left.side, gmul(left.element, c.element))]
                else:
                    right = syl[k + 1]
                    syl[k : k + 2] = [Syllable(right.side, gmul(c.element, right.element))]
                continue
        break
    if len(syl) == 1 and syl[0].side == "B" and _in_C(syl[0], i):
        syl[0] = _cross(syl[0], i)
    return syl


def reduce(w: Word) -> Word:
    return Word(w.level, tuple(_reduce_list(list(w.syllables), w.level)))


def is_reduced(w: Word) -> bool:
    return reduce(w) == w


def _check_levels(w1: Word, w2: Word):
    if w1.level != w2.level:
        raise LevelMismatch()


def wmul(w1: Word, w2: Word) -> Word:
    _check_levels(w1, w2)
    return reduce(Word(w1.level, w1.syllables + w2.syllables))


def wprod(level: int, words: Iterable[Word]) -> Word:
    syl: list[Syllable] = []
    for w in words:
        if w.level != level:
            raise LevelMismatch()
        syl.extend(w.syllables)
    return reduce(Word(level, tuple(syl)))


def winv(w: Word) -> Word:
    return reduce(
        Word(w.level, tuple(Syllable(s.side, ginv(s.element)) for s in reversed(w.syllables)))
    )


def is_identity(w: Word) -> bool:
    r = reduce(w)
    if not r.syllables:
        return True
    if len(r) == 1:
        return r.syllables[0].element.is_identity()
    return False


def equals(w1: Word, w2: Word) -> bool:
    _check_levels(w1, w2)
    return is_identity(wmul(w1, winv(w2)))


def conjugate(w: Word, u: Word) -> Word:
    """u w u^-1."""
    return wprod(w.level, (u, w, winv(u)))


def cyclic_reduce_with_conjugator(w: Word) -> tuple[Word, Word]:
    """Return (w', u) with w' = u w u^-1 cyclically reduced."""
    u = empty(w.level)
    cur = reduce(w)
    while len(cur) >= 2 and cur.syllables[0].side == cur.syllables[-1].side:
        last = Word(w.level, (cur.syllables[-1],))
        cur = conjugate(cur, last)
        u = wmul(last, u)
    return cur, u


def cyclic_reduce(w: Word) -> Word:
    return cyclic_reduce_with_conjugator(w)[0]


def syllable_length(w: Word) -> int:
    return len(reduce(w))


def in_factor(w: Word, side: Side) -> bool:
    """Whether w represents an element of the factor on ``side``."""
    r = reduce(w)
    if not r.syllables:
        return True
    if len(r) > 1:
        return False
    s = r.syllables[0]
    return s.side == side or _in_C(s, w.level)


def format_word(w: Word) -> str:
    r = reduce(w)
    return f"w@{w.level}[" + "; ".join(map(str, r.syllables)) + "]"


def factor_order(level: int, side: Side) -> int:
    return semidirect.order_G(side_level(level, side))
