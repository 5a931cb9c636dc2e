"""Independent oracles and random generators shared by the test modules."""

from __future__ import annotations

import functools
import itertools
import math
import random

from dunwoody import amalgam, charmap, perm
from dunwoody.amalgam import Syllable, Word
from dunwoody.charmap import VMap
from dunwoody.perm import ShiftedPermutation
from dunwoody.semidirect import GElement, enumerate_G, gmul, in_K

# pointwise oracle ------------------------------------------------------------


def table(f, lo=-10, hi=10) -> dict[int, int]:
    """Values of an arbitrary callable on a window."""
    return {j: f(j) for j in range(lo, hi + 1)}


def pointwise(*fs):
    """The function j -> f1(f2(...fn(j))) built from plain callables."""

    def h(j):
        for f in reversed(fs):
            j = f(j)
        return j

    return h


def oracle_inverse(f, lo=-30, hi=30):
    inv = {f(j): j for j in range(lo, hi + 1)}
    return inv.__getitem__


# random elements ---------------------------------------------------------------


def random_finite_perm(rng: random.Random, lo: int, hi: int) -> ShiftedPermutation:
    points = [j for j in range(lo, hi + 1) if rng.random() < 0.6]
    image = points[:]
    rng.shuffle(image)
    return ShiftedPermutation.from_mapping(dict(zip(points, image)))


def random_shifted(rng: random.Random, radius: int = 6, max_shift: int = 3) -> ShiftedPermutation:
    p = random_finite_perm(rng, -radius, radius)
    return ShiftedPermutation(rng.randint(-max_shift, max_shift), p.finite_part)


def random_vmap(rng: random.Random, lo: int, hi: int) -> VMap:
    return VMap(frozenset(j for j in range(lo, hi + 1) if rng.random() < 0.5))


def random_gelement(rng: random.Random, level: int) -> GElement:
    return GElement(level, random_vmap(rng, -level, level), random_finite_perm(rng, -level, level))


def random_K_element(rng: random.Random, i: int, level: int) -> GElement:
    v = charmap.z(i) if rng.random() < 0.5 else charmap.TRIVIAL
    return GElement(level, v, random_finite_perm(rng, -i, i))


def random_syllable(rng: random.Random, i: int, side: str, in_C: float = 0.2) -> Syllable:
    level = i if side == "A" else i + 1
    if rng.random() < in_C:
        return Syllable(side, random_K_element(rng, i, level))
    return Syllable(side, random_gelement(rng, level))


def random_word(rng: random.Random, i: int, max_len: int = 4) -> Word:
    """Arbitrary (usually unreduced) word: sides, identities and C-syllables mixed."""
    n = rng.randint(0, max_len)
    return Word(i, tuple(random_syllable(rng, i, rng.choice("AB")) for _ in range(n)))


def random_reduced_word(rng: random.Random, i: int, length: int) -> Word:
    """Alternating word whose syllables all lie outside C."""
    side = rng.choice("AB")
    syl = []
    for _ in range(length):
        level = i if side == "A" else i + 1
        while True:
            g = random_gelement(rng, level)
            if not in_K(g, i):
                break
        syl.append(Syllable(side, g))
        side = amalgam.OTHER[side]
    return Word(i, tuple(syl))


def scramble(rng: random.Random, w: Word) -> Word:
    """A different spelling of the same group element: insert x x^-1 pairs,
    split syllables, and slide C-elements across syllable boundaries."""
    i = w.level
    syl = list(w.syllables)
    for _ in range(rng.randint(1, 3)):
        op = rng.randrange(3)
        k = rng.randint(0, len(syl))
        if op == 0:
            s = random_syllable(rng, i, rng.choice("AB"))
            syl[k:k] = [s, Syllable(s.side, ~s.element)]
        elif op == 1 and syl:
            k = min(k, len(syl) - 1)
            s = syl[k]
            x = random_gelement(rng, s.element.level)
            syl[k : k + 1] = [Syllable(s.side, x), Syllable(s.side, gmul(~x, s.element))]
        elif op == 2 and len(syl) >= 2:
            k = min(k, len(syl) - 2)
            left, right = syl[k], syl[k + 1]
            c = random_K_element(rng, i, left.element.level)
            c_other = GElement(right.element.level, c.v, c.h)
            syl[k : k + 2] = [
                Syllable(left.side, gmul(left.element, c)),
                Syllable(right.side, gmul(~c_other, right.element)),
            ]
    return Word(i, tuple(syl))


# transversal normal form at segment level 1 ----------------------------------------


def _k_elements(i: int, level: int) -> list[GElement]:
    zi = charmap.z(i)
    out = []
    for image in itertools.permutations(range(-i, i + 1)):
        h = ShiftedPermutation.from_mapping(dict(zip(range(-i, i + 1), image)))
        out.append(GElement(level, charmap.TRIVIAL, h))
        out.append(GElement(level, zi, h))
    return out


@functools.lru_cache(maxsize=None)
def coset_table(i: int, side: str) -> dict[GElement, tuple[GElement, GElement]]:
    """Every factor element a written as r * c, r a transversal element, c in K_i.

    Full enumeration of the factor; the transversal is whatever comes first."""
    level = i if side == "A" else i + 1
    K = _k_elements(i, level)
    out: dict[GElement, tuple[GElement, GElement]] = {}
    for a in enumerate_G(level, cap=2):
        if a in out:
            continue
        for c in K:
            out[gmul(a, c)] = (a, c)
    return out


def normal_form(w: Word):
    """Unique normal form r_1 ... r_k c of a word (normal form theorem for
    amalgams). Independent of ``amalgam.reduce``."""
    i = w.level
    reps: list[tuple[str, GElement]] = []
    c_v, c_h = charmap.TRIVIAL, perm.IDENTITY
    for s in w.syllables:
        level = s.element.level
        y = gmul(GElement(level, c_v, c_h), s.element)
        if reps and reps[-1][0] == s.side:
            _, r = reps.pop()
            y = gmul(r, y)
        r, c = coset_table(i, s.side)[y]
        if not r.is_identity():
            reps.append((s.side, r))
        c_v, c_h = c.v, c.h
    return tuple(reps), (c_v, c_h)


def nf_is_identity(w: Word) -> bool:
    reps, (v, h) = normal_form(w)
    return not reps and v.is_trivial() and h.is_identity()


# landau brute force ---------------------------------------------------------------


def perm_order(image: tuple[int, ...]) -> int:
    seen = [False] * len(image)
    order = 1
    for start in range(len(image)):
        if seen[start]:
            continue
        n, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = image[j]
            n += 1
        order = math.lcm(order, n)
    return order


def landau_by_elements(m: int) -> int:
    return max((perm_order(p) for p in itertools.permutations(range(m))), default=1)
