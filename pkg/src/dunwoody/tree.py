"""The Bass-Serre tree of the segment splitting G_i *_{K_i} G_{i+1}.

Vertices are cosets pA and pB, edges are cosets pC. A vertex is stored as a
side plus a representative word; two vertices agree iff the sides match and
p^-1 q lies in that side's factor. Distances are read off the reduced
difference word, so no finite truncation is needed to compare vertices;
``build_ball`` materializes a finite ball for breadth-first cross-checks.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from . import amalgam, charmap, perm
from .amalgam import OTHER, Side, Word
from .errors import BudgetExceeded, DomainError, LevelMismatch
from .semidirect import GElement, enumerate_G, gmul, ginv, in_K, order_G, order_K

DEFAULT_MAX_LEVEL = 3
DEFAULT_MAX_RADIUS = 3
DEFAULT_VERTEX_BUDGET = 250_000
CENSUS_MAX_LEVEL = 2
CENSUS_MAX_DISTANCE = 4


@dataclass(frozen=True, slots=True)
class TreeVertex:
    side: Side
    rep: Word

    @property
    def level(self) -> int:
        return self.rep.level

    def __str__(self) -> str:
        return f"{self.side} {amalgam.format_word(self.rep)}"


def base_vertex(i: int, side: Side = "A") -> TreeVertex:
    return TreeVertex(side, amalgam.empty(i))


def act(g: Word, v: TreeVertex) -> TreeVertex:
    return TreeVertex(v.side, amalgam.wmul(g, v.rep))


def same_vertex(u: TreeVertex, v: TreeVertex) -> bool:
    if u.level != v.level:
        raise LevelMismatch()
    if u.side != v.side:
        return False
    return amalgam.in_factor(amalgam.wmul(amalgam.winv(u.rep), v.rep), u.side)


def distance(u: TreeVertex, v: TreeVertex) -> int:
    """Exact tree distance, from the reduced form of u.rep^-1 v.rep.

    Strip a leading syllable lying in u's factor and a trailing one lying in
    v's factor; if m syllables remain the geodesic has m + 1 edges, except
    that an empty remainder with equal sides means u = v.
    """
    if u.level != v.level:
        raise LevelMismatch()
    w = amalgam.wmul(amalgam.winv(u.rep), v.rep)
    syl = list(w.syllables)
    i = w.level
    if len(syl) == 1 and in_K(syl[0].element, i):
        syl = []
    if syl and syl[0].side == u.side:
        syl.pop(0)
    if syl and syl[-1].side == v.side:
        syl.pop()
    if not syl and u.side == v.side:
        return 0
    return len(syl) + 1


# coset representatives ---------------------------------------------------


def _factor_generators(level: int) -> list[GElement]:
    window = range(-level, level + 1)
    gens = [GElement(level, charmap.VMap(frozenset({j}))) for j in window]
    gens += [GElement(level, h=perm.transposition(j, j + 1)) for j in window[:-1]]
    return gens


def _coset_bucket(a: GElement, i: int) -> tuple:
    # Constant on each left coset aK_i: right multiplication by K_i only permutes
    # and complements values inside h([-i, i]). Used to bucket candidates; the
    # membership test below is what actually decides coset equality.
    inner = frozenset(a.h(j) for j in range(-i, i + 1))
    outer = tuple(a.h(j) for j in range(-a.level, a.level + 1) if abs(j) > i)
    return inner, outer, a.v.support - inner


@functools.lru_cache(maxsize=None)
def coset_reps(i: int, side: Side) -> tuple[GElement, ...]:
    """Representatives of the left cosets of K_i in the factor on ``side``.

    Found by breadth-first search over the coset space under left
    multiplication by generators; a candidate a is new unless r^-1 a lies in
    K_i for some known representative r. The identity comes first.
    """
    level = amalgam.side_level(i, side)
    gens = _factor_generators(level)
    start = GElement(level)
    reps = [start]
    buckets: dict[tuple, list[GElement]] = {_coset_bucket(start, i): [start]}
    queue = deque([start])
    while queue:
        r = queue.popleft()
        for g in gens:
            a = gmul(g, r)
            bucket = buckets.setdefault(_coset_bucket(a, i), [])
            if any(in_K(gmul(ginv(b), a), i) for b in bucket):
                continue
            bucket.append(a)
            reps.append(a)
            queue.append(a)
    return tuple(reps)


def coset_reps_exhaustive(i: int, side: Side, cap: int = 2) -> list[GElement]:
    """Same cosets found by full enumeration of the factor; small levels only."""
    level = amalgam.side_level(i, side)
    seen: set[GElement] = set()
    reps = []
    K = [GElement(level, c.v, c.h) for c in _iter_K(i)]
    for a in enumerate_G(level, cap=cap):
        if a in seen:
            continue
        reps.append(a)
        seen.update(gmul(a, c) for c in K)
    return reps


def _iter_K(i: int) -> Iterator[GElement]:
    zi = charmap.z(i)
    for h in perm.sym(range(-i, i + 1)):
        yield GElement(i, charmap.TRIVIAL, h)
        yield GElement(i, zi, h)


def coset_index(i: int, side: Side) -> int:
    """[X : K_i] from the order formulas, used only for projections."""
    return order_G(amalgam.side_level(i, side)) // order_K(i)


# balls -------------------------------------------------------------------


@dataclass
class Ball:
    level: int
    radius: int
    center: TreeVertex
    vertices: list[TreeVertex]
    edges: list[tuple[int, int]]
    depth: list[int]
    parent: list[int]
    children: list[list[int]] = field(repr=False)

    @property
    def center_index(self) -> int:
        return self.depth.index(0)

    def neighbors(self, k: int) -> list[int]:
        out = list(self.children[k])
        if self.parent[k] >= 0:
            out.append(self.parent[k])
        return out

    def degree(self, k: int) -> int:
        return len(self.neighbors(k))

    def locate(self, v: TreeVertex) -> int | None:
        """Index of v in the ball, or None when v lies outside it."""
        c = self.center_index
        d = distance(self.vertices[c], v)
        if d > self.radius:
            return None
        cur = c
        while d > 0:
            for k in self.children[cur]:
                dk = distance(self.vertices[k], v)
                if dk < d:
                    cur, d = k, dk
                    break
            else:
                raise AssertionError("ball is not a tree around its center")
        return cur

    def graph_distance(self, a: int, b: int) -> int:
        if a == b:
            return 0
        seen = {a}
        frontier = deque([(a, 0)])
        while frontier:
            k, d = frontier.popleft()
            for n in self.neighbors(k):
                if n == b:
                    return d + 1
                if n not in seen:
                    seen.add(n)
                    frontier.append((n, d + 1))
        raise AssertionError("ball is disconnected")

    def export(self) -> str:
        """Edge-list text: ``vertex <id> <side> <rep>`` lines then ``edge <u> <v>``."""
        lines = [
            f"vertex {k} {v.side} {amalgam.format_word(v.rep)}"
            for k, v in enumerate(self.vertices)
        ]
        lines += [f"edge {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def projected_ball_size(i: int, radius: int) -> int:
    degree = {"A": coset_index(i, "A"), "B": coset_index(i, "B")}
    total, layer, side = 1, 1, "A"
    for r in range(radius):
        layer *= degree[side] - (0 if r == 0 else 1)
        side = OTHER[side]
        total += layer
    return total


def build_ball(
    i: int,
    radius: int,
    max_level: int = DEFAULT_MAX_LEVEL,
    max_radius: int = DEFAULT_MAX_RADIUS,
    budget: int = DEFAULT_VERTEX_BUDGET,
) -> Ball:
    """Breadth-first ball around the base A-vertex, vertices sorted by printed rep."""
    if i < 1 or radius < 0:
        raise DomainError("level must be positive and radius nonnegative")
    projected = projected_ball_size(i, radius)
    if i > max_level or radius > max_radius or projected > budget:
        raise BudgetExceeded("ball too large", projected)

    verts = [base_vertex(i)]
    depth, parent = [0], [-1]
    frontier = [0]
    for d in range(radius):
        nxt = []
        for k in frontier:
            v = verts[k]
            reps = coset_reps(i, v.side)
            # the identity coset leads back to the parent
            for r in reps if d == 0 else reps[1:]:
                verts.append(
                    TreeVertex(OTHER[v.side], amalgam.wmul(v.rep, amalgam.from_element(i, r)))
                )
                depth.append(d + 1)
                parent.append(k)
                nxt.append(len(verts) - 1)
        frontier = nxt

    keys = [(amalgam.format_word(v.rep), v.side) for v in verts]
    order = sorted(range(len(verts)), key=keys.__getitem__)
    new = {old: n for n, old in enumerate(order)}
    vertices = [verts[o] for o in order]
    depth = [depth[o] for o in order]
    parent = [new[parent[o]] if parent[o] >= 0 else -1 for o in order]
    children: list[list[int]] = [[] for _ in vertices]
    for k, p in enumerate(parent):
        if p >= 0:
            children[p].append(k)
    edges = sorted((min(k, p), max(k, p)) for k, p in enumerate(parent) if p >= 0)
    return Ball(i, radius, vertices[depth.index(0)], vertices, edges, depth, parent, children)


def displacement(g: Word, v: TreeVertex, ball: Ball) -> int | None:
    """d(v, g v) measured along the ball's edges; None when g v exits the ball."""
    if g.level != ball.level or v.level != ball.level:
        raise LevelMismatch()
    a = ball.locate(v)
    b = ball.locate(act(g, v))
    if a is None or b is None:
        return None
    return ball.graph_distance(a, b)


# classification ------------------------------------------------------------


@dataclass(frozen=True)
class Elliptic:
    def __str__(self) -> str:
        return "elliptic"


@dataclass(frozen=True)
class Loxodromic:
    translation_length: int

    def __str__(self) -> str:
        return f"loxodromic {self.translation_length}"


def classify(g: Word) -> Elliptic | Loxodromic:
    length = amalgam.syllable_length(amalgam.cyclic_reduce(g))
    return Elliptic() if length <= 1 else Loxodromic(length)


# acylindricity spot-check ---------------------------------------------------


def geodesic(i: int, d: int) -> list[TreeVertex]:
    """A length-d path from the base A-vertex, stepping through the first
    non-identity coset representative at every vertex."""
    path = [base_vertex(i)]
    for _ in range(d):
        v = path[-1]
        r = coset_reps(i, v.side)[1]
        path.append(TreeVertex(OTHER[v.side], amalgam.wmul(v.rep, amalgam.from_element(i, r))))
    return path


def joint_stabilizer_census(
    i: int,
    d: int,
    max_level: int = CENSUS_MAX_LEVEL,
    max_distance: int = CENSUS_MAX_DISTANCE,
) -> int:
    """Number of group elements fixing both ends of a length-d geodesic from
    the base A-vertex (pointwise stabilizer, epsilon = 0)."""
    if i < 1 or d < 0:
        raise DomainError("level must be positive and distance nonnegative")
    if i > max_level or d > max_distance:
        raise BudgetExceeded(f"census budget exceeded for i={i}, d={d}")
    path = geodesic(i, d)
    start, end = path[0], path[-1]
    count = 0
    # the base vertex's stabilizer is exactly the factor A = G_i
    for a in enumerate_G(i, cap=max_level):
        g = amalgam.from_element(i, a)
        if same_vertex(act(g, start), start) and same_vertex(act(g, end), end):
            count += 1
    return count
