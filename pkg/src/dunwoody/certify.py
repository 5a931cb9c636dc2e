"""Certificates that J has loxodromic elements with ever larger finite
subgroups in their centralizers.

At level i the element g_i = (phi_i t_i)(psi_i s_i) is a length-2 word in
G_i *_{K_i} G_{i+1}. Every permutation p of the window [-i+3, i] commutes with
g_i; this is checked twice, once by the support calculus and once by word
equality in the amalgam. Since the largest cyclic subgroup of Sym(m) has
order landau(m), any cyclic subgroup of the centralizer has index at least
(2i-2)! / landau(2i-2) there.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from . import amalgam, charmap, perm, tree
from .amalgam import Word
from .charmap import VMap
from .errors import DomainError
from .perm import ShiftedPermutation
from .semidirect import GElement, in_K

DEFAULT_MAX_LEVEL = 12
LANDAU_CAP = 60
SCHEMA = "dunwoody-certificate/1"


@dataclass(frozen=True)
class WitnessSet:
    i: int
    phi: VMap
    t: ShiftedPermutation
    psi: VMap
    s: ShiftedPermutation

    @property
    def first(self) -> GElement:
        """phi_i t_i in G_i."""
        return GElement(self.i, self.phi, self.t)

    @property
    def second(self) -> GElement:
        """psi_i s_i in G_{i+1}."""
        return GElement(self.i + 1, self.psi, self.s)


def witness_elements(i: int) -> WitnessSet:
    """The four witnesses at level i, with no check on the window size."""
    return WitnessSet(
        i,
        phi=VMap(frozenset({-i + 1, -i + 2})),
        t=perm.transposition(-i, -i + 1),
        psi=VMap(frozenset({-i, -i + 1})),
        s=perm.transposition(-i - 1, -i),
    )


def witnesses(i: int) -> WitnessSet:
    if i < 2:
        raise DomainError("window empty")
    ws = witness_elements(i)
    failed = [c.name for c in witness_checks(ws) if not c.value]
    if failed:
        raise AssertionError(f"witness invariants fail at i={i}: {failed}")
    return ws


@dataclass(frozen=True)
class Check:
    name: str
    op: str
    value: bool

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "op": self.op, "value": self.value}


def witness_checks(ws: WitnessSet) -> list[Check]:
    i = ws.i
    zi = charmap.z(i)
    return [
        Check("supp(phi) = {-i+1,-i+2}", "charmap.support", ws.phi.support == {-i + 1, -i + 2}),
        Check("supp(t) = {-i,-i+1}", "perm.support", perm.support(ws.t) == {-i, -i + 1}),
        Check("supp(psi) = {-i,-i+1}", "charmap.support", ws.psi.support == {-i, -i + 1}),
        Check("supp(s) = {-i-1,-i}", "perm.support", perm.support(ws.s) == {-i - 1, -i}),
        Check(
            "phi in V_i minus <z_i>",
            "charmap.in_V_i",
            charmap.in_V_i(ws.phi, i) and ws.phi not in (charmap.TRIVIAL, zi),
        ),
        Check(
            "psi in V_(i+1) minus <z_i>",
            "charmap.in_V_i",
            charmap.in_V_i(ws.psi, i + 1) and ws.psi not in (charmap.TRIVIAL, zi),
        ),
        Check("t in H_i", "perm.in_H_i", perm.in_H_i(ws.t, i)),
        Check("s in H_(i+1)", "perm.in_H_i", perm.in_H_i(ws.s, i + 1)),
        Check("t . psi = psi", "charmap.conj", charmap.conj(ws.t, ws.psi) == ws.psi),
        Check("phi t not in K_i", "semidirect.in_K", not in_K(ws.first, i)),
        Check("psi s not in K_i", "semidirect.in_K", not in_K(ws.second, i)),
    ]


def loxodromic_witness(i: int) -> Word:
    ws = witnesses(i)
    return _witness_word(ws)


def _witness_word(ws: WitnessSet) -> Word:
    return amalgam.word(ws.i, ("A", ws.first), ("B", ws.second))


def _require_H_i(p: ShiftedPermutation, i: int):
    if not perm.in_H_i(p, i):
        raise DomainError("not in H_i")


def support_conditions(p: ShiftedPermutation, i: int) -> bool:
    """Sufficient support-disjointness conditions for p to commute with g_i."""
    _require_H_i(p, i)
    ws = witnesses(i)
    sp = perm.support(p)
    return (
        sp.isdisjoint(ws.phi.support)
        and sp.isdisjoint(charmap.conj(ws.t, ws.psi).support)
        and sp.isdisjoint(perm.support(perm.compose(ws.t, ws.s)))
    )


def commutes(p: ShiftedPermutation, i: int) -> bool:
    """Decide p g_i = g_i p by word equality in the amalgam."""
    _require_H_i(p, i)
    g = loxodromic_witness(i)
    pw = amalgam.embed_H(i, p)
    return amalgam.equals(amalgam.wmul(pw, g), amalgam.wmul(g, pw))


def simplified_sides(p: ShiftedPermutation, i: int) -> tuple[Word, Word]:
    """The hand-simplified forms of p g_i and g_i p as two-syllable words:

        p g_i = (p.phi) . ((pt).psi  p t s)
        g_i p = (phi)   . (t.psi     t s p)
    """
    _require_H_i(p, i)
    ws = witnesses(i)
    pt = perm.compose(p, ws.t)
    left = amalgam.word(
        i,
        ("A", GElement(i, charmap.conj(p, ws.phi))),
        ("B", GElement(i + 1, charmap.conj(pt, ws.psi), perm.compose(pt, ws.s))),
    )
    ts = perm.compose(ws.t, ws.s)
    right = amalgam.word(
        i,
        ("A", GElement(i, ws.phi)),
        ("B", GElement(i + 1, charmap.conj(ws.t, ws.psi), perm.compose(ts, p))),
    )
    return left, right


@dataclass(frozen=True)
class GeneratorResult:
    p: ShiftedPermutation
    support_conditions: bool
    commutes: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "p": str(self.p),
            "support_conditions": {"op": "certify.support_conditions", "value": self.support_conditions},
            "commutes": {"op": "certify.commutes", "value": self.commutes},
        }


@dataclass(frozen=True)
class CentralizerCertificate:
    i: int
    window: tuple[int, int]
    order: int
    generators: tuple[GeneratorResult, ...]

    @property
    def all_generators_commute(self) -> bool:
        return all(g.support_conditions and g.commutes for g in self.generators)


def window(i: int) -> tuple[int, int]:
    return (-i + 3, i)


def centralizer_subgroup_certificate(i: int) -> CentralizerCertificate:
    """Sym([-i+3, i]) lies in the centralizer of g_i.

    Only the adjacent transpositions are checked; they generate the symmetric
    group and the centralizer is a subgroup.
    """
    witnesses(i)
    lo, hi = window(i)
    results = []
    for j in range(lo, hi):
        p = perm.transposition(j, j + 1)
        results.append(GeneratorResult(p, support_conditions(p, i), commutes(p, i)))
    return CentralizerCertificate(i, (lo, hi), math.factorial(hi - lo + 1), tuple(results))


def partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of m with parts in nonincreasing order."""
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    for k in range(min(m, largest), 0, -1):
        for rest in partitions(m - k, k):
            yield (k,) + rest


def landau(m: int, cap: int = LANDAU_CAP) -> int:
    """Largest element order in Sym(m): max lcm over the partitions of m."""
    if m < 0:
        raise DomainError("m must be nonnegative")
    if m > cap:
        raise DomainError(f"landau argument {m} exceeds cap {cap}")
    return max(math.lcm(*p) if p else 1 for p in partitions(m))


def index_lower_bound(i: int, cap: int = LANDAU_CAP) -> Fraction:
    if i < 3:
        raise DomainError("index bound needs i >= 3")
    m = 2 * i - 2
    return Fraction(math.factorial(m), landau(m, cap))


# full run ----------------------------------------------------------------


def random_window_permutation(rng: random.Random, i: int) -> ShiftedPermutation:
    """Random element of H_i. Two thirds of draws are confined to a random
    subset of [-i, i] or of the window, so the support conditions hold often
    enough to exercise both paths."""
    u = rng.random()
    if u < 1 / 3:
        points = list(range(-i, i + 1))
    elif u < 2 / 3:
        points = [j for j in range(-i, i + 1) if rng.random() < 0.5]
    else:
        lo, hi = window(i)
        points = [j for j in range(lo, hi + 1) if rng.random() < 0.5]
    image = points[:]
    rng.shuffle(image)
    return perm.ShiftedPermutation.from_mapping(dict(zip(points, image)))


@dataclass(frozen=True)
class Agreement:
    samples: int
    conditions_held: int
    counterexamples: tuple[str, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "op": "certify.support_conditions => certify.commutes",
            "samples": str(self.samples),
            "conditions_held": str(self.conditions_held),
            "counterexamples": list(self.counterexamples),
            "value": not self.counterexamples,
        }


def two_path_agreement(i: int, samples: int, rng: random.Random) -> Agreement:
    held, bad = 0, []
    for _ in range(samples):
        p = random_window_permutation(rng, i)
        if support_conditions(p, i):
            held += 1
            if not commutes(p, i):
                bad.append(str(p))
    return Agreement(samples, held, tuple(bad))


@dataclass
class LevelRecord:
    i: int
    checks: list[Check]
    classification: str
    certificate: CentralizerCertificate
    landau: int
    index_lower_bound: Fraction | None
    agreement: Agreement
    error: str | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return (
            self.error is None
            and all(c.value for c in self.checks)
            and self.classification == "loxodromic 2"
            and self.certificate.all_generators_commute
            and self.certificate.order == math.factorial(2 * self.i - 2)
            and not self.agreement.counterexamples
        )

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "i": self.i,
            "status": "PASS" if self.passed else "FAIL",
            "checks": [c.to_json() for c in self.checks],
            "classification": {"op": "tree.classify", "value": self.classification},
            "window": [str(self.certificate.window[0]), str(self.certificate.window[1])],
            "generators": [g.to_json() for g in self.certificate.generators],
            "all_generators_commute": {
                "op": "certify.centralizer_subgroup_certificate",
                "value": self.certificate.all_generators_commute,
            },
            "subgroup_order": str(self.certificate.order),
            "landau": str(self.landau),
            "index_lower_bound": None if self.index_lower_bound is None else str(self.index_lower_bound),
            "two_path_agreement": self.agreement.to_json(),
        }
        if self.error is not None:
            out["error"] = self.error
        if timings:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class Report:
    i_min: int
    i_max: int
    seed: int
    levels: list[LevelRecord] = field(default_factory=list)

    @property
    def bounds(self) -> list[Fraction]:
        return [r.index_lower_bound for r in self.levels if r.index_lower_bound is not None]

    @property
    def monotone(self) -> bool:
        b = self.bounds
        return all(x < y for x, y in zip(b, b[1:]))

    @property
    def passed(self) -> bool:
        return self.monotone and all(r.passed for r in self.levels)

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "i_min": self.i_min,
            "i_max": self.i_max,
            "seed": self.seed,
            "levels": [r.to_json(timings) for r in self.levels],
            "index_bounds_strictly_increasing": {
                "op": "certify.index_lower_bound",
                "value": self.monotone,
            },
            "verdict": "PASS" if self.passed else "FAIL",
        }

    def to_text(self, timings: bool = False) -> str:
        lines = [f"certificate run i = {self.i_min}..{self.i_max}  seed {self.seed}"]
        for r in self.levels:
            bound = "-" if r.index_lower_bound is None else str(r.index_lower_bound)
            line = (
                f"i={r.i:<3} {'PASS' if r.passed else 'FAIL'}  {r.classification:<13} "
                f"window [{r.certificate.window[0]}, {r.certificate.window[1]}]  "
                f"order {r.certificate.order}  landau {r.landau}  index >= {bound}  "
                f"agreement {r.agreement.conditions_held}/{r.agreement.samples}"
            )
            if timings:
                line += f"  {r.seconds:.3f}s"
            if r.error:
                line += f"  error: {r.error}"
            lines.append(line)
        lines.append(f"index bounds strictly increasing: {self.monotone}")
        lines.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def certify_level(
    i: int, rng: random.Random, samples: int = 16, landau_cap: int = LANDAU_CAP
) -> LevelRecord:
    start = time.perf_counter()
    ws = witness_elements(i)
    checks = witness_checks(ws)
    g = loxodromic_witness(i)
    checks.append(Check("g_i reduced of length 2", "amalgam.reduce", amalgam.reduce(g) == g and len(g) == 2))
    checks.append(Check("g_i nontrivial", "amalgam.is_identity", not amalgam.is_identity(g)))
    cert = centralizer_subgroup_certificate(i)
    m = 2 * i - 2
    record = LevelRecord(
        i=i,
        checks=checks,
        classification=str(tree.classify(g)),
        certificate=cert,
        landau=landau(m, landau_cap),
        index_lower_bound=index_lower_bound(i, landau_cap) if i >= 3 else None,
        agreement=two_path_agreement(i, samples, rng),
    )
    record.seconds = time.perf_counter() - start
    return record


def run(
    i_min: int,
    i_max: int,
    seed: int = 0,
    samples: int = 16,
    max_level: int = DEFAULT_MAX_LEVEL,
    landau_cap: int = LANDAU_CAP,
) -> Report:
    if i_min > i_max:
        raise DomainError("empty range")
    if i_min < 2:
        raise DomainError("levels start at 2")
    if i_max > max_level:
        raise DomainError(f"i_max {i_max} exceeds cap {max_level}")
    report = Report(i_min, i_max, seed)
    for i in range(i_min, i_max + 1):
        rng = random.Random(seed * 1_000_003 + i)
        try:
            record = certify_level(i, rng, samples, landau_cap)
        except Exception as e:  # a failing level is reported, not raised
            record = LevelRecord(
                i, [], "unknown", CentralizerCertificate(i, window(i), 0, ()), 0, None,
                Agreement(0, 0, ()), error=f"{type(e).__name__}: {e}",
            )
        report.levels.append(record)
    return report
