"""Enumeration caps and resource budgets, overridable from a key-value file.

The file holds ``key = value`` lines (``#`` comments allowed), e.g.::

    ball_vertex_budget = 500000
    g_enum_cap = 3
"""

from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass
from pathlib import Path

from . import certify, perm, semidirect, tree


@dataclass(frozen=True)
class Limits:
    h_enum_cap: int = perm.DEFAULT_H_ENUM_CAP
    g_enum_cap: int = semidirect.DEFAULT_G_ENUM_CAP
    k_enum_cap: int = semidirect.DEFAULT_K_ENUM_CAP
    ball_max_level: int = tree.DEFAULT_MAX_LEVEL
    ball_max_radius: int = tree.DEFAULT_MAX_RADIUS
    ball_vertex_budget: int = tree.DEFAULT_VERTEX_BUDGET
    census_max_level: int = tree.CENSUS_MAX_LEVEL
    census_max_distance: int = tree.CENSUS_MAX_DISTANCE
    landau_cap: int = certify.LANDAU_CAP
    verify_max_level: int = certify.DEFAULT_MAX_LEVEL
    samples: int = 16


def load_limits(path: str | Path) -> Limits:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.read_string("[limits]\n" + Path(path).read_text())
    known = {f.name for f in dataclasses.fields(Limits)}
    values = {}
    for key, raw in parser["limits"].items():
        if key not in known:
            raise ValueError(f"unknown config key {key!r}")
        try:
            values[key] = int(raw)
        except ValueError:
            raise ValueError(f"config key {key!r} needs an integer, got {raw!r}") from None
    return Limits(**values)
