"""Weight multiplicities of irreducible representations via Freudenthal's formula.

Only dominant weights are stored; multiplicities elsewhere follow from Weyl
invariance.  Tables can be persisted as small JSON documents so that large
instances are not recomputed between runs.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .root_system import InvariantViolation, RootSystem, Weight, to_dominant, weyl_orbit

log = logging.getLogger(__name__)

CACHE_VERSION = 1
CACHE_ENV = "WEYLALCOVE_CACHE_DIR"


@dataclass(frozen=True)
class CharacterTable:
    highest: Weight
    entries: dict[Weight, int]

    def __post_init__(self):
        if self.entries.get(self.highest) != 1:
            raise InvariantViolation("highest weight must have multiplicity 1")

    def multiplicity(self, dominant: Weight) -> int:
        return self.entries.get(dominant, 0)


def _dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights below ``lam``, ordered by depth ``height(lam - mu)``."""
    seen = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha, simple in zip(rs.positive_roots, rs.positive_roots_simple):
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if min(nu) >= 0 and nu not in seen:
                    seen[nu] = seen[mu] + sum(simple)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda w: (seen[w], tuple(-x for x in w)))


def _freudenthal(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    g = rs.gram_int  # inner products scaled by gram_denominator
    roots = np.array(rs.positive_roots, dtype=np.int64)
    roots_g = roots @ g
    alpha_sq = np.einsum("ij,ij->i", roots_g, roots)
    rho = np.array(rs.rho, dtype=np.int64)

    def norm_shift(w):
        v = np.asarray(w, dtype=np.int64) + rho
        return int(v @ g @ v)

    top = norm_shift(lam)
    mult: dict[Weight, int] = {lam: 1}

    def lookup(w) -> int:
        return mult.get(to_dominant(rs, w)[0], 0)

    for mu in _dominant_weights(rs, lam)[1:]:
        mu_arr = np.array(mu, dtype=np.int64)
        base = roots_g @ mu_arr  # (mu, alpha) scaled
        rhs = 0
        for a_idx in range(len(roots)):
            alpha = roots[a_idx]
            j = 1
            while True:
                nu = tuple(int(x) for x in mu_arr + j * alpha)
                m = lookup(nu)
                if m == 0:
                    break
                rhs += int(base[a_idx] + j * alpha_sq[a_idx]) * m
                j += 1
        denom = top - norm_shift(mu)
        if denom <= 0:
            raise InvariantViolation(f"Freudenthal divisor vanished at {mu} for highest weight {lam}")
        q, r = divmod(2 * rhs, denom)
        if r:
            raise InvariantViolation(f"non-integral multiplicity at {mu} for highest weight {lam}")
        if q:
            mult[mu] = q
    return mult


# --- persistence --------------------------------------------------------------


def _cache_path(cache_dir: os.PathLike | str, rs: RootSystem, lam: Weight) -> Path:
    labels = "_".join(str(x) for x in lam)
    return Path(cache_dir) / f"{rs.algebra.family}{rs.rank}__{labels}.json"


def cache_store(cache_dir: os.PathLike | str, rs: RootSystem, table: CharacterTable) -> Path:
    """Write ``table`` atomically (temporary file then rename)."""
    path = _cache_path(cache_dir, rs, table.highest)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {
        "version": CACHE_VERSION,
        "family": rs.algebra.family,
        "rank": rs.rank,
        "highest": list(table.highest),
        "entries": [[list(w), m] for w, m in sorted(table.entries.items())],
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def cache_load(cache_dir: os.PathLike | str, rs: RootSystem, lam: Sequence[int]) -> CharacterTable | None:
    """Load a cached table; any missing, corrupt or mismatched file yields ``None``."""
    lam = tuple(lam)
    path = _cache_path(cache_dir, rs, lam)
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if doc["version"] != CACHE_VERSION or doc["family"] != rs.algebra.family or doc["rank"] != rs.rank:
            return None
        if tuple(doc["highest"]) != lam:
            return None
        entries = {tuple(int(x) for x in w): int(m) for w, m in doc["entries"]}
        return CharacterTable(lam, entries)
    except (OSError, ValueError, KeyError, TypeError, InvariantViolation) as exc:
        if not isinstance(exc, FileNotFoundError):
            log.warning("ignoring unreadable character cache %s: %s", path, exc)
        return None


# --- public API ---------------------------------------------------------------

_memory: dict[tuple, CharacterTable] = {}


def default_cache_dir() -> str | None:
    return os.environ.get(CACHE_ENV) or None


def dominant_character(rs: RootSystem, lam: Sequence[int], cache_dir: os.PathLike | str | None = None) -> CharacterTable:
    """Dominant weight multiplicities of the irreducible representation ``V_lam``.

    ``cache_dir`` defaults to the ``WEYLALCOVE_CACHE_DIR`` environment variable;
    without either, tables are kept in memory only.
    """
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} does not match rank {rs.rank}")
    if min(lam) < 0:
        raise ValueError(f"highest weight {lam} is not dominant")
    key = (rs.algebra, lam)
    if key in _memory:
        return _memory[key]
    cache_dir = cache_dir if cache_dir is not None else default_cache_dir()
    table = cache_load(cache_dir, rs, lam) if cache_dir else None
    if table is None:
        table = CharacterTable(lam, _freudenthal(rs, lam))
        if cache_dir:
            try:
                cache_store(cache_dir, rs, table)
            except OSError as exc:
                log.warning("could not write character cache: %s", exc)
    _memory[key] = table
    return table


def weight_multiplicity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cache_dir=None) -> int:
    """Dimension of the ``mu`` weight space of ``V_lam`` (zero if ``mu`` is not a weight)."""
    if len(mu) != rs.rank:
        raise ValueError(f"weight {tuple(mu)} does not match rank {rs.rank}")
    table = dominant_character(rs, lam, cache_dir)
    return table.multiplicity(to_dominant(rs, mu)[0])


def all_weights(rs: RootSystem, lam: Sequence[int], cache_dir=None) -> tuple[np.ndarray, np.ndarray]:
    """Every weight of ``V_lam`` with its multiplicity, as ``(weights, mults)`` arrays."""
    table = dominant_character(rs, lam, cache_dir)
    ws, ms = [], []
    for mu, m in table.entries.items():
        orbit = weyl_orbit(rs, mu)
        ws.append(orbit)
        ms.append(np.full(len(orbit), m, dtype=np.int64))
    return np.concatenate(ws), np.concatenate(ms)


def dimension_from_table(rs: RootSystem, table: CharacterTable) -> int:
    """Sum of multiplicities over the full Weyl-orbit expansion of the table."""
    return sum(len(weyl_orbit(rs, mu)) * m for mu, m in table.entries.items())
