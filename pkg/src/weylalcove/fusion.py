"""Level-k Weyl alcove and truncated tensor products.

Fusion coefficients are obtained by folding ``lam + nu`` for every weight
``nu`` of ``V_gam`` into the alcove under the rho-shifted affine Weyl group
(walls ``(x + rho, alpha_i) = 0`` and ``(x, theta) = k + 1``).  Points that
land on a wall drop out; the others contribute ``sign * mult``.
"""
from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .characters import all_weights
from .root_system import (
    InvariantViolation,
    RootSystem,
    Weight,
    center,
    level,
    to_dominant,
    weyl_dimension,
)

FusionVector = dict  # Weight -> positive multiplicity, keys in alcove order


def alcove_sort_key(w: Sequence[int]) -> tuple:
    """Graded order: total label sum first, then lambda_1 before lambda_2 and so on."""
    return (sum(w), tuple(-x for x in w))


@dataclass(eq=False)
class AlcoveCtx:
    rs: RootSystem
    level: int
    alcove: tuple[Weight, ...]
    index: dict[Weight, int]
    cache_dir: str | None = None
    _fusion: dict = field(default_factory=dict, repr=False)
    _weights: OrderedDict = field(default_factory=OrderedDict, repr=False)

    @property
    def shifted_level(self) -> int:
        """``k + h``, so that ``q = exp(2 pi i / shifted_level)``."""
        return self.level + self.rs.dual_coxeter

    def __len__(self) -> int:
        return len(self.alcove)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.index

    def __repr__(self) -> str:
        return f"AlcoveCtx({self.rs.algebra}, k={self.level}, size={len(self.alcove)})"

    def require(self, *ws: Sequence[int]) -> list[Weight]:
        out = []
        for w in ws:
            w = tuple(int(x) for x in w)
            if w not in self.index:
                raise ValueError(f"weight {w} is not in the level-{self.level} alcove of {self.rs.algebra}")
            out.append(w)
        return out


def enumerate_alcove(rs: RootSystem, k: int, cache_dir: str | None = None) -> AlcoveCtx:
    """All dominant weights with ``(lam, theta) <= k``, in graded order (zero first)."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    marks = rs.comarks
    out: list[Weight] = []

    def rec(prefix: list[int], budget: int):
        i = len(prefix)
        if i == rs.rank:
            out.append(tuple(prefix))
            return
        for n in range(budget // marks[i] + 1):
            rec(prefix + [n], budget - n * marks[i])

    rec([], k)
    out.sort(key=alcove_sort_key)
    return AlcoveCtx(rs, k, tuple(out), {w: i for i, w in enumerate(out)}, cache_dir)


def affine_to_alcove(ctx: AlcoveCtx, mu: Sequence[int]) -> tuple[Weight, int] | None:
    """Fold ``mu`` into the alcove under the shifted affine Weyl group.

    Returns ``(representative, sign)`` or ``None`` when ``mu + rho`` lies on a wall.
    """
    rs = ctx.rs
    if len(mu) != rs.rank:
        raise ValueError(f"weight {tuple(mu)} does not match rank {rs.rank}")
    big = ctx.shifted_level
    x = [int(a) + 1 for a in mu]
    marks, theta = rs.comarks, rs.theta
    sign = 1
    while True:
        i = next((j for j, v in enumerate(x) if v < 0), None)
        if i is not None:
            xi = x[i]
            x = [a - xi * b for a, b in zip(x, rs.cartan[i])]
            sign = -sign
            continue
        lev = sum(a * m for a, m in zip(x, marks))
        if lev > big:
            x = [a - (lev - big) * t for a, t in zip(x, theta)]
            sign = -sign
            continue
        if lev == big or 0 in x:
            return None
        return tuple(a - 1 for a in x), sign


def _fold_many(ctx: AlcoveCtx, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized fold of shifted points ``x = mu + rho`` (modified in place).

    Returns alcove positions (``-1`` on walls) and signs.
    """
    rs = ctx.rs
    big = ctx.shifted_level
    marks = np.array(rs.comarks, dtype=x.dtype)
    cartan = rs.cartan_array.astype(x.dtype)
    theta = np.array(rs.theta, dtype=x.dtype)
    parity = np.zeros(len(x), dtype=np.int8)
    active = np.arange(len(x))
    while len(active):
        xa = x[active]
        neg = xa < 0
        has_neg = neg.any(axis=1)
        lev = xa @ marks
        over = ~has_neg & (lev > big)
        if has_neg.any():
            rows = active[has_neg]
            sub = xa[has_neg]
            i = neg[has_neg].argmax(axis=1)
            x[rows] = sub - sub[np.arange(len(rows)), i][:, None] * cartan[i]
            parity[rows] ^= 1
        if over.any():
            rows = active[over]
            x[rows] = xa[over] - (lev[over] - big)[:, None] * theta
            parity[rows] ^= 1
        active = active[has_neg | over]
    wall = (x == 0).any(axis=1) | (x @ marks == big)
    pos = _locate(ctx, x - 1)
    pos[wall] = -1
    sign = 1 - 2 * parity.astype(np.int64)
    return pos, sign


def _locate(ctx: AlcoveCtx, pts: np.ndarray) -> np.ndarray:
    """Alcove positions of folded points (``-1`` where not found)."""
    k = ctx.level
    r = ctx.rs.rank
    if (k + 1) ** r < 2**62:
        radix = np.array([(k + 1) ** i for i in range(r)], dtype=np.int64)
        al = np.array(ctx.alcove, dtype=np.int64)
        keys = al @ radix
        order = np.argsort(keys)
        sorted_keys = keys[order]
        clipped = np.clip(pts, 0, k).astype(np.int64)
        q = clipped @ radix
        j = np.clip(np.searchsorted(sorted_keys, q), 0, len(sorted_keys) - 1)
        ok = (sorted_keys[j] == q) & (pts == clipped).all(axis=1)
        return np.where(ok, order[j], -1)
    return np.array([ctx.index.get(tuple(int(v) for v in p), -1) for p in pts], dtype=np.int64)


def _weights_of(ctx: AlcoveCtx, gam: Weight) -> tuple[np.ndarray, np.ndarray]:
    cache = ctx._weights
    if gam in cache:
        cache.move_to_end(gam)
        return cache[gam]
    ws, ms = all_weights(ctx.rs, gam, ctx.cache_dir)
    cache[gam] = (ws.astype(np.int32), ms)
    while len(cache) > 3:
        cache.popitem(last=False)
    return cache[gam]


_CHUNK = 400_000


def fusion_product_direct(ctx: AlcoveCtx, lam: Sequence[int], gam: Sequence[int]) -> FusionVector:
    """``lam (x) gam`` by expanding the weights of ``V_gam`` (no caching, no operand swap)."""
    lam, gam = ctx.require(lam, gam)
    ws, ms = _weights_of(ctx, gam)
    totals = np.zeros(len(ctx.alcove), dtype=np.int64)
    shift = np.array(lam, dtype=np.int32) + 1
    for start in range(0, len(ws), _CHUNK):
        x = ws[start:start + _CHUNK] + shift
        pos, sign = _fold_many(ctx, x)
        keep = pos >= 0
        np.add.at(totals, pos[keep], sign[keep] * ms[start:start + _CHUNK][keep])
    if (totals < 0).any():
        raise InvariantViolation(f"negative fusion coefficient in {lam} (x) {gam}")
    out = {ctx.alcove[i]: int(totals[i]) for i in np.flatnonzero(totals)}
    if not out:
        raise InvariantViolation(f"empty fusion product {lam} (x) {gam}")
    return out


def _cost(ctx: AlcoveCtx, w: Weight) -> int:
    return weyl_dimension(ctx.rs, w)


def fusion_product(ctx: AlcoveCtx, lam: Sequence[int], gam: Sequence[int]) -> FusionVector:
    """Truncated tensor product ``lam (x) gam`` as ``{eta: N_{lam,gam}^eta}`` (cached, commutative)."""
    lam, gam = ctx.require(lam, gam)
    i, j = ctx.index[lam], ctx.index[gam]
    key = (min(i, j), max(i, j))
    if key not in ctx._fusion:
        a, b = (lam, gam) if _cost(ctx, gam) <= _cost(ctx, lam) else (gam, lam)
        ctx._fusion[key] = fusion_product_direct(ctx, a, b)
    return dict(ctx._fusion[key])


def fusion_coefficient(ctx: AlcoveCtx, lam, gam, eta) -> int:
    return fusion_product(ctx, lam, gam).get(tuple(eta), 0)


def fusion_table(ctx: AlcoveCtx) -> dict[tuple[int, int], FusionVector]:
    """Every product of alcove weights, keyed by position pairs ``(i, j)`` with ``i <= j``.

    Pairs are grouped by the expanded operand so each weight system is built once.
    """
    plan: dict[Weight, list[Weight]] = {}
    for i, lam in enumerate(ctx.alcove):
        for gam in ctx.alcove[i:]:
            key = (ctx.index[lam], ctx.index[gam])
            if key in ctx._fusion:
                continue
            small, other = (gam, lam) if _cost(ctx, gam) <= _cost(ctx, lam) else (lam, gam)
            plan.setdefault(small, []).append(other)
    for small, others in sorted(plan.items(), key=lambda kv: _cost(ctx, kv[0])):
        for other in others:
            i, j = sorted((ctx.index[small], ctx.index[other]))
            ctx._fusion[(i, j)] = fusion_product_direct(ctx, other, small)
    return dict(ctx._fusion)


def support_masks(ctx: AlcoveCtx) -> list[list[int]]:
    """``masks[i][j]`` is a bitmask over alcove positions of the support of ``alcove[i] (x) alcove[j]``."""
    table = fusion_table(ctx)
    n = len(ctx.alcove)
    masks = [[0] * n for _ in range(n)]
    for (i, j), vec in table.items():
        m = 0
        for w in vec:
            m |= 1 << ctx.index[w]
        masks[i][j] = masks[j][i] = m
    return masks


def dual_weight(ctx: AlcoveCtx, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual representation, the dominant representative of ``-lam``."""
    (lam,) = ctx.require(lam)
    return to_dominant(ctx.rs, tuple(-x for x in lam))[0]


def simple_current_weight(ctx: AlcoveCtx, z: int) -> Weight:
    """``k * ell(z)`` for a center element ``z`` (0 is the identity)."""
    return ctx.rs.zero() if z == 0 else ctx.rs.fundamental(z, ctx.level)


def apply_simple_current(ctx: AlcoveCtx, z: int, gam: Sequence[int]) -> Weight:
    """Image of ``gam`` under fusion with the invertible corner ``k * ell(z)``."""
    (gam,) = ctx.require(gam)
    if z not in center(ctx.rs).elements:
        raise ValueError(f"{z} is not a center element of {ctx.rs.algebra}")
    prod = fusion_product(ctx, simple_current_weight(ctx, z), gam)
    if len(prod) != 1 or next(iter(prod.values())) != 1:
        raise InvariantViolation(f"simple current {z} applied to {gam} gave {prod}")
    return next(iter(prod))


def support(vec: FusionVector) -> set[Weight]:
    return set(vec)


def fuse_sets(ctx: AlcoveCtx, left: Iterable[Weight], right: Iterable[Weight]) -> set[Weight]:
    """Union of the supports of all pairwise products."""
    out: set[Weight] = set()
    for a in left:
        for b in right:
            out |= fusion_product(ctx, a, b).keys()
    return out


def alcove_level(ctx: AlcoveCtx, w: Sequence[int]) -> int:
    return level(ctx.rs, w)


_contexts: dict[tuple[str, int], AlcoveCtx] = {}


def alcove_context(algebra, k: int, cache_dir: str | None = None) -> AlcoveCtx:
    """Shared, memoized context for ``(algebra, k)`` so fusion tables are built once per process."""
    from .root_system import build_root_system

    rs = build_root_system(algebra)
    key = (str(rs.algebra), int(k))
    if key not in _contexts:
        _contexts[key] = enumerate_alcove(rs, k, cache_dir)
    return _contexts[key]
