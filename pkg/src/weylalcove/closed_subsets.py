"""Closed subsets of the Weyl alcove and their classification.

A subset is closed when it contains 0, is stable under duals, and contains
every summand of the fusion product of any two of its members.  The known
families are the coset sets ``Gamma_Z``, the simple-current sets ``Delta_Z``
and six level-2 exceptions in types B, D, E7 and E8.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .fusion import (
    AlcoveCtx,
    dual_weight,
    fusion_product,
    simple_current_weight,
    support_masks,
)
from .root_system import (
    InvariantViolation,
    RootSystem,
    Weight,
    center,
    inner_product,
    level,
    subgroups_of_center,
)

DEFAULT_MAX_ALCOVE = 200


@dataclass(frozen=True)
class ClassificationTag:
    variant: str  # GammaZ, DeltaZ, ExcB, ExcD_even, ExcD_odd, ExcE7_a, ExcE7_b, ExcE8, Unclassified
    subgroup: frozenset[int] | None = None
    j: int | None = None
    n: int | None = None

    def __str__(self) -> str:
        if self.subgroup is not None:
            return f"{self.variant}({{{', '.join(str(z) for z in sorted(self.subgroup))}}})"
        if self.j is not None:
            return f"{self.variant}(j={self.j}, n={self.n})"
        return self.variant

    def as_dict(self) -> dict:
        d = {"variant": self.variant}
        if self.subgroup is not None:
            d["subgroup"] = sorted(self.subgroup)
        if self.j is not None:
            d["j"], d["n"] = self.j, self.n
        return d


UNCLASSIFIED = ClassificationTag("Unclassified")


@dataclass(frozen=True)
class ClosedSubset:
    members: tuple[Weight, ...]  # in alcove order
    classification: ClassificationTag = UNCLASSIFIED

    def __contains__(self, w) -> bool:
        return tuple(w) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset[Weight]:
        return frozenset(self.members)


def _ordered(ctx: AlcoveCtx, ws: Iterable[Weight]) -> tuple[Weight, ...]:
    return tuple(sorted(set(ws), key=ctx.index.__getitem__))


def closure(ctx: AlcoveCtx, generators: Iterable[Sequence[int]] = (), duals: bool = True) -> ClosedSubset:
    """Smallest closed subset containing ``generators`` (and 0).

    With ``duals=False`` only fusion closure is applied; by the tensor-closed
    implies closed property the result is the same.
    """
    gens = ctx.require(*generators)
    members = {ctx.alcove[0]}
    pending = list(dict.fromkeys(gens))
    while pending:
        a = pending.pop()
        if a in members:
            continue
        members.add(a)
        new = set()
        if duals:
            new.add(dual_weight(ctx, a))
        for b in list(members):
            new |= fusion_product(ctx, a, b).keys()
        pending.extend(w for w in new if w not in members)
    return ClosedSubset(_ordered(ctx, members))


def is_closed(ctx: AlcoveCtx, members: Iterable[Sequence[int]]) -> bool:
    s = set(ctx.require(*members))
    if ctx.alcove[0] not in s:
        return False
    if any(dual_weight(ctx, w) not in s for w in s):
        return False
    ordered = _ordered(ctx, s)
    for i, a in enumerate(ordered):
        for b in ordered[i:]:
            if not fusion_product(ctx, a, b).keys() <= s:
                return False
    return True


def _make_closed(ctx: AlcoveCtx, members: Iterable[Weight], tag: ClassificationTag, check: bool) -> ClosedSubset:
    members = _ordered(ctx, members)
    if check and not is_closed(ctx, members):
        raise InvariantViolation(f"{tag} set {members} is not closed")
    return ClosedSubset(members, tag)


def gamma_Z(ctx: AlcoveCtx, Z: Iterable[int], check: bool = True) -> ClosedSubset:
    """Alcove weights pairing integrally with ``ell(z)`` for every ``z`` in ``Z``."""
    Z = frozenset(Z)
    cm = center(ctx.rs)
    members = [g for g in ctx.alcove if all(cm.pairing(g, z).denominator == 1 for z in Z)]
    return _make_closed(ctx, members, ClassificationTag("GammaZ", Z), check)


def delta_Z(ctx: AlcoveCtx, Z: Iterable[int], check: bool = True) -> ClosedSubset:
    """The simple currents ``k * ell(z)`` for ``z`` in ``Z``."""
    Z = frozenset(Z)
    members = [simple_current_weight(ctx, z) for z in Z]
    out = _make_closed(ctx, members, ClassificationTag("DeltaZ", Z), check)
    if check:
        for w in out.members:
            if set(fusion_product(ctx, w, dual_weight(ctx, w))) != {ctx.alcove[0]}:
                raise InvariantViolation(f"simple current {w} is not invertible")
    return out


def exceptional_sets(ctx: AlcoveCtx) -> list[tuple[ClassificationTag, frozenset[Weight]]]:
    """The level-2 exceptional closed sets predicted for this algebra."""
    rs = ctx.rs
    if ctx.level != 2:
        return []
    f, l = rs.algebra.family, rs.rank
    lam = rs.fundamental
    zero = rs.zero()
    out = []
    if (f, l) == ("E", 7):
        out.append((ClassificationTag("ExcE7_a"), frozenset({zero, lam(6)})))
        out.append((ClassificationTag("ExcE7_b"), frozenset({zero, lam(2), lam(7, 2)})))
    elif (f, l) == ("E", 8):
        out.append((ClassificationTag("ExcE8"), frozenset({zero, lam(1)})))
    elif f == "B":
        for j in range(3, 2 * l + 2):
            n, r = divmod(2 * l + 1, j)
            if r == 0 and n >= 3 and n % 2 == 1:
                ms = {lam(m * j) for m in range(1, (n - 1) // 2 + 1)}
                out.append((ClassificationTag("ExcB", j=j, n=n), frozenset({zero, lam(1, 2)} | ms)))
    elif f == "D":
        for j in range(3, l + 1):
            n, r = divmod(l, j)
            if r == 0 and n >= 2:
                ms = {lam(m * j) for m in range(1, n)}
                out.append((ClassificationTag("ExcD_even", j=j, n=n),
                            frozenset({zero, lam(1, 2), lam(l - 1, 2), lam(l, 2)} | ms)))
        for j in range(3, 2 * l + 1):
            n, r = divmod(2 * l, j)
            if r == 0 and n >= 3 and n % 2 == 1:
                ms = {lam(m * j) for m in range(1, (n - 1) // 2 + 1)}
                out.append((ClassificationTag("ExcD_odd", j=j, n=n), frozenset({zero, lam(1, 2)} | ms)))
    return out


def predicted_sets(ctx: AlcoveCtx, check: bool = False) -> list[ClosedSubset]:
    """Every Gamma_Z, Delta_Z and exceptional set, in classification precedence order."""
    subs = subgroups_of_center(center(ctx.rs))
    out = [gamma_Z(ctx, Z, check) for Z in subs]
    out += [delta_Z(ctx, Z, check) for Z in subs]
    out += [_make_closed(ctx, ms, tag, check) for tag, ms in exceptional_sets(ctx)]
    return out


def classify(ctx: AlcoveCtx, subset: ClosedSubset | Iterable[Sequence[int]]) -> ClassificationTag:
    """Match a closed subset against the known families (Gamma_Z before Delta_Z before exceptions)."""
    members = subset.members if isinstance(subset, ClosedSubset) else subset
    target = frozenset(ctx.require(*members))
    for cand in predicted_sets(ctx):
        if cand.as_set() == target:
            return cand.classification
    return UNCLASSIFIED


def enumerate_closed(ctx: AlcoveCtx, max_alcove: int = DEFAULT_MAX_ALCOVE, duals: bool = True) -> list[ClosedSubset]:
    """All closed subsets, as joins of closures of single weights, classified and sorted by size."""
    n = len(ctx.alcove)
    if n > max_alcove:
        raise ValueError(f"alcove of {ctx.rs.algebra} at level {ctx.level} has {n} weights; "
                         f"the bound is {max_alcove} (raise max_alcove to proceed)")
    masks = support_masks(ctx)
    dual_bit = [1 << ctx.index[dual_weight(ctx, w)] for w in ctx.alcove]

    def close(m: int) -> int:
        m |= 1
        while True:
            prev = m
            idx = [i for i in range(n) if m >> i & 1]
            for a in idx:
                if duals:
                    m |= dual_bit[a]
                row = masks[a]
                for b in idx:
                    m |= row[b]
            if m == prev:
                return m

    closed = {close(1 << i) for i in range(n)}
    frontier = set(closed)
    while frontier:
        new = set()
        for a in frontier:
            for b in closed:
                c = close(a | b)
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new

    subsets = []
    for m in closed:
        members = tuple(ctx.alcove[i] for i in range(n) if m >> i & 1)
        subsets.append(ClosedSubset(members, classify(ctx, members)))
    subsets.sort(key=lambda s: (len(s), [ctx.index[w] for w in s.members]))
    return subsets


def chart_shifts(rs: RootSystem, i: int, require_dull: bool = True) -> list[Weight]:
    """Roots ``alpha`` (short roots in non-simply-laced types) with ``lambda_i + alpha`` in the alcove
    at level ``(lambda_i, theta)``.  By default ``lambda_i`` must be a dull long fundamental weight.
    """
    if not 1 <= i <= rs.rank:
        raise ValueError(f"index {i} out of range")
    k = rs.comarks[i - 1]
    if require_dull and (not rs.long_simple[i - 1] or k < 2):
        raise ValueError(f"lambda_{i} of {rs.algebra} is not a dull long fundamental weight")
    lam = rs.fundamental(i)
    simply_laced = all(rs.long_simple)
    roots = []
    for alpha in rs.positive_roots:
        if not simply_laced and inner_product(rs, alpha, alpha) == 2:
            continue
        roots += [alpha, tuple(-x for x in alpha)]
    out = []
    for alpha in roots:
        w = tuple(a + b for a, b in zip(lam, alpha))
        if min(w) >= 0 and level(rs, w) <= k:
            out.append(alpha)
    return sorted(out)


def dull_weights(rs: RootSystem) -> list[int]:
    """1-based indices of the dull long fundamental weights."""
    return [i + 1 for i in range(rs.rank) if rs.long_simple[i] and rs.comarks[i] >= 2]


def min_fusion_power_containing_zero(ctx: AlcoveCtx, lam: Sequence[int], bound: int) -> int | None:
    """Least ``m <= bound`` such that ``lam`` fused with itself ``m`` times contains 0."""
    (lam,) = ctx.require(lam)
    zero = ctx.alcove[0]
    current = {lam}
    for m in range(1, bound + 1):
        if zero in current:
            return m
        nxt: set[Weight] = set()
        for w in current:
            nxt |= fusion_product(ctx, w, lam).keys()
        current = nxt
    return None


def center_pairing_table(ctx: AlcoveCtx) -> dict[Weight, dict[int, Fraction]]:
    cm = center(ctx.rs)
    return {g: {z: cm.pairing(g, z) % 1 for z in cm.elements} for g in ctx.alcove}
