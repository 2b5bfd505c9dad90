"""Twists, quantum dimensions, Hopf-link S-matrix and degenerate objects.

Twists are exact: ``C_lam = exp(i pi t)`` with rational ``t`` kept mod 2.
Degeneracy is decided from twist ratios alone, so every verdict here is exact;
S-matrix entries are floating point unless the cyclotomic path is requested.
"""
from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .closed_subsets import ClosedSubset
from .cyclotomic import CyclotomicNumber
from .fusion import AlcoveCtx, dual_weight, fusion_product, fusion_table
from .root_system import InvariantViolation, Weight, inner_product

TwistExponent = Fraction  # t with C = exp(i pi t), 0 <= t < 2

IDENTITY_TOL = 1e-9
DET_TOL = 1e-6
MAX_CATALOG_SIZE = 24


def twist_exponent(ctx: AlcoveCtx, lam: Sequence[int]) -> TwistExponent:
    """``t = (lam, lam + 2 rho) / (k + h)`` reduced mod 2."""
    (lam,) = ctx.require(lam)
    rs = ctx.rs
    lr2 = tuple(a + 2 * b for a, b in zip(lam, rs.rho))
    return (inner_product(rs, lam, lr2) / ctx.shifted_level) % 2


def twist(ctx: AlcoveCtx, lam: Sequence[int]) -> complex:
    return cmath.exp(1j * math.pi * twist_exponent(ctx, lam))


def cyclotomic_order(ctx: AlcoveCtx) -> int:
    """``2 (k + h) D`` with ``D`` the common denominator of the Gram matrix."""
    return 2 * ctx.shifted_level * ctx.rs.gram_denominator


def twist_exact(ctx: AlcoveCtx, lam: Sequence[int]) -> CyclotomicNumber:
    n = cyclotomic_order(ctx)
    e = twist_exponent(ctx, lam) * n / 2
    if e.denominator != 1:
        raise InvariantViolation(f"twist of {lam} is not an {n}-th root of unity")
    return CyclotomicNumber.root_of_unity(n, int(e))


def _qdim_angles(ctx: AlcoveCtx, lam: Weight) -> tuple[list[Fraction], list[Fraction]]:
    rs = ctx.rs
    lr = tuple(a + 1 for a in lam)
    num = [inner_product(rs, lr, a) for a in rs.positive_roots]
    den = [inner_product(rs, rs.rho, a) for a in rs.positive_roots]
    return num, den


def qdim(ctx: AlcoveCtx, lam: Sequence[int]) -> float:
    """Quantum dimension from the q-deformed Weyl dimension formula (a sine product)."""
    (lam,) = ctx.require(lam)
    big = ctx.shifted_level
    num, den = _qdim_angles(ctx, lam)
    out = 1.0
    for a, b in zip(num, den):
        out *= math.sin(math.pi * a / big) / math.sin(math.pi * b / big)
    return out


def qdim_exact(ctx: AlcoveCtx, lam: Sequence[int]) -> CyclotomicNumber:
    """Quantum dimension as an element of Q(zeta_N), N = :func:`cyclotomic_order`."""
    (lam,) = ctx.require(lam)
    n = cyclotomic_order(ctx)
    d = ctx.rs.gram_denominator
    num, den = _qdim_angles(ctx, lam)
    top, bottom = Counter(int(a * d) for a in num), Counter(int(b * d) for b in den)
    common = top & bottom
    top, bottom = top - common, bottom - common

    def product(powers: Counter) -> CyclotomicNumber:
        out = CyclotomicNumber.rational(n, 1)
        for p, mult in sorted(powers.items()):
            factor = CyclotomicNumber.root_of_unity(n, p) - CyclotomicNumber.root_of_unity(n, -p)
            out = out * factor**mult
        return out

    if sum(top.values()) != sum(bottom.values()):
        raise InvariantViolation("unbalanced sine product")
    return product(top) / product(bottom)


def s_entry(ctx: AlcoveCtx, lam: Sequence[int], gam: Sequence[int], exact: bool = False):
    """Hopf-link invariant ``sum_mu N_{lam,gam}^mu C_mu C_lam^-1 C_gam^-1 qdim(mu)``."""
    lam, gam = ctx.require(lam, gam)
    prod = fusion_product(ctx, lam, gam)
    if exact:
        total = CyclotomicNumber.rational(cyclotomic_order(ctx), 0)
        inv = (twist_exact(ctx, lam) * twist_exact(ctx, gam)).inverse()
        for mu, m in prod.items():
            total = total + twist_exact(ctx, mu) * qdim_exact(ctx, mu) * m
        return total * inv
    t0 = twist_exponent(ctx, lam) + twist_exponent(ctx, gam)
    return sum(m * cmath.exp(1j * math.pi * (twist_exponent(ctx, mu) - t0)) * qdim(ctx, mu)
               for mu, m in prod.items())


def s_matrix(ctx: AlcoveCtx, weights: Sequence[Weight] | None = None, exact: bool = False):
    """S-matrix over ``weights`` (default: the whole alcove).

    Numeric mode returns a complex ndarray; exact mode a nested list of
    :class:`CyclotomicNumber`.
    """
    ws = list(ctx.alcove if weights is None else ctx.require(*weights))
    if weights is None:
        fusion_table(ctx)
    n = len(ws)
    if exact:
        rows = [[None] * n for _ in range(n)]
        for i, j in itertools.combinations_with_replacement(range(n), 2):
            rows[i][j] = rows[j][i] = s_entry(ctx, ws[i], ws[j], exact=True)
        return rows
    s = np.zeros((n, n), dtype=complex)
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        s[i, j] = s[j, i] = s_entry(ctx, ws[i], ws[j])
    return s


# --- degenerate objects --------------------------------------------------------


@dataclass(frozen=True)
class DegenerateObject:
    weight: Weight
    parity: str  # "even" or "odd"
    invertible: bool


@dataclass(frozen=True)
class RingTag:
    kind: str  # "cyclic", "klein", "dihedral", "unidentified"
    order: int | None = None  # n for Z/n, d for the dihedral-type group
    assignment: tuple = ()  # (weight, catalog label) pairs for identified rings

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return "trivial group" if self.order == 1 else f"Z/{self.order}"
        if self.kind == "klein":
            return "Z/2 x Z/2"
        if self.kind == "dihedral":
            return f"<x,y | x^2 = y^2 = (xy)^{self.order} = 1>"
        return "unidentified"


def _members(subset) -> tuple[Weight, ...]:
    return subset.members if isinstance(subset, ClosedSubset) else tuple(tuple(w) for w in subset)


def is_degenerate(ctx: AlcoveCtx, subset, lam: Sequence[int]) -> bool:
    """True when the double braiding of ``lam`` with every member is trivial.

    Checked summand by summand: ``t_mu - t_lam - t_gam = 0 (mod 2)`` for every
    ``mu`` in ``lam (x) gam``.
    """
    members = _members(subset)
    lam = tuple(lam)
    if lam not in members:
        raise ValueError(f"{lam} is not a member of the subset")
    t_lam = twist_exponent(ctx, lam)
    for gam in members:
        t_gam = twist_exponent(ctx, gam)
        for mu in fusion_product(ctx, lam, gam):
            if (twist_exponent(ctx, mu) - t_lam - t_gam) % 2 != 0:
                return False
    return True


def is_invertible(ctx: AlcoveCtx, lam: Sequence[int]) -> bool:
    return set(fusion_product(ctx, lam, dual_weight(ctx, lam))) == {ctx.alcove[0]}


def degenerate_report(ctx: AlcoveCtx, subset) -> list[DegenerateObject]:
    out = []
    for lam in _members(subset):
        if not is_degenerate(ctx, subset, lam):
            continue
        t = twist_exponent(ctx, lam)
        if t not in (0, 1):
            raise InvariantViolation(f"degenerate object {lam} has twist exponent {t}, not 0 or 1")
        out.append(DegenerateObject(lam, "even" if t == 0 else "odd", is_invertible(ctx, lam)))
    return out


# --- catalog of small fusion rings ---------------------------------------------


@dataclass
class _Ring:
    labels: list[str]
    qdims: list[int]
    rules: dict[tuple[int, int], Counter]  # (a, b) -> Counter of c


def _cyclic_ring(n: int) -> _Ring:
    return _Ring([f"g^{a}" for a in range(n)], [1] * n,
                 {(a, b): Counter({(a + b) % n: 1}) for a in range(n) for b in range(n)})


def _klein_ring() -> _Ring:
    return _Ring(["1", "x", "y", "xy"], [1] * 4,
                 {(a, b): Counter({a ^ b: 1}) for a in range(4) for b in range(4)})


def _dihedral_ring(d: int) -> _Ring:
    """Representation ring of ``<x,y | x^2 = y^2 = (xy)^d = 1>`` for odd ``d``."""
    h = (d - 1) // 2
    labels = ["1", "sign"] + [f"rho_{a}" for a in range(1, h + 1)]

    def two_dim(c: int) -> Counter:
        c = c % d
        c = min(c, d - c)
        return Counter({0: 1, 1: 1}) if c == 0 else Counter({c + 1: 1})

    rules = {}
    for a in range(len(labels)):
        for b in range(len(labels)):
            if a < 2 and b < 2:
                rules[a, b] = Counter({a ^ b: 1})
            elif a < 2:
                rules[a, b] = Counter({b: 1})
            elif b < 2:
                rules[a, b] = Counter({a: 1})
            else:
                ia, ib = a - 1, b - 1
                rules[a, b] = two_dim(ia + ib) + two_dim(ia - ib)
    return _Ring(labels, [1, 1] + [2] * h, rules)


def _match(objs: list[Weight], dims: list[int], rules: dict, ring: _Ring) -> dict | None:
    """Backtracking bijection objs -> ring objects preserving unit, qdims and structure constants."""
    n = len(objs)
    if n != len(ring.labels) or sorted(dims) != sorted(ring.qdims):
        return None
    assign: dict[int, int] = {0: 0}
    used = {0}

    def consistent() -> bool:
        for a, b in itertools.product(assign, repeat=2):
            mine = rules[a, b]
            theirs = ring.rules[assign[a], assign[b]]
            mapped = Counter()
            for c, m in mine.items():
                if c in assign:
                    mapped[assign[c]] = m
            for c, m in theirs.items():
                back = [x for x, y in assign.items() if y == c]
                if back and mine.get(back[0], 0) != m:
                    return False
            if any(theirs.get(c, 0) != m for c, m in mapped.items()):
                return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            return True
        if i in assign:
            return rec(i + 1)
        for target in range(n):
            if target in used or ring.qdims[target] != dims[i]:
                continue
            assign[i] = target
            used.add(target)
            if consistent() and rec(i + 1):
                return True
            del assign[i]
            used.discard(target)
        return False

    return dict(assign) if rec(1) else None


def identify_degenerate_ring(ctx: AlcoveCtx, report: Iterable[DegenerateObject]) -> RingTag:
    """Identify the fusion ring spanned by the degenerate objects against a small catalog."""
    objs = [d.weight for d in report]
    objs.sort(key=ctx.index.__getitem__)
    if not objs or objs[0] != ctx.alcove[0]:
        raise InvariantViolation("degenerate set must contain the unit")
    pos = {w: i for i, w in enumerate(objs)}
    rules = {}
    for a, b in itertools.product(range(len(objs)), repeat=2):
        prod = fusion_product(ctx, objs[a], objs[b])
        if not set(prod) <= pos.keys():
            raise InvariantViolation("degenerate objects are not closed under fusion")
        rules[a, b] = Counter({pos[w]: m for w, m in prod.items()})
    if len(objs) > MAX_CATALOG_SIZE:
        return RingTag("unidentified")
    raw = [qdim(ctx, w) for w in objs]
    dims = [round(x) for x in raw]
    if any(abs(x - y) > 1e-6 for x, y in zip(raw, dims)):
        return RingTag("unidentified")
    n = len(objs)
    candidates = [("cyclic", n, _cyclic_ring(n))]
    if n == 4:
        candidates.append(("klein", None, _klein_ring()))
    d = 2 * n - 3
    if d >= 3:
        candidates.append(("dihedral", d, _dihedral_ring(d)))
    for kind, order, ring in candidates:
        found = _match(objs, dims, rules, ring)
        if found is not None:
            return RingTag(kind, order, tuple((objs[i], ring.labels[j]) for i, j in sorted(found.items())))
    return RingTag("unidentified")


# --- verdicts -------------------------------------------------------------------

MODULAR_AS_IS = "ModularAsIs"
MODULAR_AFTER_QUOTIENT = "ModularAfterQuotient"
SPIN_MODULAR = "SpinModular"


@dataclass(frozen=True)
class ModularityVerdict:
    verdict: str
    degenerates: tuple[DegenerateObject, ...]
    ring: RingTag


def modularity_report(ctx: AlcoveCtx, subset) -> ModularityVerdict:
    report = degenerate_report(ctx, subset)
    ring = identify_degenerate_ring(ctx, report)
    if len(report) == 1:
        verdict = MODULAR_AS_IS
    elif any(d.parity == "odd" for d in report):
        verdict = SPIN_MODULAR
    else:
        verdict = MODULAR_AFTER_QUOTIENT
    return ModularityVerdict(verdict, tuple(report), ring)


@dataclass
class ModularData:
    subset: tuple[Weight, ...]
    qdims: dict[Weight, float]
    twists: dict[Weight, TwistExponent]
    s_matrix: object  # complex ndarray, or nested lists of CyclotomicNumber
    degenerates: list[DegenerateObject]
    verdict: ModularityVerdict = field(default=None)


def modular_data(ctx: AlcoveCtx, subset, exact: bool = False) -> ModularData:
    members = _members(subset)
    verdict = modularity_report(ctx, members)
    return ModularData(
        subset=members,
        qdims={w: qdim(ctx, w) for w in members},
        twists={w: twist_exponent(ctx, w) for w in members},
        s_matrix=s_matrix(ctx, members, exact=exact),
        degenerates=list(verdict.degenerates),
        verdict=verdict,
    )


# --- identities -----------------------------------------------------------------


@dataclass
class SIdentityReport:
    product_identity: bool
    qdim_orthogonality: bool
    normalized_bound: bool
    nondegenerate: bool
    det_abs: float
    failures: list[str]

    @property
    def ok(self) -> bool:
        return self.product_identity and self.qdim_orthogonality and self.normalized_bound and self.nondegenerate


def verify_s_identities(ctx: AlcoveCtx, tol: float = IDENTITY_TOL, det_tol: float = DET_TOL) -> SIdentityReport:
    """Check the fusion/S-matrix identities on the full alcove.

    (a) ``S_{lam (x) gam, mu} = S_{lam,mu} S_{gam,mu} / qdim(mu)``;
    (b) ``sum_gam qdim(gam) S_{lam,gam} = delta_{lam,0} sum_gam qdim(gam)^2``;
    (c) ``|S_{lam,gam} / (qdim lam qdim gam)| <= 1``, and a root of unity when equal to 1;
    (d) ``|det S| > det_tol``.
    Comparisons use ``tol * max(1, |expected|)``.
    """
    ws = ctx.alcove
    n = len(ws)
    s = s_matrix(ctx)
    d = np.array([qdim(ctx, w) for w in ws])
    failures: list[str] = []

    def close(a, b) -> bool:
        return abs(a - b) <= tol * max(1.0, abs(b))

    ok_a = True
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        prod = fusion_product(ctx, ws[i], ws[j])
        for m in range(n):
            lhs = sum(c * s[ctx.index[w], m] for w, c in prod.items())
            rhs = s[i, m] * s[j, m] / d[m]
            if not close(lhs, rhs):
                ok_a = False
                failures.append(f"(a) {ws[i]} x {ws[j]} at {ws[m]}: {lhs} != {rhs}")

    total = float(np.sum(d**2))
    ok_b = True
    for i in range(n):
        val = complex(np.dot(d, s[i]))
        expected = total if i == 0 else 0.0
        if not abs(val - expected) <= tol * max(1.0, total):
            ok_b = False
            failures.append(f"(b) row {ws[i]}: {val} != {expected}")

    ok_c = True
    order = 2 * cyclotomic_order(ctx)
    norm = s / np.outer(d, d)
    for i, j in itertools.product(range(n), repeat=2):
        z = norm[i, j]
        if abs(z) > 1 + tol:
            ok_c = False
            failures.append(f"(c) |S~| = {abs(z)} > 1 at {ws[i]}, {ws[j]}")
        elif abs(abs(z) - 1) <= tol and abs(z**order - 1) > 1e-6:
            ok_c = False
            failures.append(f"(c) unimodular S~ at {ws[i]}, {ws[j]} is not a root of unity")

    det = abs(np.linalg.det(s))
    ok_d = det > det_tol
    if not ok_d:
        failures.append(f"(d) |det S| = {det}")
    return SIdentityReport(ok_a, ok_b, ok_c, ok_d, float(det), failures)


def normalized_s(ctx: AlcoveCtx, lam, gam) -> complex:
    return s_entry(ctx, lam, gam) / (qdim(ctx, lam) * qdim(ctx, gam))
