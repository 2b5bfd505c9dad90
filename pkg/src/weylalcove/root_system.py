"""Root systems and weight lattices of the simple Lie algebras.

Weights are integer tuples of Dynkin labels (coordinates in the basis of
fundamental weights), numbered as in Humphreys.  Simple roots are the rows of
the Cartan matrix.  The invariant form is normalized so that the highest root
has squared length 2, which makes ``dual_coxeter == (rho, theta) + 1``.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

Weight = tuple[int, ...]

_RANK_RULES = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True, order=True)
class AlgebraId:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RULES:
            raise ValueError(f"unknown Lie family {self.family!r}; expected one of A-G")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> AlgebraId:
        """Parse strings such as ``"E7"``, ``"b13"`` or ``"D_6"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"cannot parse Lie algebra name {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _dynkin(alg: AlgebraId) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of simple roots and the edges of the Dynkin diagram (0-based)."""
    r = alg.rank
    two, one = Fraction(2), Fraction(1)
    chain = [(i, i + 1) for i in range(r - 1)]
    f = alg.family
    if f == "A":
        return [two] * r, chain
    if f == "B":
        return [two] * (r - 1) + [one], chain
    if f == "C":
        return [one] * (r - 1) + [two], chain
    if f == "D":
        edges = [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
        return [two] * r, edges
    if f == "E":
        # Bourbaki/Humphreys: 1-3-4-5-...-r with 2 attached to 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, r - 1)]
        return [two] * r, edges
    if f == "F":
        return [two, two, one, one], chain
    if f == "G":
        return [Fraction(2, 3), two], [(0, 1)]
    raise AssertionError(f)


def _frac_inverse(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def _lcm_denominator(values) -> int:
    d = 1
    for v in values:
        d = d * Fraction(v).denominator // math.gcd(d, Fraction(v).denominator)
    return d


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Static data for one simple Lie algebra; build with :func:`build_root_system`."""

    algebra: AlgebraId
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    root_lengths: tuple[Fraction, ...]  # (alpha_i, alpha_i)
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    positive_roots_simple: tuple[tuple[int, ...], ...]  # same roots in simple-root coordinates
    rho: Weight
    theta: Weight
    beta: Weight
    dual_coxeter: int
    long_simple: tuple[bool, ...]

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @cached_property
    def comarks(self) -> tuple[int, ...]:
        """``(lambda_i, theta)`` for each fundamental weight; the level of a weight is their dot product."""
        return tuple(int(sum(self.gram[i][j] * self.theta[j] for j in range(self.rank))) for i in range(self.rank))

    @cached_property
    def gram_denominator(self) -> int:
        return _lcm_denominator(x for row in self.gram for x in row)

    @cached_property
    def gram_int(self) -> np.ndarray:
        """``gram * gram_denominator`` as an integer matrix, for vectorized inner products."""
        d = self.gram_denominator
        return np.array([[int(x * d) for x in row] for row in self.gram], dtype=np.int64)

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in _frac_inverse(self.cartan))

    def fundamental(self, i: int, coeff: int = 1) -> Weight:
        """``coeff * lambda_i`` with 1-based Humphreys index ``i``."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"fundamental weight index {i} out of range 1..{self.rank}")
        return tuple(coeff if j == i - 1 else 0 for j in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def root_from_simple(self, coeffs: Sequence[int]) -> Weight:
        """Dynkin labels of ``sum coeffs[i] * alpha_{i+1}``."""
        if len(coeffs) != self.rank:
            raise ValueError("coefficient vector has wrong length")
        return tuple(int(sum(c * self.cartan[i][j] for i, c in enumerate(coeffs))) for j in range(self.rank))

    def to_simple_coords(self, mu: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``mu`` in the basis of simple roots (integral iff mu is in the root lattice)."""
        inv = self.inverse_cartan
        return tuple(sum(Fraction(mu[i]) * inv[i][j] for i in range(self.rank)) for j in range(self.rank))

    def in_root_lattice(self, mu: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.to_simple_coords(mu))

    def __repr__(self) -> str:
        return f"RootSystem({self.algebra})"


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for c in layer:
            labels = [sum(c[a] * cartan[a][j] for a in range(r)) for j in range(r)]
            for i in range(r):
                if c == simple[i]:
                    continue
                p = 0
                down = list(c)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - labels[i] > 0:
                    up = list(c)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda c: (sum(c), tuple(-x for x in c)))


@lru_cache(maxsize=None)
def build_root_system(algebra: AlgebraId | str) -> RootSystem:
    """Construct the root system for ``algebra`` (an :class:`AlgebraId` or a name like ``"E7"``)."""
    if isinstance(algebra, str):
        algebra = AlgebraId.parse(algebra)
    r = algebra.rank
    lengths, edges = _dynkin(algebra)
    b = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        b[i][i] = lengths[i]
    for i, j in edges:
        b[i][j] = b[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = [[int(2 * b[i][j] / b[j][j]) for j in range(r)] for i in range(r)]
    inv = _frac_inverse(cartan)
    gram = [[inv[j][i] * lengths[i] / 2 for j in range(r)] for i in range(r)]
    for i, j in itertools.product(range(r), repeat=2):
        if gram[i][j] != gram[j][i]:
            raise InvariantViolation("gram matrix not symmetric")

    pos_simple = _positive_roots(cartan)

    def labels(c):
        return tuple(sum(c[a] * cartan[a][j] for a in range(r)) for j in range(r))

    def sqlen(c):
        return sum(c[a] * c[bb] * b[a][bb] for a in range(r) for bb in range(r))

    pos = [labels(c) for c in pos_simple]
    theta = pos[-1]
    dominant = [(c, w) for c, w in zip(pos_simple, pos) if all(x >= 0 for x in w)]
    beta = min(dominant, key=lambda cw: sqlen(cw[0]))[1]
    rho = (1,) * r
    ip_rho_theta = sum(gram[i][j] * rho[i] * theta[j] for i in range(r) for j in range(r))
    if sqlen(pos_simple[-1]) != 2:
        raise InvariantViolation("highest root is not normalized to length 2")
    long_len = max(lengths)
    return RootSystem(
        algebra=algebra,
        cartan=tuple(tuple(row) for row in cartan),
        gram=tuple(tuple(row) for row in gram),
        root_lengths=tuple(lengths),
        simple_roots=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(pos),
        positive_roots_simple=tuple(pos_simple),
        rho=rho,
        theta=theta,
        beta=beta,
        dual_coxeter=int(ip_rho_theta) + 1,
        long_simple=tuple(x == long_len for x in lengths),
    )


def _check_rank(rs: RootSystem, *ws: Sequence[int]) -> None:
    for w in ws:
        if len(w) != rs.rank:
            raise ValueError(f"weight {tuple(w)} has length {len(w)}, expected rank {rs.rank}")


def inner_product(rs: RootSystem, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """Exact invariant form ``(mu, nu)`` of two weights given by Dynkin labels."""
    _check_rank(rs, mu, nu)
    g = rs.gram
    return sum((Fraction(mu[i] * nu[j]) * g[i][j] for i in range(rs.rank) for j in range(rs.rank) if mu[i] and nu[j]),
               Fraction(0))


def level(rs: RootSystem, mu: Sequence[int]) -> int:
    """``(mu, theta)``; always an integer on the weight lattice."""
    return sum(m * c for m, c in zip(mu, rs.comarks))


def reflect(rs: RootSystem, mu: Sequence[int], i: int) -> Weight:
    """Simple reflection ``s_i`` (0-based ``i``) applied to ``mu``."""
    a = rs.cartan[i]
    m = mu[i]
    return tuple(x - m * y for x, y in zip(mu, a))


def to_dominant(rs: RootSystem, mu: Sequence[int]) -> tuple[Weight, int, bool]:
    """Return ``(dominant, parity, on_wall)`` for the Weyl orbit of ``mu``.

    Reflects at the lowest-index negative label until none remain.  ``parity``
    is ``(-1)**reflections`` except that weights on a chamber wall (dominant
    representative has a zero label) report ``+1``.
    """
    _check_rank(rs, mu)
    w = tuple(int(x) for x in mu)
    sign = 1
    while True:
        i = next((j for j, x in enumerate(w) if x < 0), None)
        if i is None:
            break
        w = reflect(rs, w, i)
        sign = -sign
    on_wall = any(x == 0 for x in w)
    return w, (1 if on_wall else sign), on_wall


def weyl_orbit(rs: RootSystem, dominant: Sequence[int]) -> np.ndarray:
    """All elements of the Weyl orbit of a dominant weight, as an ``(n, rank)`` int array.

    Each non-dominant element is generated exactly once, from the parent
    obtained by reflecting at its lowest-index negative label.
    """
    dominant = tuple(dominant)
    if any(x < 0 for x in dominant):
        raise ValueError("weyl_orbit expects a dominant weight")
    a = rs.cartan_array
    layer = np.array([dominant], dtype=np.int64)
    out = [layer]
    while len(layer):
        pieces = []
        for i in range(rs.rank):
            sel = layer[layer[:, i] > 0]
            if len(sel):
                child = sel - sel[:, i:i + 1] * a[i]
                if i:
                    child = child[(child[:, :i] >= 0).all(axis=1)]
                pieces.append(child)
        layer = np.concatenate(pieces) if pieces else layer[:0]
        out.append(layer)
    return np.concatenate(out)


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``."""
    num = Fraction(1)
    lr = tuple(x + 1 for x in lam)
    for alpha in rs.positive_roots:
        num *= inner_product(rs, lr, alpha) / inner_product(rs, rs.rho, alpha)
    if num.denominator != 1:
        raise InvariantViolation(f"Weyl dimension of {lam} is not an integer: {num}")
    return int(num)


# --- center of the simply connected group -----------------------------------


@dataclass(frozen=True)
class CenterMap:
    """The center ``Z(G)`` realized as ``Lambda / Lambda_root``.

    Elements are identified by the 1-based index ``i`` of the fundamental
    weight ``lambda_i = ell(z)``; the identity is ``0`` and maps to the zero weight.
    """

    rs: RootSystem
    elements: tuple[int, ...]
    order_structure: tuple[int, ...]

    @property
    def generators(self) -> tuple[tuple[int, int], ...]:
        return tuple((z, z) for z in self.elements if z)

    def ell(self, z: int) -> Weight:
        return self.rs.zero() if z == 0 else self.rs.fundamental(z)

    def pairing(self, gamma: Sequence[int], z: int) -> Fraction:
        """``(gamma, ell(z))`` as an exact rational."""
        return inner_product(self.rs, gamma, self.ell(z))

    def multiply(self, z1: int, z2: int) -> int:
        # ell(z) values are compared modulo the lattice pairing integrally with every weight
        total = tuple(a + b for a, b in zip(self.ell(z1), self.ell(z2)))
        for z in self.elements:
            diff = tuple(a - b for a, b in zip(total, self.ell(z)))
            if all(inner_product(self.rs, self.rs.fundamental(j), diff).denominator == 1
                   for j in range(1, self.rs.rank + 1)):
                return z
        raise InvariantViolation("center is not closed under multiplication")

    def inverse(self, z: int) -> int:
        return next(w for w in self.elements if self.multiply(z, w) == 0)

    def __len__(self) -> int:
        return len(self.elements)


def center(rs: RootSystem) -> CenterMap:
    """Fundamental weights with ``(lambda_i, theta) == 1`` on long simple roots, plus the identity."""
    elems = [0] + [i + 1 for i, c in enumerate(rs.comarks) if c == 1 and rs.long_simple[i]]
    det = round(np.linalg.det(np.array(rs.cartan, dtype=float)))
    if len(elems) != det:
        raise InvariantViolation(f"center of {rs.algebra} has {len(elems)} elements but det(cartan) = {det}")
    cm = CenterMap(rs, tuple(elems), ())
    # cyclic iff some element has full order
    orders = []
    for z in elems:
        n, w = 1, z
        while w != 0:
            w = cm.multiply(w, z)
            n += 1
        orders.append(n)
    structure = (len(elems),) if max(orders) == len(elems) else (2, 2)
    return CenterMap(rs, tuple(elems), structure)


def subgroups_of_center(cm: CenterMap) -> list[frozenset[int]]:
    """Every subgroup of the center, sorted by size; each is generated by at most two elements."""

    def generated(gens):
        sub = {0}
        frontier = set(gens)
        while frontier:
            sub |= frontier
            frontier = {cm.multiply(a, b) for a in sub for b in sub} - sub
        return frozenset(sub)

    found = {generated((a, b)) for a in cm.elements for b in cm.elements}
    return sorted(found, key=lambda s: (len(s), sorted(s)))
