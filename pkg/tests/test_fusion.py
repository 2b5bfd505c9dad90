from itertools import product

import pytest
from hypothesis import given, strategies as st

from weylalcove.fusion import (
    affine_to_alcove,
    alcove_context,
    apply_simple_current,
    dual_weight,
    enumerate_alcove,
    fusion_coefficient,
    fusion_product,
    fusion_product_direct,
    simple_current_weight,
)
from weylalcove.root_system import build_root_system, center, level, weyl_dimension


def L(ctx, *terms):
    """Weight from (index, coefficient) pairs or bare indices."""
    w = [0] * ctx.rs.rank
    for s in terms:
        i, c = (s, 1) if isinstance(s, int) else s
        w[i - 1] += c
    return tuple(w)


def test_e8_alcove():
    ctx = alcove_context("E8", 2)
    assert set(ctx.alcove) == {L(ctx), L(ctx, 1), L(ctx, 8)}


def test_e7_alcove():
    ctx = alcove_context("E7", 2)
    assert set(ctx.alcove) == {L(ctx), L(ctx, (7, 2)), L(ctx, 1), L(ctx, 2), L(ctx, 6), L(ctx, 7)}


@pytest.mark.parametrize("l", [3, 4, 5, 7])
def test_b_alcove_at_level_two(l):
    ctx = alcove_context(f"B{l}", 2)
    expected = {L(ctx, i) for i in range(1, l + 1)} | {L(ctx), L(ctx, (1, 2)), L(ctx, (l, 2))}
    # lambda_1 + lambda_l also has level 1 + 1 = 2
    expected.add(L(ctx, 1, l))
    assert set(ctx.alcove) == expected and len(ctx) == l + 4


@pytest.mark.parametrize("name", ["A1", "C4", "E6", "G2"])
def test_level_zero_alcove_is_trivial(name):
    assert alcove_context(name, 0).alcove == (build_root_system(name).zero(),)


@pytest.mark.parametrize("name,k", [("A2", 3), ("C3", 2), ("G2", 4), ("D4", 2)])
def test_alcove_matches_brute_force(name, k):
    rs = build_root_system(name)
    brute = {w for w in product(range(k + 1), repeat=rs.rank) if level(rs, w) <= k}
    ctx = alcove_context(name, k)
    assert set(ctx.alcove) == brute
    assert ctx.alcove[0] == rs.zero()
    assert all(ctx.index[w] == i for i, w in enumerate(ctx.alcove))


def test_fold_rank_one():
    ctx = alcove_context("A1", 2)
    assert affine_to_alcove(ctx, (1,)) == ((1,), 1)
    assert affine_to_alcove(ctx, (-1,)) is None
    assert affine_to_alcove(ctx, (3,)) is None
    assert affine_to_alcove(ctx, (4,)) == ((2,), -1)
    with pytest.raises(ValueError):
        affine_to_alcove(ctx, (1, 2))


def test_level_two_examples():
    b = alcove_context("B5", 2)
    assert fusion_product(b, L(b, 1), L(b, 1)) == {L(b): 1, L(b, (1, 2)): 1, L(b, 2): 1}
    e7 = alcove_context("E7", 2)
    assert fusion_product(e7, L(e7, 7), L(e7, 7)) == {
        L(e7): 1, e7.rs.theta: 1, L(e7, (7, 2)): 1, L(e7, 6): 1}
    e8 = alcove_context("E8", 2)
    assert fusion_product(e8, L(e8, 1), L(e8, 1)) == {L(e8): 1}
    d = alcove_context("D6", 2)
    assert fusion_product(d, L(d, 1), L(d, 1)) == {L(d): 1, d.rs.theta: 1, L(d, (1, 2)): 1}


def test_rejects_weights_outside_alcove():
    ctx = alcove_context("A2", 2)
    with pytest.raises(ValueError):
        fusion_product(ctx, (3, 0), (0, 0))


def su2_oracle(k, a, b):
    """Level-k SU(2) rule: |a-b| <= c <= min(a+b, 2k-a-b), c = a+b mod 2."""
    return {(c,): 1 for c in range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2)}


@pytest.mark.parametrize("k", range(1, 9))
def test_rank_one_closed_form(k):
    ctx = alcove_context("A1", k)
    for a in range(k + 1):
        for b in range(k + 1):
            assert fusion_product(ctx, (a,), (b,)) == su2_oracle(k, a, b)


@pytest.mark.parametrize("name,k", [("A2", 3), ("B3", 2), ("G2", 3), ("C3", 2)])
def test_fast_path_matches_direct(name, k):
    ctx = enumerate_alcove(build_root_system(name), k)
    for a in ctx.alcove:
        for b in ctx.alcove:
            assert fusion_product(ctx, a, b) == fusion_product_direct(ctx, a, b)


@pytest.mark.parametrize("name", ["A3", "B4", "G2", "F4"])
def test_large_level_is_tensor_product(name):
    # above the stable range nothing gets truncated, so dimensions add up
    rs = build_root_system(name)
    ctx = alcove_context(name, 6)
    lam, gam = rs.fundamental(1), rs.fundamental(rs.rank)
    vec = fusion_product(ctx, lam, gam)
    assert sum(m * weyl_dimension(rs, w) for w, m in vec.items()) == weyl_dimension(rs, lam) * weyl_dimension(rs, gam)


def test_duals():
    e7 = alcove_context("E7", 2)
    assert all(dual_weight(e7, w) == w for w in e7.alcove)
    for k in range(1, 5):
        a2 = alcove_context("A2", k)
        assert dual_weight(a2, (1, 0)) == (0, 1)
        assert a2.alcove[0] in fusion_product(a2, (1, 0), (0, 1))


def test_e7_simple_current():
    ctx = alcove_context("E7", 2)
    z = next(z for z in center(ctx.rs).elements if z != 0)
    assert simple_current_weight(ctx, z) == L(ctx, (7, 2))
    assert apply_simple_current(ctx, z, ctx.rs.theta) == L(ctx, 6)
    assert apply_simple_current(ctx, 0, ctx.rs.theta) == ctx.rs.theta
    with pytest.raises(ValueError):
        apply_simple_current(ctx, 99, ctx.rs.theta)


SMALL = [("A1", 5), ("A2", 3), ("A3", 2), ("B3", 2), ("C3", 2), ("G2", 3), ("D4", 2), ("E7", 2)]


@st.composite
def triples(draw):
    ctx = alcove_context(*draw(st.sampled_from(SMALL)))
    pick = st.sampled_from(ctx.alcove)
    return ctx, draw(pick), draw(pick), draw(pick)


@given(triples())
def test_ring_axioms(t):
    ctx, a, b, c = t
    zero = ctx.alcove[0]
    assert fusion_product(ctx, zero, a) == {a: 1}
    assert fusion_product(ctx, a, b) == fusion_product(ctx, b, a)
    left = {}
    for w, m in fusion_product(ctx, a, b).items():
        for v, n in fusion_product(ctx, w, c).items():
            left[v] = left.get(v, 0) + m * n
    right = {}
    for w, m in fusion_product(ctx, b, c).items():
        for v, n in fusion_product(ctx, a, w).items():
            right[v] = right.get(v, 0) + m * n
    assert left == right
    # N_{ab}^c = N_{a c^dual}^{b^dual}
    assert fusion_coefficient(ctx, a, b, c) == fusion_coefficient(ctx, a, dual_weight(ctx, c), dual_weight(ctx, b))
    assert fusion_coefficient(ctx, a, dual_weight(ctx, a), zero) == 1


@given(triples())
def test_multiplicities_bounded_by_tensor_product(t):
    from weylalcove.characters import weight_multiplicity
    ctx, a, b, _ = t
    for w, m in fusion_product(ctx, a, b).items():
        assert 0 < m
        diff = tuple(x - y for x, y in zip(w, a))
        assert m <= weight_multiplicity(ctx.rs, b, diff)


def test_memoized_context():
    assert alcove_context("E7", 2) is alcove_context("e7", 2)
    assert "size=6" in repr(alcove_context("E7", 2))
