import json

import pytest
from hypothesis import given, strategies as st

from weylalcove import characters
from weylalcove.characters import (
    CACHE_VERSION,
    CharacterTable,
    all_weights,
    cache_load,
    cache_store,
    dimension_from_table,
    dominant_character,
    weight_multiplicity,
)
from weylalcove.root_system import build_root_system, to_dominant, weyl_dimension


def test_trivial_representation():
    rs = build_root_system("E7")
    assert dominant_character(rs, rs.zero()).entries == {rs.zero(): 1}


def test_e8_adjoint():
    rs = build_root_system("E8")
    table = dominant_character(rs, rs.theta)
    assert table.entries == {rs.theta: 1, rs.zero(): 8}
    assert dimension_from_table(rs, table) == 248


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "D5", "E6", "F4", "G2"])
def test_adjoint_zero_weight_equals_rank(name):
    rs = build_root_system(name)
    assert weight_multiplicity(rs, rs.theta, rs.zero()) == rs.rank


@pytest.mark.parametrize("n", range(0, 9))
def test_rank_one_closed_form(n):
    rs = build_root_system("A1")
    expected = {(m,): 1 for m in range(n % 2, n + 1, 2)}
    assert dominant_character(rs, (n,)).entries == expected


@pytest.mark.parametrize("name,lam", [
    ("A3", (1, 1, 0)), ("B3", (1, 0, 1)), ("C3", (0, 1, 1)), ("D4", (1, 0, 1, 0)), ("G2", (2, 1)),
    ("F4", (0, 0, 0, 1)), ("E6", (1, 0, 0, 0, 0, 1)), ("E7", (0, 0, 0, 0, 0, 1, 0)), ("E8", (1,) + (0,) * 7),
])
def test_total_dimension_matches_weyl_formula(name, lam):
    rs = build_root_system(name)
    table = dominant_character(rs, lam)
    assert dimension_from_table(rs, table) == weyl_dimension(rs, lam)
    ws, ms = all_weights(rs, lam)
    assert int(ms.sum()) == weyl_dimension(rs, lam)


@pytest.mark.parametrize("name,lam", [("B3", (0, 1, 1)), ("D4", (1, 1, 0, 0)), ("G2", (1, 1))])
def test_weights_lie_below_highest(name, lam):
    rs = build_root_system(name)
    for mu in dominant_character(rs, lam).entries:
        coeffs = rs.to_simple_coords(tuple(a - b for a, b in zip(lam, mu)))
        assert all(c.denominator == 1 and c >= 0 for c in coeffs)


@given(st.sampled_from([("B3", (1, 0, 1)), ("A3", (2, 0, 1)), ("G2", (1, 1))]), st.data())
def test_multiplicity_is_weyl_invariant(case, data):
    name, lam = case
    rs = build_root_system(name)
    mu = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    assert weight_multiplicity(rs, lam, mu) == weight_multiplicity(rs, lam, to_dominant(rs, mu)[0])
    i = data.draw(st.integers(0, rs.rank - 1))
    from weylalcove.root_system import reflect
    assert weight_multiplicity(rs, lam, reflect(rs, mu, i)) == weight_multiplicity(rs, lam, mu)


def test_lattice_obstruction():
    rs = build_root_system("A2")
    assert weight_multiplicity(rs, (1, 0), (0, 0)) == 0


def test_cache_round_trip(tmp_path):
    rs = build_root_system("E8")
    table = dominant_character(rs, rs.theta)
    path = cache_store(tmp_path, rs, table)
    assert path.exists()
    assert cache_load(tmp_path, rs, rs.theta) == table


def test_cache_miss_computes_then_stores(tmp_path, monkeypatch):
    rs = build_root_system("G2")
    lam = (3, 1)
    monkeypatch.setattr(characters, "_memory", {})
    assert cache_load(tmp_path, rs, lam) is None
    table = dominant_character(rs, lam, cache_dir=tmp_path)
    assert cache_load(tmp_path, rs, lam) == table


def test_cache_rejects_version_mismatch_and_corruption(tmp_path):
    rs = build_root_system("A2")
    table = dominant_character(rs, (1, 1))
    path = cache_store(tmp_path, rs, table)
    doc = json.loads(path.read_text())
    doc["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(doc))
    assert cache_load(tmp_path, rs, (1, 1)) is None
    path.write_text("{not json")
    assert cache_load(tmp_path, rs, (1, 1)) is None


def test_cache_env_var(tmp_path, monkeypatch):
    rs = build_root_system("C2")
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path))
    monkeypatch.setattr(characters, "_memory", {})
    dominant_character(rs, (2, 1))
    assert any(tmp_path.iterdir())


def test_highest_weight_must_be_simple():
    with pytest.raises(Exception):
        CharacterTable((1,), {(1,): 2})
