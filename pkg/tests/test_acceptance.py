"""Acceptance criteria, one test per criterion.

Each test records a ``[PASS]``/``[FAIL]`` line shown in the "acceptance criteria"
section of the pytest summary.  Criteria 1 and 8 compare against printed
reference data that contains errors; they are strict xfails, and the regression
tests below pin down exactly which printed rows disagree and why.
"""
import pytest

from weylalcove import acceptance
from weylalcove.fusion import alcove_context, fusion_product
from weylalcove.root_system import build_root_system, inner_product


@pytest.fixture(scope="session")
def results(tmp_path_factory):
    cache = str(tmp_path_factory.mktemp("characters"))
    store = {}

    def get(number):
        if number not in store:
            if number in (4, 6):
                r4, r6 = acceptance.criterion_4_and_6(cache)
                store[4], store[6] = r4, r6
            else:
                fn = getattr(acceptance, f"criterion_{number}")
                store[number] = acceptance._timed(fn, cache) if number not in (3, 8) else acceptance._timed(fn)
        return store[number]

    return get


def record(result, lines):
    lines.append(result.line())
    return result


GOLDEN_ERRATA = pytest.mark.xfail(
    strict=True, reason="printed B-type level-2 alcove omits lambda_1 + lambda_l; see test_golden_failures_are_spinor_rows")
CHART_ERRATA = pytest.mark.xfail(
    strict=True, reason="printed chart lists witness roots and has typos; see test_chart_deviations_are_known")


@GOLDEN_ERRATA
def test_criterion_1_golden_tables(results, acceptance_lines):
    r = record(results(1), acceptance_lines)
    assert r.ok, r.failures


def test_criterion_2_twists(results, acceptance_lines):
    r = record(results(2), acceptance_lines)
    assert r.ok, r.failures


def test_criterion_3_inner_products(results, acceptance_lines):
    r = record(results(3), acceptance_lines)
    assert r.ok, r.failures


def test_criterion_4_classification(results, acceptance_lines):
    r = record(results(4), acceptance_lines)
    assert r.ok, r.failures


def test_criterion_5_verdicts(results, acceptance_lines):
    r = record(results(5), acceptance_lines)
    assert r.ok, r.failures


def test_criterion_6_min_power(results, acceptance_lines):
    r = record(results(6), acceptance_lines)
    assert r.ok, r.failures


def test_criterion_7_properties(results, acceptance_lines):
    r = record(results(7), acceptance_lines)
    assert r.ok, r.failures


@CHART_ERRATA
def test_criterion_8_chart(results, acceptance_lines):
    r = record(results(8), acceptance_lines)
    assert r.ok, r.failures


# --- regression pins for the two reference-data mismatches --------------------------


def spinor_rows(l):
    rs = build_root_system(f"B{l}")
    lam1, laml = rs.fundamental(1), rs.fundamental(l)
    return {(lam1, laml), (laml, lam1), (rs.fundamental(1, 2), laml), (laml, rs.fundamental(1, 2))}


def test_golden_failures_are_spinor_rows(results):
    r = results(1)
    bad = set(r.failures)
    expected_bad = set()
    for name, gen in acceptance.GOLDEN_INSTANCES:
        ctx = alcove_context(name, 2)
        rows = gen()
        if name.startswith("B"):
            l = ctx.rs.rank
            rows = [p for p in rows if (p[0], p[1]) in spinor_rows(l)]
            assert rows, name
            _, fails = acceptance.compare_golden(name, rows)
            assert len(fails) == len(rows)
            expected_bad |= set(fails)
    assert bad == expected_bad


@pytest.mark.parametrize("l", [3, 4, 5, 13])
def test_spinor_products_include_the_omitted_weight(l):
    ctx = alcove_context(f"B{l}", 2)
    rs = ctx.rs
    lam1, laml = rs.fundamental(1), rs.fundamental(l)
    both = tuple(a + b for a, b in zip(lam1, laml))
    assert both in ctx
    assert fusion_product(ctx, lam1, laml) == {laml: 1, both: 1}
    assert fusion_product(ctx, rs.fundamental(1, 2), laml) == {both: 1}


def test_golden_non_spinor_rows_match():
    for name, gen in acceptance.GOLDEN_INSTANCES:
        rows = gen()
        if name.startswith("B"):
            rows = [p for p in rows if (p[0], p[1]) not in spinor_rows(int(name[1:]))]
        _, fails = acceptance.compare_golden(name, rows)
        assert fails == [], fails


def from_simple(rs, coeffs):
    w = tuple(sum(c * rs.cartan[i][j] for i, c in enumerate(coeffs)) for j in range(rs.rank))
    assert tuple(rs.to_simple_coords(w)) == tuple(coeffs)
    return w


# rows where the printed chart omits valid shifts but lists only genuine ones
OMISSIONS = {("D6", 2), ("D6", 4), ("E6", 4), ("E7", 4), ("E7", 5), ("E8", 3), ("E8", 4), ("E8", 5), ("E8", 7), ("F4", 2)}
# rows whose printed entries are not valid shifts at all
TYPOS = {("E7", 3), ("E7", 6), ("E8", 1), ("E8", 6)}


def test_chart_deviations_are_known():
    seen = set()
    for name, printed in acceptance.CHART.items():
        rs = build_root_system(name)
        for i, exp, got in acceptance.chart_comparison(name, printed):
            if exp == got:
                continue
            seen.add((name, i))
            if (name, i) in OMISSIONS:
                assert set(exp) < set(got)
            else:
                assert (name, i) in TYPOS
                lam = rs.fundamental(i)
                for e in set(exp) - set(got):
                    alpha = from_simple(rs, e)
                    is_root = alpha in rs.positive_roots or tuple(-x for x in alpha) in rs.positive_roots
                    w = tuple(a + b for a, b in zip(lam, alpha))
                    assert not is_root or min(w) < 0 or sum(c * m for c, m in zip(w, rs.comarks)) > rs.comarks[i - 1]
    assert seen == OMISSIONS | TYPOS


def test_printed_omission_witnesses_land_in_alcove():
    rs = build_root_system("F4")
    # lambda_2 - (a1 + 2a2 + 2a3 + a4) = lambda_3
    alpha = from_simple(rs, (1, 2, 2, 1))
    assert tuple(a - b for a, b in zip(rs.fundamental(2), alpha)) == rs.fundamental(3)
    assert inner_product(rs, alpha, alpha) == 1
