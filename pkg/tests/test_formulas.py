import math

import pytest
from hypothesis import given, strategies as st

from wheelturan import formulas as fm
from wheelturan.constructions import turan_graph
from wheelturan.errors import DomainError


@pytest.mark.parametrize("n,p,expected", [(6, 3, 12), (10, 3, 33), (7, 1, 0), (0, 3, 0)])
def test_turan_edges(n, p, expected):
    assert fm.turan_edges(n, p) == expected


@given(st.integers(0, 40), st.integers(1, 8))
def test_turan_edges_matches_built_graph(n, p):
    assert fm.turan_edges(n, p) == turan_graph(n, p).edge_count


def test_turan_rejects_p0():
    with pytest.raises(DomainError):
        fm.turan_edges(5, 0)


@pytest.mark.parametrize("args,expected", [((0, 5, 5, 3), 31), ((1, 5, 4, 3), 35), ((0, 2, 2, 2), 6)])
def test_family_edges(args, expected):
    assert fm.family_edges(*args) == expected


@pytest.mark.parametrize("args", [(0, 3, 4, 2), (0, 3, 1, 2), (-1, 4, 3, 2), (0, 4, 3, 1)])
def test_family_edges_domain(args):
    with pytest.raises(DomainError):
        fm.family_edges(*args)


def test_ex_odd_wheel_examples():
    assert fm.ex_odd_wheel(10, 2).value == 30
    r = fm.ex_odd_wheel(10, 3)
    assert r.value == 31 and r.optimizers["n_0"] == 5 and r.asymptotic
    r0 = fm.ex_odd_wheel(0, 3)
    assert r0.value == 0 and r0.note
    with pytest.raises(DomainError):
        fm.ex_odd_wheel(10, 1)


@given(st.integers(4, 80), st.integers(3, 6))
def test_ex_odd_wheel_optimizer_reproduces_value(n, k):
    r = fm.ex_odd_wheel(n, k)
    n0 = r.optimizers["n_0"]
    assert n0 * (n - n0) + (k - 1) * n0 // 2 + 1 == r.value
    # smallest optimizer
    assert all(x * (n - x) + (k - 1) * x // 2 + 1 < r.value for x in range(n0))


def test_ex_m_odd_wheels_examples():
    r = fm.ex_m_odd_wheels(20, 3, 2)
    assert (r.value, r.optimizers["n_0"]) == (120, 10)
    assert fm.ex_m_odd_wheels(10, 3, 1).value == 31
    with pytest.raises(DomainError):
        fm.ex_m_odd_wheels(4, 3, 2)


@given(st.integers(10, 120), st.integers(3, 5))
def test_m1_reduction(n, k):
    assert fm.ex_m_odd_wheels(n, k, 1).value == fm.ex_odd_wheel(n, k).value


@given(st.integers(8, 120), st.integers(2, 5), st.integers(1, 4))
def test_f_value_is_family_maximum(n, k, m):
    # independent route: maximise family_edges over all valid part splits
    t = m - 1
    rest = n - t
    best = max(fm.family_edges(t, rest - n2, n2, k) for n2 in range(2, rest // 2 + 1))
    assert fm.f_value(n, t, k).value == best == fm.ex_m_odd_wheels(n, k, m).value


@given(st.integers(20, 200), st.integers(2, 5), st.integers(1, 3))
def test_closed_form_candidates(n, k, m):
    r = fm.ex_m_odd_wheels(n, k, m)
    assert r.optimizers["n_0"] in fm.closed_form_n0_candidates(n, k, m)


def test_g_value_examples():
    r = fm.g_value(6, 5, 2, 3)
    assert (r.value, r.optimizers["j"]) == (41, 0)
    assert fm.g_value(5, 5, 2, 3).value == 35
    assert fm.g_value(9, 4, 1, 2).value == fm.family_edges(0, 9, 4, 2)
    with pytest.raises(DomainError):
        fm.g_value(2, 2, 3, 2)


@given(st.integers(8, 40), st.integers(8, 40), st.integers(2, 4), st.integers(2, 4))
def test_g_below_f(x, y, m, k):
    try:
        g = fm.g_value(x, y, m, k).value
    except DomainError:
        return
    assert g <= fm.ex_m_odd_wheels(x + y, k, m).value


@pytest.mark.parametrize("n,h,expected", [(10, 1, 33), (10, 2, 36), (3, 1, 3)])
def test_even_wheel_mix(n, h, expected):
    assert fm.ex_even_wheel_mix(n, h).value == expected


def test_even_wheel_mix_domain():
    with pytest.raises(DomainError):
        fm.ex_even_wheel_mix(1, 3)


def test_kst_bound():
    assert math.isclose(fm.kst_upper_bound(4, 2, 2), 6.0)
    assert math.isclose(fm.kst_upper_bound(9, 2, 2), 18.0)
    assert fm.kst_upper_bound(17, 1, 1) == 0


@pytest.mark.parametrize("n,k,expected", [(6, 3, 6), (4, 2, 2), (7, 3, 7)])
def test_star_path_free_edges(n, k, expected):
    assert fm.star_path_free_edges(n, k) == expected


def test_star_forest_variants():
    assert fm.ex_star_forest(10, [1]).value == 0
    assert fm.ex_star_forest(10, [3]).value == 8
    assert fm.ex_star_forest(10, [3], "corrected").value == 10
    r = fm.ex_star_forest(12, [2, 2])
    assert (r.value, r.optimizers["i"]) == (13, 2)
    with pytest.raises(DomainError):
        fm.ex_star_forest(10, [2, 3])
    with pytest.raises(DomainError):
        fm.ex_star_forest(10, [])


def test_liu_corrected_single_star_matches_path_free_count():
    # one star S_{d+1}: the corrected i=1 term is floor((d-1)n/2)
    for n in range(2, 30):
        for d in range(1, 6):
            assert fm.liu_term(n, 1, d, "corrected") == (d - 1) * n // 2


def test_conjecture_forms():
    cv = fm.conjecture_ex(20, [3, 3])
    assert cv.form_a.value == cv.form_b.value == 116 and cv.agree
    assert fm.conjecture_ex(30, [2]).form_a.value > 0
    with pytest.raises(DomainError):
        fm.conjecture_ex(10, [])


@given(st.integers(10, 100),
       st.sampled_from([[2], [3], [2, 2], [3, 2], [3, 3], [4, 3, 2]]),
       st.sampled_from(["verbatim", "corrected"]))
def test_conjecture_forms_agree(n, ks, variant):
    assert fm.conjecture_ex(n, ks, variant).agree
