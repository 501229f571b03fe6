import pytest

from grasslines.intersect import k_table_operator
from grasslines.verify import CORE_ROUTES, ROUTES, cross_check, recursion_audit, route_table


def test_single_cell():
    r = cross_check(0)
    assert len(r.cells) == 1
    c = r.cells[0]
    assert all(c.value(route) == 1 for route in ROUTES)
    assert c.agree and r.ok


def test_n4_diagonal():
    r = cross_check(4)
    assert len(r.cells) == 15
    assert all(c.agree for c in r.cells)
    assert [c.operator for c in r.cells if c.m == c.n] == [1, 1, 2, 5, 14]


def test_n10_all_agree():
    r = cross_check(10)
    assert len(r.cells) == 66
    assert r.ok and not r.double_sum_flags
    assert all(s["disagree"] == 0 for s in r.summary.values())
    assert "printed" in r.orientation_note


def test_fault_injection_is_caught():
    r = cross_check(5, inject_fault=(2, 4))
    assert not r.ok
    assert [(c.m, c.n) for c in r.core_disagreements] == [(2, 4)]
    assert r.summary["recursive~traffic"]["disagree"] == 0
    assert r.summary["operator~recursive"]["disagree"] == 1


@pytest.mark.parametrize("n_max", [0, 6, 12])
def test_audit_clean(n_max):
    assert recursion_audit(k_table_operator(n_max)) == []


def test_audit_names_perturbed_cell():
    t = k_table_operator(6)
    t.entries[2, 4] += 1
    v = recursion_audit(t)
    # (2,4) appears as lhs at (2,4), as K(m+1,n) at (1,4), as K(m,n-1) at (2,5)
    assert {(x.m, x.n) for x in v} == {(2, 4), (1, 4), (2, 5)}
    assert all((2, 4) in x.cells() for x in v)


@pytest.mark.parametrize("route", ROUTES)
def test_route_tables_agree(route):
    assert route_table(route, 7).entries == k_table_operator(7).entries


def test_unknown_route():
    with pytest.raises(ValueError):
        route_table("bogus", 3)


def test_core_excludes_double_sum():
    assert "double_sum" not in CORE_ROUTES
