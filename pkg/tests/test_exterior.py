import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasslines.errors import IndexRangeError
from grasslines.exterior import (
    BasisElement,
    ExtVector,
    apply_d1,
    apply_d2,
    apply_delta11,
    coefficient_of,
    normalize,
    wedge,
)
from oracles import d1_dense, d2_dense, delta11_dense, shift, to_matrix, wedge_matrix


def basis_elements(r):
    return [BasisElement(i, j, r) for j in range(r + 1) for i in range(j)]


@st.composite
def ext_vectors(draw, max_rank=14):
    r = draw(st.integers(1, max_rank))
    pairs = st.tuples(st.integers(0, r), st.integers(0, r)).filter(lambda p: p[0] < p[1])
    terms = draw(st.dictionaries(pairs, st.integers(-10**20, 10**20), max_size=12))
    return ExtVector({BasisElement(i, j, r): c for (i, j), c in terms.items()}, r)


class TestNormalize:
    def test_diagonal_vanishes(self):
        assert normalize(1, 1, 3) == (0, None)

    def test_swapped(self):
        assert normalize(2, 1, 3) == (-1, BasisElement(1, 2, 3))

    def test_canonical(self):
        assert normalize(1, 2, 3) == (1, BasisElement(1, 2, 3))

    @pytest.mark.parametrize("i,j", [(4, 0), (0, 4), (-1, 2)])
    def test_out_of_range(self, i, j):
        with pytest.raises(IndexRangeError):
            normalize(i, j, 3)

    def test_antisymmetry_all_pairs(self):
        for r in range(15):
            for i in range(r + 1):
                for j in range(r + 1):
                    s1, b1 = normalize(i, j, r)
                    s2, b2 = normalize(j, i, r)
                    assert b1 == b2
                    assert s1 == -s2
                    assert (s1 == 0) == (i == j) == (b1 is None)

    def test_basis_element_rejects_noncanonical(self):
        with pytest.raises(IndexRangeError):
            BasisElement(2, 1, 3)


def test_vector_drops_zeros_and_checks_rank():
    v = ExtVector({BasisElement(0, 1, 2): 0, BasisElement(0, 2, 2): 5}, 2)
    assert len(v) == 1
    with pytest.raises(IndexRangeError):
        ExtVector({BasisElement(0, 1, 3): 1}, 2)
    with pytest.raises(IndexRangeError):
        v + ExtVector.zero(3)


def test_vector_arithmetic():
    a = wedge(3, 2, 3)
    assert a == -wedge(2, 3, 3)
    assert a - a == ExtVector.zero(3)
    assert 3 * a == a + a + a
    assert not wedge(1, 1, 3)


class TestD1:
    def test_top_of_kernel(self):
        assert apply_d1(wedge(1, 0, 3)) == ExtVector.zero(3)

    def test_e3e2(self):
        assert apply_d1(wedge(3, 2, 3)) == wedge(3, 1, 3)

    def test_zero(self):
        assert apply_d1(ExtVector.zero(5)) == ExtVector.zero(5)

    def test_leibniz_on_every_basis_element(self):
        # two-term expansion written out by hand, independent of the shift table
        for r in range(1, 10):
            for b in basis_elements(r):
                expected = ExtVector.zero(r)
                if b.i >= 1:
                    expected += wedge(b.i - 1, b.j, r)
                if b.j >= 1:
                    expected += wedge(b.i, b.j - 1, r)
                assert apply_d1(ExtVector({b: 1}, r)) == expected


class TestD2:
    def test_e2e1_cancels(self):
        assert apply_d2(wedge(2, 1, 3)) == ExtVector.zero(3)

    def test_e3e2(self):
        assert apply_d2(wedge(3, 2, 3)) == wedge(3, 0, 3)

    def test_e1e0(self):
        assert apply_d2(wedge(1, 0, 3)) == ExtVector.zero(3)


class TestDelta11:
    def test_generator_step(self):
        assert apply_delta11(wedge(4, 3, 4)) == wedge(3, 2, 4)

    def test_kills_e1e0(self):
        assert apply_delta11(wedge(1, 0, 4)) == ExtVector.zero(4)


@pytest.mark.parametrize("r", range(1, 15))
def test_operators_match_dense_oracle(r):
    s = shift(r)
    for b in basis_elements(r):
        v = ExtVector({b: 1}, r)
        x = wedge_matrix(b.i, b.j, r)
        assert (to_matrix(apply_d1(v)) == d1_dense(x, s)).all()
        assert (to_matrix(apply_d2(v)) == d2_dense(x, s)).all()
        assert (to_matrix(apply_delta11(v)) == delta11_dense(x, s)).all()


@pytest.mark.parametrize("r", range(1, 15))
def test_basis_identities(r):
    for b in basis_elements(r):
        v = ExtVector({b: 1}, r)
        assert apply_delta11(v) == apply_d1(apply_d1(v)) - apply_d2(v)
        assert apply_d1(apply_d2(v)) == apply_d2(apply_d1(v))


@settings(max_examples=200, deadline=None)
@given(ext_vectors())
def test_delta11_identity_random(v):
    assert apply_delta11(v) == apply_d1(apply_d1(v)) - apply_d2(v)


@settings(max_examples=200, deadline=None)
@given(ext_vectors())
def test_commutativity_random(v):
    assert apply_d1(apply_d2(v)) == apply_d2(apply_d1(v))


@settings(max_examples=200, deadline=None)
@given(ext_vectors(), ext_vectors())
def test_linearity(v, w):
    if v.rank_bound != w.rank_bound:
        w = ExtVector({BasisElement(b.i, b.j, v.rank_bound): c for b, c in w.items()
                       if b.j <= v.rank_bound}, v.rank_bound)
    for op in (apply_d1, apply_d2, apply_delta11):
        assert op(v + w) == op(v) + op(w)


@settings(max_examples=200, deadline=None)
@given(ext_vectors())
def test_grading(v):
    for op, drop in ((apply_d1, 1), (apply_d2, 2), (apply_delta11, 2)):
        degrees = {b.i + b.j for b, _ in v.items()}
        for b, _ in op(v).items():
            assert b.i + b.j + drop in degrees
            assert b.i + b.j >= 1


def test_coefficient_of():
    b01 = BasisElement(0, 1, 3)
    assert coefficient_of(3 * wedge(0, 1, 3), b01) == 3
    # descending e1^e0 is stored with the opposite sign
    assert coefficient_of(3 * wedge(1, 0, 3), b01) == -3
    assert coefficient_of(ExtVector.zero(3), b01) == 0
    assert coefficient_of(wedge(3, 0, 3), b01) == 0
