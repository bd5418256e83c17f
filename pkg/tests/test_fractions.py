import random

import pytest
from hypothesis import given, settings, strategies as st

from cesa import essentiality as es
from cesa import fractions as fr
from cesa import nilpotent as nil
from cesa import semigroup as sg
from cesa.algebra import family_algebra, is_central, parse_element, table_algebra
from cesa.matrix_example import extract_semigroup
from cesa.scalars import FieldSpec

F2 = FieldSpec.prime(2)
Q = FieldSpec.rationals()
FS = family_algebra(nil.EX22, nil.SEMIGROUP, F2)


def el(text, A=FS):
    return parse_element(A, text)


@pytest.mark.parametrize("F", [F2, Q], ids=str)
def test_e_plus_z_is_a_zero_divisor(F):
    A = family_algebra(nil.EX22, nil.SEMIGROUP, F)
    rep = fr.is_regular(el("e + z", A))
    assert rep.status is fr.Regularity.ZERO_DIVISOR
    assert el("e + z", A) * rep.cofactor == A.zero()


def test_single_words_regular():
    assert fr.is_regular(el("x")).status is fr.Regularity.REGULAR
    assert fr.is_regular(el("x + y")).status is fr.Regularity.REGULAR_UP_TO_BOUND


def test_finite_regularity_is_exact():
    A = table_algebra(sg.dihedral_group(4), Q)
    assert fr.is_regular(el("e + r", A)).status is fr.Regularity.ZERO_DIVISOR
    assert fr.is_regular(el("e + 2*r", A)).status is fr.Regularity.REGULAR
    assert fr.is_regular(el("e + r2", A)).status is fr.Regularity.ZERO_DIVISOR
    assert fr.finite_regular_is_invertible(el("e + 2*r", A))


def test_matrix_semigroup_regular_elements_invertible():
    T = extract_semigroup(Q)
    A = table_algebra(T, Q)
    b = A.one() + A.word(T.index("e_a"))
    assert fr.finite_regular_is_invertible(b)
    assert fr.regular_one_sided_agree(A.word(T.index("e_b")))


def test_central_multiplier_examples():
    m = fr.central_multiplier(el("x"))
    assert str(m.z) == "x" and str(m.t) == "x^2"
    m = fr.central_multiplier(el("x + y"))
    assert is_central(m.t) and el("x + y") * m.z == m.t
    with pytest.raises(ValueError):
        fr.central_multiplier(el("e + z"))


def test_from_group_element_inverse_x():
    q = fr.from_group_element(el("x^-1", family_algebra(nil.EX22, nil.GROUP, F2)))
    assert str(q.num) == "x" and str(q.den) == "x^2"


def test_fraction_requires_central_regular_denominator():
    with pytest.raises(ValueError, match="not central"):
        fr.CentralFraction(el("x"), el("x"))
    with pytest.raises(ValueError, match="zero-divisor"):
        fr.CentralFraction(el("x"), el("e + z"))


def test_fraction_arithmetic_and_equality():
    x2 = el("x^2")
    half = fr.CentralFraction(el("x"), x2)  # x^-1
    x = fr.CentralFraction.embed(el("x"))
    one = fr.CentralFraction.embed(FS.one())
    assert half * x == one
    assert fr.qcl_eq(fr.CentralFraction(el("x^3"), x2), x)
    assert fr.qcl_add(half, half) == fr.CentralFraction(FS.zero(), FS.one())  # char 2
    assert (x * half).reduced().den == FS.one()


def test_qcl_witness_inverse_x():
    q = fr.CentralFraction(el("x"), el("x^2"))
    fw = fr.qcl_witness(q)
    assert str(fw.c.num) == "x^2 + z x^2" and fw.c.den == FS.one()
    assert str(fw.d.num) == "x + z x"


def _random_fraction(rng):
    while True:
        a = FS.random(rng, bound=3)
        s = FS.word(FS.carrier.random_word(3, rng))
        q = fr.from_regular(a, s)
        if q:
            return q


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_qcl_ring_laws(seed):
    rng = random.Random(seed)
    p, q, r = (_random_fraction(rng) for _ in range(3))
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p - p == fr.CentralFraction(FS.zero(), FS.one())


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_qcl_witness_random(seed):
    fw = fr.qcl_witness(_random_fraction(random.Random(seed)))
    assert fw.q * fw.c == fw.d and fw.c.is_central() and fw.d.is_central()


def test_center_descent():
    q = fr.CentralFraction(el("e + z"), el("x^2"))
    eta, eps = fr.qcl_center_descent(q)
    assert str(eta) == "e + z" and str(eps) == "x^2"
    with pytest.raises(ValueError):
        fr.qcl_center_descent(fr.CentralFraction(el("x"), el("x^2")))


def test_descend_witness_identity():
    s = el("x")
    w = es.witness_for(s)
    t = fr.CentralFraction(w.c * el("y^2"), el("x^2"))
    r = fr.CentralFraction.embed(s) * t
    d = fr.descend_witness(s, t, r)
    assert s * (d.c * d.n) == d.m * d.d
    assert d.witness().is_valid()
    with pytest.raises(ValueError):
        fr.descend_witness(s, t, t)
