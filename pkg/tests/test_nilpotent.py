import random

import pytest
from hypothesis import given, strategies as st

from cesa import nilpotent as nil

EXP = st.integers(-6, 6)
NN = st.integers(0, 6)


def matrix(w):
    """Oracle: z^a y^b x^c as the unitriangular integer matrix [[1,c,a],[0,1,b],[0,0,1]]."""
    return ((1, w.c, w.a), (0, 1, w.b), (0, 0, 1))


def matmul(X, Y, corner_mod=None):
    P = [[sum(X[i][k] * Y[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    if corner_mod:
        P[0][2] %= corner_mod
    return tuple(tuple(r) for r in P)


def group_words(family):
    return st.builds(lambda a, b, c: nil.word(family, nil.GROUP, a, b, c), EXP, EXP, EXP)


@pytest.mark.parametrize("family,mod", [(nil.EX22, 2), (nil.EX23, None)])
@given(data=st.data())
def test_product_matches_matrix_oracle(family, mod, data):
    u = data.draw(group_words(family))
    v = data.draw(group_words(family))
    assert matrix(u * v) == matmul(matrix(u), matrix(v), mod)


def test_defining_relations():
    for fam in nil.FAMILIES:
        g = nil.generators(fam, nil.SEMIGROUP)
        x, y, z = g["x"], g["y"], g["z"]
        assert x * y == z * y * x
        assert x * z == z * x and y * z == z * y
    g = nil.generators(nil.EX22, nil.SEMIGROUP)
    assert g["z"] * g["z"] == nil.identity(nil.EX22, nil.SEMIGROUP)


def test_associativity_random_triples():
    rng = random.Random(0)
    for fam in nil.FAMILIES:
        for _ in range(1000):
            u, v, w = (nil.random_word(fam, nil.GROUP, 5, rng) for _ in range(3))
            assert (u * v) * w == u * (v * w)


@given(group_words(nil.EX23))
def test_group_inverse(u):
    e = nil.identity(nil.EX23, nil.GROUP)
    assert u * nil.inverse(u) == e == nil.inverse(u) * u


def test_semigroup_rejects_negative_exponents():
    with pytest.raises(ValueError):
        nil.word(nil.EX23, nil.SEMIGROUP, 0, -1, 0)
    with pytest.raises(ValueError):
        nil.inverse(nil.word(nil.EX23, nil.SEMIGROUP, 0, 0, 1))


@pytest.mark.parametrize("family", nil.FAMILIES)
@given(data=st.data())
def test_conjugate_contract(family, data):
    s = data.draw(group_words(family))
    x = data.draw(group_words(family))
    t = nil.conjugate(s, x)
    assert x * s == t * x


def test_conjugate_undefined_in_ex23_semigroup():
    g = nil.generators(nil.EX23, nil.SEMIGROUP)
    # x^y needs z^-1
    with pytest.raises(nil.UndefinedConjugate):
        nil.conjugate(g["x"], g["y"])
    assert nil.conjugate(g["y"], g["x"]) == g["z"] * g["y"]


def test_centre_and_delta():
    w = lambda fam, a, b, c: nil.word(fam, nil.SEMIGROUP, a, b, c)
    assert nil.is_central(w(nil.EX22, 1, 2, 4))
    assert not nil.is_central(w(nil.EX22, 0, 1, 0))
    assert nil.class_sum_words(w(nil.EX22, 0, 0, 1)) == (w(nil.EX22, 0, 0, 1), w(nil.EX22, 1, 0, 1))
    assert nil.delta_membership(w(nil.EX23, 3, 0, 0)).in_delta
    assert not nil.delta_membership(w(nil.EX23, 0, 0, 1)).in_delta
    assert nil.class_sum_words(w(nil.EX23, 0, 1, 0)) is None


@pytest.mark.parametrize("family", nil.FAMILIES)
@given(data=st.data())
def test_central_decompose_round_trip(family, data):
    g = data.draw(group_words(family))
    if family == nil.EX23 and (g.b < 0 or g.c < 0):
        with pytest.raises(nil.DecompositionError):
            nil.central_decompose(g)
        return
    s, t = nil.central_decompose(g)
    assert nil.is_central(t)
    G = nil.group_of_fractions_embed
    assert G(s) == g * G(t)


def test_central_decompose_example():
    x_inv = nil.parse_word("x^-1", nil.EX22, nil.GROUP)
    s, t = nil.central_decompose(x_inv)
    assert nil.format_word(s) == "x" and nil.format_word(t) == "x^2"


def test_words_within_counts_and_order():
    ws = nil.words_within(nil.EX22, nil.SEMIGROUP, 2)
    assert len(ws) == 2 * 3 * 3
    assert ws[0] == nil.identity(nil.EX22, nil.SEMIGROUP)
    assert len(nil.words_within(nil.EX23, nil.GROUP, 1)) == 27


@pytest.mark.parametrize("text,expected", [("e", "e"), ("x*y", "z y x"), ("z y^2 x", "z y^2 x"),
                                           ("y x", "y x"), ("x^3 * z", "z x^3")])
def test_parse_and_format(text, expected):
    assert nil.format_word(nil.parse_word(text, nil.EX23, nil.SEMIGROUP)) == expected


def test_parse_errors():
    with pytest.raises(ValueError):
        nil.parse_word("x^-1", nil.EX23, nil.SEMIGROUP)
    with pytest.raises(ValueError):
        nil.parse_word("w", nil.EX23, nil.GROUP)
    with pytest.raises(ValueError):
        nil.parse_word("", nil.EX23, nil.GROUP)


def test_ex22_parse_reduces_z_mod_2():
    assert nil.parse_word("z^3 x", nil.EX22, nil.SEMIGROUP) == nil.parse_word("z x", nil.EX22, nil.SEMIGROUP)
