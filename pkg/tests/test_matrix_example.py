import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from cesa import matrix_example as mx
from cesa import semigroup as sg
from cesa.algebra import center_by_solve, contracted_algebra, table_algebra
from cesa.scalars import FieldSpec

F2 = FieldSpec.prime(2)
Q = FieldSpec.rationals()
GOLDEN = Path(__file__).parent / "fixtures" / "example21_table.json"

# nonzero products of distinct letters, worked out by hand from the positions
HAND = {("a", "b"): "c", ("a", "d"): "f", ("d", "a"): "f", ("b", "e"): "f", ("e", "b"): "f"}


def test_golden_table_byte_exact():
    assert mx.golden_json() == GOLDEN.read_text(encoding="utf-8")
    assert mx.golden_json().encode("utf-8") == GOLDEN.read_bytes()


@pytest.mark.parametrize("F", [F2, Q], ids=str)
def test_table_matches_hand_products(F):
    T = mx.extract_semigroup(F)
    letters = "abcdef"
    for x in letters:
        for y in letters:
            got = T.names[T.mul(T.index(f"e_{x}"), T.index(f"e_{y}"))]
            want = f"e_{HAND[(x, y)]}" if (x, y) in HAND else "θ"
            assert got == want, (x, y)
    assert T == mx.extract_semigroup(F2)


def test_table_structure():
    T = mx.extract_semigroup()
    assert sg.is_associative(T)
    assert T.identity == 0 and T.zero == 7
    assert not sg.is_cancellative(T).left


def test_realize_read_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        M = mx.ShapeMatrix.random(Q, rng)
        assert mx.ShapeMatrix.read(Q, M.realize()) == M


def test_read_rejects_off_pattern():
    M = mx.ShapeMatrix.unit(Q, "b").realize()
    M[2][3] = Q.one
    with pytest.raises(mx.ClosureViolation):
        mx.ShapeMatrix.read(Q, M)
    M = mx.ShapeMatrix.unit(Q, "b").realize()
    M[0][1] = Q.one
    M[4][6] = Q.coerce(2)
    with pytest.raises(mx.ClosureViolation, match="inconsistent"):
        mx.ShapeMatrix.read(Q, M)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_shape_ring_closed_and_isomorphic_to_contracted(seed):
    rng = random.Random(seed)
    A0 = contracted_algebra(mx.extract_semigroup(Q), Q)
    M, N = mx.ShapeMatrix.random(Q, rng), mx.ShapeMatrix.random(Q, rng)
    prod = M * N  # raises ClosureViolation if the product leaves the shape
    assert mx.to_contracted(prod, A0) == mx.to_contracted(M, A0) * mx.to_contracted(N, A0)
    assert mx.to_contracted(M + N, A0) == mx.to_contracted(M, A0) + mx.to_contracted(N, A0)
    assert mx.from_contracted(mx.to_contracted(M, A0)) == M


@pytest.mark.parametrize("F", [F2, Q], ids=str)
def test_iso_and_direct_sum(F):
    iso = mx.verify_iso_contracted(F)
    assert iso.ok and len(iso.comparisons) == 49
    ds = mx.verify_direct_sum(F)
    assert ds.ok and ds.pairs_checked == 64 and ds.transition_rank == 8


def test_centre_dimensions():
    T = mx.extract_semigroup(F2)
    Z0 = center_by_solve(contracted_algebra(T, F2))
    assert sorted(str(z) for z in Z0) == ["e_c", "e_d", "e_e", "e_f", "e_α"]
    assert len(center_by_solve(table_algebra(mx.extract_semigroup(Q), Q))) == 6


def test_f2_exhaustive_verdict():
    v = mx.verify_centrally_essential_matrix(F2)
    assert v.ok and v.noncommutative
    assert v.contracted.exact and v.full.exact
    assert v.center_dim == 5


def test_rational_sampled_verdict_is_marked_non_exact():
    v = mx.verify_centrally_essential_matrix(Q, trials=40, rng=random.Random(1))
    assert v.ok and not v.full.exact
    assert len(v.full.witnesses) == 40
