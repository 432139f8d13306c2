from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hochdim.aq import (
    LABELS,
    ONE,
    X,
    Y,
    YX,
    bgms_generators,
    build_aq,
    cochain_matrix,
    crosscheck_aq,
    hch_aq,
    hh_aq,
    printed_tau_images,
    rank_bound,
    root_of_unity_order,
    tau_matrix,
    tau_ranks,
)
from hochdim.linalg import Field


def test_multiplication_table():
    A = build_aq(2)
    assert A.mul_basis(Y, X) == {YX: 1}
    assert A.mul_basis(X, Y) == {YX: -2}
    assert A.mul_basis(X, X) == {} and A.mul_basis(Y, Y) == {}
    assert A.mul_basis(ONE, YX) == {YX: 1}


def test_generators():
    gens = bgms_generators(2, 3)
    assert gens[0] == {(X, X): 1}
    assert gens[1] == {(X, Y): 1, (Y, X): 3}
    assert gens[2] == {(Y, Y): 1}
    assert all(len(w) == 3 for g in bgms_generators(3, 2) for w in g)


@pytest.mark.parametrize("q", [2, -1, 1, 3, Fraction(1, 2)])
@pytest.mark.parametrize("n", range(1, 6))
def test_printed_images_match_matrix(q, n):
    m = tau_matrix(n, q).to_dense()
    pos = {"1x": ONE, "1y": ONE, "y": Y, "x": X}
    f = Field(0)
    for i in range(n + 1):
        images = printed_tau_images(n, i, q)
        seen = {}
        for key, (coeff, target, j) in images.items():
            if 0 <= j <= n - 1:
                r = 4 * j + LABELS.index(target)
                c = 4 * i + pos[key]
                seen[(r, c)] = f.add(seen.get((r, c), 0), coeff)
        for c in range(4 * i, 4 * i + 4):
            col = {r: m[r][c] for r in range(4 * n) if m[r][c]}
            expect = {r: v for (r, cc), v in seen.items() if cc == c and v}
            if c % 4 == YX:
                expect = {}
            assert col == expect


@pytest.mark.parametrize("q", [2, -1, 1, 3, 0])
@pytest.mark.parametrize("char", [0, 2, 5])
def test_tau_is_a_differential(q, char):
    for n in range(1, 7):
        assert (tau_matrix(n, q, char) @ tau_matrix(n + 1, q, char)).is_zero()
        assert (cochain_matrix(n, q, char) @ cochain_matrix(n - 1, q, char)).is_zero()


@pytest.mark.parametrize("q, char", [(2, 0), (3, 0), (Fraction(1, 2), 0), (2, 5)])
def test_rank_bound_attained_off_roots_of_unity(q, char):
    ranks = tau_ranks(10, q, char)
    for n in range(1, 11):
        assert ranks[n] <= rank_bound(n)
    if root_of_unity_order(q, char, limit=24) is None:
        assert ranks[1:] == [rank_bound(n) for n in range(1, 11)]


def test_hh_not_a_root_of_unity():
    assert hh_aq(10, 2) == [3] + [2] * 10
    assert hch_aq(6, 2) == [2, 2, 1, 0, 0, 0, 0]


def test_hh0_split():
    assert hh_aq(0, -1)[0] == 4
    assert hh_aq(0, 1)[0] == 3
    assert hh_aq(0, 1, 2)[0] == 4  # q = 1 = -1 in characteristic 2


@pytest.mark.parametrize("q, char", [(2, 0), (-1, 0), (1, 0), (1, 2), (3, 0), (2, 3)])
def test_crosscheck_against_bar_complex(q, char):
    rep = crosscheck_aq(q, char, 3)
    assert rep.hh_bgms == rep.hh_bar and rep.hch_bgms == rep.hch_bar


def test_crosscheck_limit():
    with pytest.raises(ValueError):
        crosscheck_aq(2, 0, 5)


@settings(max_examples=20, deadline=None)
@given(st.integers(-6, 6).filter(lambda v: v != 0), st.sampled_from([0, 7]))
def test_homology_euler_bound(q, char):
    h = hh_aq(6, q, char)
    ranks = tau_ranks(7, q, char)
    for n in range(7):
        assert h[n] == 4 * (n + 1) - ranks[n] - ranks[n + 1]


def test_root_of_unity_order():
    assert root_of_unity_order(-1) == 2
    assert root_of_unity_order(1) == 1
    assert root_of_unity_order(2) is None
    assert root_of_unity_order(2, 7) == 3
