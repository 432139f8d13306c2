import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hochdim.errors import ComplexError
from hochdim.linalg import BoundarySequence, Field, SparseMatrix, dense_rank, homology_dims, rank

Q = Field(0)
F2 = Field(2)


def M(rows, field=Q):
    return SparseMatrix.from_dense(rows, field)


def test_rank_examples():
    assert rank(M([[1, 1], [1, 1]])) == 1
    assert rank(M([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(M([[2]], F2)) == 0
    assert rank(M([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])) == 1


def test_field_coercion():
    assert Field(5)(Fraction(1, 2)) == 3
    assert Field(3)(-1) == 2
    with pytest.raises(ZeroDivisionError):
        Field(2)(Fraction(1, 2))


matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150)
@given(matrices)
def test_rank_against_dense_elimination(rows):
    for field in (Q, F2, Field(3)):
        m = M(rows, field)
        assert rank(m) == dense_rank(rows, field)
        assert rank(m) == rank(m.transpose())
    assert rank(M(rows, Q)) >= rank(M(rows, F2))


def test_homology_examples():
    seq = BoundarySequence([2, 1], [SparseMatrix.zero(2, 1, Q)])
    assert homology_dims(seq) == [2]
    seq = BoundarySequence([2, 1, 0], [SparseMatrix.zero(2, 1, Q), SparseMatrix.zero(1, 0, Q)])
    assert homology_dims(seq) == [2, 1]


def _dual_numbers_complex(field, top=6):
    # normalized complex of k[x]/x^2: C_n = <e x^n, x x^n>, b_even: e x^n -> 2 x x^{n-1}
    dims = [2] * (top + 1)
    mats = []
    for n in range(1, top + 1):
        m = [[0, 0], [0, 0]]
        if n % 2 == 0:
            m[1][0] = 2
        mats.append(M(m, field))
    return BoundarySequence(dims, mats)


def test_homology_dual_numbers():
    assert homology_dims(_dual_numbers_complex(Q)) == [2, 1, 1, 1, 1, 1]
    assert homology_dims(_dual_numbers_complex(F2)) == [2] * 6


def test_homology_rejects_non_complex():
    seq = BoundarySequence([1, 1, 1], [M([[1]]), M([[1]])])
    with pytest.raises(ComplexError):
        homology_dims(seq)
    with pytest.raises(ComplexError):
        BoundarySequence([1, 2], [M([[1]])])


def test_homology_permutation_invariant():
    rng = random.Random(7)
    seq = _dual_numbers_complex(Q)
    base = homology_dims(seq)
    perms = [rng.sample(range(d), d) for d in seq.dims]
    inverse = [[p.index(i) for i in range(len(p))] for p in perms]
    mats = [m.permuted(perms[n], inverse[n + 1]) for n, m in enumerate(seq.matrices)]
    assert homology_dims(BoundarySequence(seq.dims, mats)) == base
