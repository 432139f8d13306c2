import pytest

from hochdim.quiver import MonomialAlgebra, Quiver
from hochdim.resolution import (
    Probe,
    RightModule,
    gldim_probe,
    projdim_probe,
    projective,
    projective_cover,
    resolve,
    simple,
    syzygy,
)

from conftest import FIXTURES, a3_path, basic_cycle, dual, kronecker, linear, zero_relation_cycle


def test_projective_modules():
    A = zero_relation_cycle()
    P1, P2 = projective(A, 0), projective(A, 1)
    assert P1.dims == (2, 1) and P2.dims == (1, 1)
    assert P1.check_relations() and P2.check_relations()
    assert P1.top_dims() == (1, 0)
    assert sum(projective(A, v).dimension for v in range(2)) == A.dimension


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_cover_and_syzygy_dimensions(name):
    A = FIXTURES[name]()
    for v in range(A.num_vertices):
        M = simple(A, v)
        for _ in range(3):
            cover = projective_cover(M)
            assert cover.module.check_relations()
            assert sorted(cover.summands) == sorted(w for w, d in enumerate(M.top_dims()) for _ in range(d))
            omega = syzygy(M, cover)
            assert omega.check_relations()
            # short exact sequence 0 -> omega -> P -> M -> 0
            assert omega.dimension + M.dimension == cover.module.dimension
            if omega.dimension == 0:
                break
            M = omega


def test_projectives_have_projdim_zero():
    A = zero_relation_cycle()
    for v in range(2):
        assert projdim_probe(projective(A, v), 3) == Probe(0, True)


def test_zero_relation_cycle_simples():
    A = zero_relation_cycle()
    assert str(projdim_probe(simple(A, 0), 5)) == "= 1"
    assert str(projdim_probe(simple(A, 1), 5)) == "= 2"
    assert str(gldim_probe(A, 5)) == "= 2"


def test_resolution_trace_zero_relation_cycle():
    probe, trace = resolve(simple(zero_relation_cycle(), 1), 5)
    assert probe.exact and probe.value == 2
    assert trace.covers == [{1: 1}, {0: 1}, {1: 1}]
    assert trace.syzygy_dims == [1, 2, 0]


@pytest.mark.parametrize(
    "make, expected",
    [
        (a3_path, "= 1"),
        (kronecker, "= 1"),
        (lambda: linear(4, 2), "= 3"),
        (dual, "> 6"),
        (lambda: basic_cycle(2, 2), "> 6"),
    ],
)
def test_gldim_examples(make, expected):
    assert str(gldim_probe(make(), 6)) == expected


def test_zero_module():
    A = dual()
    assert projdim_probe(RightModule(A, (0,), {}), 2) == Probe(0, True)


def test_bad_action_shape():
    with pytest.raises(ValueError):
        RightModule(dual(), (2,), {0: [[0]]})
