from pathlib import Path

import pytest

from hochdim.quiver import MonomialAlgebra, Quiver
from hochdim.skoldberg import basic_cycle_quiver

ALGEBRAS = Path(__file__).resolve().parent.parent / "algebras"


def dual(char=0):
    return MonomialAlgebra(Quiver.build(["v"], [("x", "v", "v")]), truncation=2, char=char)


def two_loops(n=2, char=0):
    return MonomialAlgebra(Quiver.build(["v"], [("x", "v", "v"), ("y", "v", "v")]), truncation=n, char=char)


def zero_relation_cycle(char=0):
    q = Quiver.build([1, 2], [("alpha", 1, 2), ("beta", 2, 1)])
    return MonomialAlgebra.from_names(q, ["beta alpha"], char=char)


def basic_cycle(l, n, char=0):
    return MonomialAlgebra(basic_cycle_quiver(l), truncation=n, char=char)


def linear(k=3, n=2, char=0):
    q = Quiver.build(range(1, k + 1), [(f"a{i}", i, i + 1) for i in range(1, k)])
    return MonomialAlgebra(q, truncation=n, char=char)


def disjoint_loops(char=0):
    q = Quiver.build([1, 2], [("x", 1, 1), ("y", 2, 2)])
    return MonomialAlgebra(q, truncation=2, char=char)


def mixed_relations(char=0):
    # two loops with xx, yy, xyx, yxy: basis e, x, y, xy, yx
    q = Quiver.build(["v"], [("x", "v", "v"), ("y", "v", "v")])
    return MonomialAlgebra.from_names(q, ["x x", "y y", "x y x", "y x y"], char=char)


def kronecker(char=0):
    return MonomialAlgebra(Quiver.build([1, 2], [("a", 1, 2), ("b", 1, 2)]), char=char)


def a3_path(char=0):
    return MonomialAlgebra(Quiver.build([1, 2, 3], [("a", 1, 2), ("b", 2, 3)]), char=char)


FIXTURES = {
    "dual": dual,
    "two_loops": lambda char=0: two_loops(2, char),
    "zero_relation_cycle": zero_relation_cycle,
    "cycle2": lambda char=0: basic_cycle(2, 2, char),
    "cycle3_n3": lambda char=0: basic_cycle(3, 3, char),
    "a3_trunc2": lambda char=0: linear(3, 2, char),
    "disjoint_loops": disjoint_loops,
    "mixed_relations": mixed_relations,
    "kronecker": kronecker,
}


@pytest.fixture(params=sorted(FIXTURES))
def fixture_algebra(request):
    return FIXTURES[request.param]()


@pytest.fixture
def algebras_dir():
    return ALGEBRAS
