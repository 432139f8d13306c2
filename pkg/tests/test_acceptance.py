"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line."""

import time

import pytest

from hochdim.aq import build_aq, hch_aq, hh_aq, rank_bound, tau_ranks
from hochdim.decomposition import decompose, hc_decomposed
from hochdim.linalg import BoundarySequence, homology_dims, rank
from hochdim.mixed import MixedComplex, hc, hh
from hochdim.quiver import MonomialAlgebra, Quiver
from hochdim.resolution import gldim_probe
from hochdim.scalgebra import sc_disjoint, sc_from_monomial, sc_hch, sc_hh, sc_tensor
from hochdim.skoldberg import (
    TruncatedPresentation,
    basic_cycle_quiver,
    classify_truncated,
    hh_graded_truncated,
    hh_p_basic_cycle,
    hh_total_truncated,
)

from conftest import FIXTURES, dual, linear, zero_relation_cycle, two_loops

LOOPS2 = Quiver.build(["v"], [("x", "v", "v"), ("y", "v", "v")])


@pytest.fixture
def report(capsys):
    def emit(number, title, checks):
        failed = [name for name, ok in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        with capsys.disabled():
            detail = "" if not failed else "  failed: " + "; ".join(failed)
            print(f"\n[{status}] criterion {number}: {title}{detail}")
        assert not failed, failed

    return emit


def test_criterion_1_aq_counterexample(report):
    start = time.perf_counter()
    hh2 = hh_aq(10, 2)
    ranks = tau_ranks(12, 2)
    hch2 = hch_aq(6, 2)
    S = build_aq(2)
    bar_hh, bar_hch = sc_hh(S, 4), sc_hch(S, 4)
    elapsed = time.perf_counter() - start
    report(
        1,
        f"A_q at q=2: hh >= 2, rank bounds, hch, bar oracle ({elapsed:.1f}s)",
        [
            ("hh_n >= 2 for n <= 10", all(d >= 2 for d in hh2)),
            ("rank tau^n <= bound for n <= 12", all(ranks[n] <= rank_bound(n) for n in range(1, 13))),
            ("hch^n = 0 for 3 <= n <= 6", hch2[3:7] == [0, 0, 0, 0]),
            ("hch^2 > 0", hch2[2] > 0),
            ("hh equals bar oracle for n <= 4", hh2[:5] == bar_hh),
            ("hch equals bar oracle for n <= 4", hch2[:5] == bar_hch),
            ("runtime < 60 s", elapsed < 60),
        ],
    )


def test_criterion_2_dual_numbers(report):
    checks = []
    for char, expected in ((0, [2] + [1] * 8), (2, [2] * 9)):
        A = dual(char)
        T = TruncatedPresentation.of(A)
        routes = {
            "complex": hh(A, 8).dims,
            "basic-cycle formula": [hh_p_basic_cycle(1, 2, p, char) for p in range(9)],
            "graded formula summed": hh_total_truncated(T, 8),
        }
        for name, dims in routes.items():
            checks.append((f"char {char} {name}", dims == expected))
        checks.append((f"char {char} bar oracle n <= 4", sc_hh(sc_from_monomial(A), 4) == expected[:5]))
    report(2, "dual numbers agree across routes in char 0 and 2", checks)


def test_criterion_3_graded_formula(report):
    cases = [(f"cycle l={l} n={n}", basic_cycle_quiver(l), n) for l in (1, 2, 3) for n in (2, 3)]
    cases.append(("two loops n=2", LOOPS2, 2))
    cases.append(("1->2->3 n=2", Quiver.build([1, 2, 3], [("a", 1, 2), ("b", 2, 3)]), 2))
    checks = []
    for name, quiver, n in cases:
        for char in (0, 2):
            T = TruncatedPresentation(quiver, n, char)
            oracle = hh(T.algebra(), 6).graded
            checks.append((f"{name} char {char}", hh_graded_truncated(T, 6) == oracle))
    report(3, "graded formula equals graded oracle for p <= 6", checks)


def test_criterion_4_decomposition(report):
    A = two_loops()
    direct = hh(A, 2).dims
    plain = decompose(A, 2)
    formula = decompose(A, 2, use_formula=True)
    R = zero_relation_cycle()
    checks = [
        ("two loops: oracle hh_1 = 3, hh_2 = 5", direct[1:] == [3, 5]),
        ("two loops: decomposition", plain.totals()[1:] == [3, 5]),
        ("two loops: formula", formula.totals()[1:] == [3, 5]),
        ("breakdown n=1", plain.breakdown(1) == {"x": 1, "y": 1, "x y": 1}),
        ("breakdown n=2", plain.breakdown(2) == {"x": 1, "y": 1, "x y": 1, "x x y": 1, "x y y": 1}),
        ("formula breakdown matches", formula.breakdown(2) == plain.breakdown(2)),
        ("zero_relation_cycle: oracle zero for n <= 4", hh(R, 4).dims[1:] == [0] * 4),
        ("zero_relation_cycle: decomposition zero for n <= 4", decompose(R, 4).totals()[1:] == [0] * 4),
        ("two loops: HC decomposition", hc_decomposed(A, 3)[1:] == hc(A, 3).dims[1:]),
        ("zero_relation_cycle: HC decomposition", hc_decomposed(R, 3)[1:] == hc(R, 3).dims[1:]),
    ]
    report(4, "orbit decomposition on two loops and the 2-cycle with one zero relation", checks)


def test_criterion_5_finite_gldim(report):
    checks = []
    for name, A, gl in (("1->2->3 truncated at 2", linear(3, 2), 2), ("zero_relation_cycle", zero_relation_cycle(), 2)):
        probe = gldim_probe(A, 8)
        dims = hh(A, 6).dims
        checks.append((f"{name}: gl.dim = {gl}", probe.exact and probe.value == gl))
        checks.append((f"{name}: hh_0 = |Q_0|", dims[0] == A.num_vertices))
        checks.append((f"{name}: hh_n = 0 for 1 <= n <= 6", dims[1:] == [0] * 6))
    report(5, "finite global dimension forces vanishing higher hh", checks)


def _classification_fixtures():
    acyclic = [
        ("1->2->3 n=2", Quiver.build([1, 2, 3], [("a", 1, 2), ("b", 2, 3)]), 2),
        ("kronecker n=2", Quiver.build([1, 2], [("a", 1, 2), ("b", 1, 2)]), 2),
        ("D4 n=3", Quiver.build([1, 2, 3, 4], [("a", 1, 4), ("b", 2, 4), ("c", 3, 4)]), 3),
    ]
    cyclic = [
        ("2-cycle n=2", basic_cycle_quiver(2), 2),
        ("loop on a path n=3", Quiver.build([1, 2], [("a", 1, 2), ("c", 2, 2)]), 3),
        ("3-cycle with a tail n=2", Quiver.build(range(4), [("c0", 0, 1), ("c1", 1, 2), ("c2", 2, 0), ("t", 2, 3)]), 2),
    ]
    return acyclic, cyclic


def test_criterion_6_classification(report):
    acyclic, cyclic = _classification_fixtures()
    checks = []
    for name, quiver, n in acyclic:
        T = TruncatedPresentation(quiver, n)
        c = classify_truncated(T)
        A = T.algebra()
        checks.append((f"{name}: classified acyclic", c.acyclic and c.gldim_finite and c.hhdim_zero))
        checks.append((f"{name}: gl.dim finite", gldim_probe(A, 8).exact))
        checks.append((f"{name}: hh_n = 0 for 1 <= n <= 4", hh(A, 4).dims[1:] == [0] * 4))
    for name, quiver, n in cyclic:
        T = TruncatedPresentation(quiver, n)
        c = classify_truncated(T)
        checks.append((f"{name}: classified cyclic", not (c.acyclic or c.gldim_finite or c.hhdim_zero)))
        l = c.witness.length
        checks.append((f"{name}: witness is a basic cycle", c.witness.basic))
        members = c.progression.members(5)
        while members[-1] < 12:
            members = c.progression.members(len(members) + 1)
        checks.append((f"{name}: hh_p >= 1 on {members}", all(hh_p_basic_cycle(l, n, p) >= 1 for p in members)))
        small = [p for p in members if p <= 5]
        if small:
            Z = hh(c.witness_algebra, max(small)).dims
            checks.append((f"{name}: oracle on witness for p <= 5", all(Z[p] >= 1 for p in small)))
        checks.append((f"{name}: gl.dim probe does not terminate", not gldim_probe(T.algebra(), 6).exact))
    report(6, "truncated classification on 3 acyclic and 3 cyclic quivers", checks)


def test_criterion_7_small_properties(report):
    D = sc_from_monomial(dual())
    DD = sc_disjoint(D, D)
    hD, cD = sc_hh(D, 3), sc_hch(D, 3)
    checks = [
        ("disjoint union hh additive", sc_hh(DD, 3) == [2 * v for v in hD]),
        ("disjoint union hch additive", sc_hch(DD, 3) == [2 * v for v in cD]),
        ("Kunneth hh(dual (x) dual) = [4, 4, 5]", sc_hh(sc_tensor(D, D), 2) == [4, 4, 5]),
    ]
    report(7, "disjoint union additivity and Kunneth on dual numbers", checks)


def _euler_holds(seq, n_max, homology):
    lhs = sum((-1) ** n * seq.dims[n] for n in range(n_max + 1))
    top = rank(seq.matrices[n_max]) if n_max < len(seq.matrices) else 0
    return lhs == sum((-1) ** n * homology[n] for n in range(n_max + 1)) + (-1) ** n_max * top


def test_criterion_8_mixed_complex_axioms(report):
    checks = []
    for name in sorted(FIXTURES):
        A = FIXTURES[name]()
        mc = MixedComplex(A, 6 * A.max_length)
        ok_b = ok_B = ok_bB = ok_euler = True
        for q in range(0, 5 * A.max_length + 1):
            for n in range(1, 5):
                ok_b &= (mc.b(n - 1, q) @ mc.b(n, q)).is_zero() if n >= 2 else True
                ok_B &= (mc.B(n, q) @ mc.B(n - 1, q)).is_zero()
                ok_bB &= (mc.B(n - 1, q) @ mc.b(n, q) + mc.b(n + 1, q) @ mc.B(n, q)).is_zero()
            ok_b &= (mc.b(4, q) @ mc.b(5, q)).is_zero()
            seq = BoundarySequence([len(mc.chains(n, q)) for n in range(6)], [mc.b(n, q) for n in range(1, 6)])
            ok_euler &= _euler_holds(seq, 4, homology_dims(seq, 4))
        checks += [
            (f"{name}: b^2 = 0", ok_b),
            (f"{name}: B^2 = 0", ok_B),
            (f"{name}: bB + Bb = 0", ok_bB),
            (f"{name}: Euler bookkeeping", ok_euler),
        ]
    report(8, "mixed complex axioms and Euler bookkeeping on every fixture", checks)
