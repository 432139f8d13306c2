"""The four-dimensional algebras A_q = k<x, y>/(x^2, xy + q yx, y^2).

Hochschild homology and cohomology are computed from an explicit minimal
bimodule resolution whose n-th term is free on generators f^n_0..f^n_n,
with differential

    f^n_i -> x f^{n-1}_i + q^{n-i} y f^{n-1}_{i-1}
             + (-1)^n f^{n-1}_{i-1} y + (-1)^n q^i f^{n-1}_i x.

Tensoring with A over A^e gives the complex (A^{n+1}, tau^n); applying
Hom_{A^e}(-, A) gives the cochain complex (A^{n+1}, d^n).  Both are built
from the generic formula and cross-checked against the bar-complex
oracles in :mod:`hochdim.scalgebra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossCheckError
from .linalg import BoundarySequence, Field, SparseMatrix, homology_dims, rank
from .scalgebra import SCAlgebra, sc_hch, sc_hh

ONE, Y, X, YX = range(4)
LABELS = ("1", "y", "x", "yx")


def build_aq(q, char: int = 0) -> SCAlgebra:
    """A_q on the basis 1, y, x, yx."""
    f = Field(char)
    q = f(Fraction(q))
    table = {}
    for b in range(4):
        table[(ONE, b)] = {b: 1}
        table[(b, ONE)] = {b: 1}
    table[(Y, X)] = {YX: 1}
    table[(X, Y)] = {YX: f.neg(q)}
    return SCAlgebra(LABELS, table, {ONE: 1}, char)


def _scalar(q, char):
    f = Field(char)
    return f, f(Fraction(q))


def bgms_generators(n: int, q, char: int = 0) -> list[dict[tuple[int, ...], object]]:
    """f^n_0..f^n_n as tensors in {x, y}^{(x) n} (words over X/Y)."""
    f, q = _scalar(q, char)
    level = [{(): f(1)}]
    for m in range(1, n + 1):
        nxt = []
        for i in range(m + 1):
            t: dict[tuple[int, ...], object] = {}
            if i - 1 >= 0:
                for w, c in level[i - 1].items():
                    t[w + (Y,)] = f.add(t.get(w + (Y,), 0), c)
            if i <= m - 1:
                qi = f.pow(q, i)
                for w, c in level[i].items():
                    t[w + (X,)] = f.add(t.get(w + (X,), 0), f.mul(qi, c))
            nxt.append({w: c for w, c in t.items() if not f.is_zero(c)})
        level = nxt
    return level


def tau_matrix(n: int, q, char: int = 0) -> SparseMatrix:
    """tau^n : A^{n+1} -> A^n, basis index 4 i + lambda for lambda (x) f_i."""
    if n < 1:
        raise ValueError("tau^n is defined for n >= 1")
    A = build_aq(q, char)
    f, q = _scalar(q, char)
    sign = 1 if n % 2 == 0 else -1
    cols = []
    for i in range(n + 1):
        for lam in range(4):
            col: dict[int, object] = {}

            def put(vec, coeff, j):
                if 0 <= j <= n - 1:
                    for k, c in vec.items():
                        r = 4 * j + k
                        col[r] = f.add(col.get(r, 0), f.mul(coeff, c))

            put(A.mul_basis(lam, X), f(1), i)
            put(A.mul_basis(X, lam), f.mul(f(sign), f.pow(q, i)), i)
            put(A.mul_basis(lam, Y), f.pow(q, n - i), i - 1)
            put(A.mul_basis(Y, lam), f(sign), i - 1)
            cols.append(col)
    return SparseMatrix(4 * n, 4 * (n + 1), cols, f)


def printed_tau_images(n: int, i: int, q, char: int = 0) -> dict[str, tuple[object, str, int]]:
    """The closed-form images of the four basis vectors lambda (x) f^n_i,
    as (coefficient, target basis element, target generator index)."""
    f, q = _scalar(q, char)
    s = 1 if n % 2 == 0 else -1
    return {
        "1x": (f.add(f(1), f.mul(f(s), f.pow(q, i))), "x", i),
        "1y": (f.add(f.pow(q, n - i), f(s)), "y", i - 1),
        "y": (f.add(f(1), f.mul(f(-s), f.pow(q, i + 1))), "yx", i),
        "x": (f.add(f.neg(f.pow(q, n - i + 1)), f(s)), "yx", i - 1),
    }


def rank_bound(n: int) -> int:
    return 2 * n - 1 if n % 2 else 2 * n + 1


def hh_aq(n_max: int, q, char: int = 0) -> list[int]:
    """hh_n(A_q) = 4(n+1) - rank tau^n - rank tau^{n+1}."""
    dims = [4 * (n + 1) for n in range(n_max + 2)]
    mats = [tau_matrix(n, q, char) for n in range(1, n_max + 2)]
    return homology_dims(BoundarySequence(dims, mats), n_max)


def cochain_matrix(n: int, q, char: int = 0) -> SparseMatrix:
    """d^n : A^{n+1} -> A^{n+2}, phi given by its values v_i = phi(f^n_i)."""
    A = build_aq(q, char)
    f, q = _scalar(q, char)
    s = 1 if (n + 1) % 2 == 0 else -1
    cols = []
    for j in range(n + 1):
        for lam in range(4):
            col: dict[int, object] = {}

            def put(vec, coeff, i):
                for k, c in vec.items():
                    r = 4 * i + k
                    col[r] = f.add(col.get(r, 0), f.mul(coeff, c))

            # v_j feeds rows i = j (x v_i, v_i x terms) and i = j + 1 (v_{i-1} terms)
            put(A.mul_basis(X, lam), f(1), j)
            put(A.mul_basis(lam, X), f.mul(f(s), f.pow(q, j)), j)
            i = j + 1
            put(A.mul_basis(Y, lam), f.pow(q, n + 1 - i), i)
            put(A.mul_basis(lam, Y), f(s), i)
            cols.append(col)
    return SparseMatrix(4 * (n + 2), 4 * (n + 1), cols, f)


def hch_aq(n_max: int, q, char: int = 0) -> list[int]:
    dims = [4 * (n + 1) for n in range(n_max + 2)]
    mats = [cochain_matrix(n, q, char).transpose() for n in range(n_max + 1)]
    return homology_dims(BoundarySequence(dims, mats), n_max)


def tau_ranks(n_max: int, q, char: int = 0) -> list[int]:
    """rank tau^1..tau^{n_max} (index 0 is tau^0 := 0)."""
    return [0] + [rank(tau_matrix(n, q, char)) for n in range(1, n_max + 1)]


def root_of_unity_order(q, char: int = 0, limit: int = 24) -> int | None:
    f, q = _scalar(q, char)
    if f.is_zero(q):
        return None
    for m in range(1, limit + 1):
        if f.pow(q, m) == f(1):
            return m
    return None


@dataclass
class AqCrossCheck:
    q: object
    char: int
    hh_bgms: list[int]
    hh_bar: list[int]
    hch_bgms: list[int]
    hch_bar: list[int]


def crosscheck_aq(q, char: int = 0, n_max: int = 3) -> AqCrossCheck:
    """Compare the resolution route with the bar-complex oracle degreewise."""
    if n_max > 4:
        raise ValueError("the bar-complex oracle is limited to n <= 4")
    S = build_aq(q, char)
    rep = AqCrossCheck(q, char, hh_aq(n_max, q, char), sc_hh(S, n_max), hch_aq(n_max, q, char), sc_hch(S, n_max))
    if rep.hh_bgms != rep.hh_bar:
        raise CrossCheckError("hh mismatch", rep.hh_bgms, rep.hh_bar)
    if rep.hch_bgms != rep.hch_bar:
        raise CrossCheckError("hch mismatch", rep.hch_bgms, rep.hch_bar)
    return rep
