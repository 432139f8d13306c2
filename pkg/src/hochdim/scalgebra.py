"""Finite-dimensional algebras given by structure constants, and their
normalized Hochschild (co)chain complexes.

Used for algebras that are not monomial (the A_q family), for tensor and
product constructions, and as a brute-force oracle for monomial ones.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .errors import SizeCapError, StructureError
from .linalg import BoundarySequence, Field, SparseMatrix, homology_dims, nullspace
from .quiver import MonomialAlgebra

DEFAULT_CAP = 2_000_000

Vector = dict[int, object]


class SCAlgebra:
    """An associative unital algebra with basis ``labels``.

    ``table[(i, j)]`` is the product of basis elements i and j as a sparse
    coefficient dict; missing pairs multiply to zero.  ``unit`` is the unit
    as a coefficient dict.  Associativity and the unit law are checked on
    construction.
    """

    def __init__(
        self,
        labels: Sequence[str],
        table: Mapping[tuple[int, int], Mapping[int, object]],
        unit: Mapping[int, object],
        char: int = 0,
        check: bool = True,
    ):
        self.labels = tuple(labels)
        self.char = char
        self.field = f = Field(char)
        d = len(self.labels)
        self.table: dict[tuple[int, int], Vector] = {}
        for (i, j), v in table.items():
            clean = {k: f(c) for k, c in v.items() if not f.is_zero(f(c))}
            if clean:
                self.table[(i, j)] = clean
        self.unit: Vector = {k: f(c) for k, c in unit.items() if not f.is_zero(f(c))}
        if check:
            self._check(d)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul_basis(self, i: int, j: int) -> Vector:
        return self.table.get((i, j), {})

    def mul(self, u: Mapping[int, object], v: Mapping[int, object]) -> Vector:
        f = self.field
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = f.mul(a, b)
                for k, c in self.mul_basis(i, j).items():
                    out[k] = f.add(out.get(k, 0), f.mul(ab, c))
        return {k: c for k, c in out.items() if not f.is_zero(c)}

    def _check(self, d: int) -> None:
        for i, j, k in product(range(d), repeat=3):
            left = self.mul(self.mul_basis(i, j), {k: 1})
            right = self.mul({i: 1}, self.mul_basis(j, k))
            if left != right:
                raise StructureError(
                    f"not associative on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                )
        for i in range(d):
            e = {i: self.field(1)}
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise StructureError(f"unit law fails on {self.labels[i]}")

    def center_dim(self) -> int:
        d = self.dim
        rows = []
        for g in range(d):
            # [g, v] = 0 as linear equations in the coordinates of v
            for k in range(d):
                rows.append(
                    [
                        self.field.add(self.mul_basis(g, j).get(k, 0), self.field.neg(self.mul_basis(j, g).get(k, 0)))
                        for j in range(d)
                    ]
                )
        return len(nullspace(rows, d, self.field))

    def unit_first(self) -> "SCAlgebra":
        """An isomorphic copy whose basis element 0 is the unit."""
        f = self.field
        if self.unit == {0: f(1)}:
            return self
        j0 = min(self.unit)
        c = self.unit
        c0inv = f.inv(c[j0])
        order = [j0] + [k for k in range(self.dim) if k != j0]
        pos = {k: n for n, k in enumerate(order)}

        def new_coords(w: Vector) -> Vector:
            # old b_j0 = c0^{-1} (1 - sum_{k != j0} c_k b_k)
            out: Vector = {}
            t = f.mul(w.get(j0, 0), c0inv)
            if not f.is_zero(t):
                out[0] = t
            for k, x in w.items():
                if k != j0:
                    out[pos[k]] = f.add(out.get(pos[k], 0), x)
            for k, ck in c.items():
                if k != j0 and not f.is_zero(t):
                    out[pos[k]] = f.add(out.get(pos[k], 0), f.neg(f.mul(ck, t)))
            return {k: x for k, x in out.items() if not f.is_zero(x)}

        def old_vec(n: int) -> Vector:
            return dict(c) if n == 0 else {order[n]: f(1)}

        table = {}
        for a in range(self.dim):
            for b in range(self.dim):
                w = new_coords(self.mul(old_vec(a), old_vec(b)))
                if w:
                    table[(a, b)] = w
        labels = ("1",) + tuple(self.labels[k] for k in order[1:])
        return SCAlgebra(labels, table, {0: 1}, self.char, check=False)


def sc_from_monomial(A: MonomialAlgebra) -> SCAlgebra:
    """Structure constants of a monomial algebra on its path basis."""
    basis = A.basis
    index = {p: i for i, p in enumerate(basis)}
    table = {}
    for i, p in enumerate(basis):
        for j, r in enumerate(basis):
            pr = A.multiply(p, r)
            if pr is not None:
                table[(i, j)] = {index[pr]: 1}
    unit = {index[A.quiver.trivial(v)]: 1 for v in range(A.num_vertices)}
    return SCAlgebra([A.path_str(p) for p in basis], table, unit, A.char)


def sc_disjoint(S: SCAlgebra, T: SCAlgebra) -> SCAlgebra:
    """The product algebra S x T."""
    if S.char != T.char:
        raise ValueError("characteristics differ")
    off = S.dim
    table = dict(S.table)
    for (i, j), v in T.table.items():
        table[(i + off, j + off)] = {k + off: c for k, c in v.items()}
    unit = dict(S.unit)
    unit.update({k + off: c for k, c in T.unit.items()})
    labels = [f"({l},0)" for l in S.labels] + [f"(0,{l})" for l in T.labels]
    return SCAlgebra(labels, table, unit, S.char)


def sc_tensor(S: SCAlgebra, T: SCAlgebra) -> SCAlgebra:
    """The tensor product S (x) T with (a (x) b)(c (x) d) = ac (x) bd."""
    if S.char != T.char:
        raise ValueError("characteristics differ")
    f = S.field
    m = T.dim
    table = {}
    for (i, k), u in S.table.items():
        for (j, l), v in T.table.items():
            table[(i * m + j, k * m + l)] = {a * m + b: f.mul(x, y) for a, x in u.items() for b, y in v.items()}
    unit = {a * m + b: f.mul(x, y) for a, x in S.unit.items() for b, y in T.unit.items()}
    labels = [f"{a}⊗{b}" for a in S.labels for b in T.labels]
    return SCAlgebra(labels, table, unit, S.char)


# Normalized complexes.  After unit_first(), basis element 0 is the unit and
# the quotient S/k1 has basis 1..d-1.


def _check_size(size: int, cap: int) -> None:
    if size > cap:
        raise SizeCapError(f"complex of size {size} exceeds cap {cap}")


def _tuples(d: int, n: int):
    """Tensors S (x) Sbar^n as index tuples, in lexicographic order."""
    return list(product(range(d), *([range(1, d)] * n)))


def _bar_boundary(S: SCAlgebra, n: int, normalized: bool) -> SparseMatrix:
    d = S.dim
    f = S.field
    lo = 1 if normalized else 0
    src = list(product(range(d), *([range(lo, d)] * n)))
    dst = list(product(range(d), *([range(lo, d)] * (n - 1))))
    rows = {t: i for i, t in enumerate(dst)}
    cols = []
    for t in src:
        col: dict[int, object] = {}

        def put(prod_vec, make, sign, pos0):
            for k, c in prod_vec.items():
                if normalized and not pos0 and k == 0:
                    continue
                r = rows[make(k)]
                col[r] = f.add(col.get(r, 0), c if sign > 0 else f.neg(c))

        for i in range(n):
            put(
                S.mul_basis(t[i], t[i + 1]),
                lambda k, i=i: t[:i] + (k,) + t[i + 2 :],
                (-1) ** i,
                i == 0,
            )
        put(S.mul_basis(t[n], t[0]), lambda k: (k,) + t[1:n], (-1) ** n, True)
        cols.append(col)
    return SparseMatrix(len(dst), len(src), cols, f)


def sc_hh(S: SCAlgebra, n_max: int, cap: int = DEFAULT_CAP) -> list[int]:
    """hh_0..hh_{n_max} from the normalized complex S (x) Sbar^{(x) n}."""
    S = S.unit_first()
    d = S.dim
    _check_size(sum(d * (d - 1) ** n for n in range(n_max + 2)), cap)
    dims = [d * (d - 1) ** n for n in range(n_max + 2)]
    mats = [_bar_boundary(S, n, True) for n in range(1, n_max + 2)]
    return homology_dims(BoundarySequence(dims, mats), n_max)


def sc_hh_raw(S: SCAlgebra, n_max: int = 2, cap: int = 200_000) -> list[int]:
    """hh via the unnormalized complex S^{(x) n+1}; only for tiny n."""
    d = S.dim
    _check_size(sum(d ** (n + 1) for n in range(n_max + 2)), cap)
    dims = [d ** (n + 1) for n in range(n_max + 2)]
    mats = [_bar_boundary(S, n, False) for n in range(1, n_max + 2)]
    return homology_dims(BoundarySequence(dims, mats), n_max)


def _cochain_d(S: SCAlgebra, n: int) -> SparseMatrix:
    """d^n : Hom(Sbar^n, S) -> Hom(Sbar^{n+1}, S).

    (df)(a_0..a_n) = a_0 f(a_1..a_n) + sum_i (-1)^{i+1} f(.., a_i a_{i+1}, ..)
                     + (-1)^{n+1} f(a_0..a_{n-1}) a_n
    Basis cochains are (J, k): the map sending the tuple J to basis element k.
    """
    d = S.dim
    f = S.field
    ins = list(product(*([range(1, d)] * n)))
    outs = list(product(*([range(1, d)] * (n + 1))))
    col_index = {(J, k): j for j, (J, k) in enumerate(product(ins, range(d)))}
    ncols = len(ins) * d
    nrows = len(outs) * d
    cols: list[dict] = [{} for _ in range(ncols)]

    def add(J, k, row, c):
        col = cols[col_index[(J, k)]]
        col[row] = f.add(col.get(row, 0), c)

    for ri, I in enumerate(outs):
        base = ri * d
        for k in range(d):
            # a_0 f(a_1..a_n)
            for kk, c in S.mul_basis(I[0], k).items():
                add(I[1:], k, base + kk, c)
            # f(a_0..a_{n-1}) a_n
            for kk, c in S.mul_basis(k, I[n]).items():
                add(I[:n], k, base + kk, c if n % 2 else f.neg(c))
            for i in range(n):
                sign = -1 if i % 2 == 0 else 1
                for m, c in S.mul_basis(I[i], I[i + 1]).items():
                    if m == 0:
                        continue
                    J = I[:i] + (m,) + I[i + 2 :]
                    add(J, k, base + k, c if sign > 0 else f.neg(c))
    return SparseMatrix(nrows, ncols, cols, f)


def sc_hch(S: SCAlgebra, n_max: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Hochschild cohomology dimensions hch^0..hch^{n_max} (normalized cochains)."""
    S = S.unit_first()
    d = S.dim
    dims = [d * (d - 1) ** n for n in range(n_max + 2)]
    _check_size(sum(dims), cap)
    # Cohomology of C^0 -> C^1 -> ... is homology of the transposed complex.
    mats = [_cochain_d(S, n).transpose() for n in range(n_max + 1)]
    return homology_dims(BoundarySequence(dims, mats), n_max)
