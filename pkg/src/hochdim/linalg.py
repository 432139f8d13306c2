"""Exact linear algebra over Q and F_p.

Matrices are stored sparsely by column (``cols[j]`` maps row index to a
nonzero entry), because every differential here is assembled one basis
element at a time.  Rank over Q is computed with fraction-free integer
elimination; over F_p with ordinary modular elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import ComplexError


class Field:
    """The prime field of characteristic ``char`` (Q when ``char == 0``)."""

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        self.char = char

    def __repr__(self):
        return "Field(Q)" if self.char == 0 else f"Field(F_{self.char})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __call__(self, x):
        """Coerce an int or Fraction into the field."""
        p = self.char
        if p == 0:
            return x if isinstance(x, (int, Fraction)) else Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} is not defined in F_{p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if self.char == 0:
            return 1 / Fraction(a)
        return pow(a, -1, self.char)

    def pow(self, a, n: int):
        if self.char == 0:
            return Fraction(a) ** n
        return pow(a, n, self.char) if n >= 0 else pow(self.inv(a), -n, self.char)

    def is_zero(self, a) -> bool:
        return a == 0 if self.char == 0 else a % self.char == 0

    def divides(self, m: int) -> bool:
        """True iff the integer ``m`` is zero in this field."""
        return m == 0 if self.char == 0 else m % self.char == 0


class SparseMatrix:
    """An ``nrows x ncols`` matrix over a :class:`Field`, stored by column."""

    __slots__ = ("nrows", "ncols", "cols", "field")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[Mapping[int, object]], field: Field):
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        clean = []
        for c in cols:
            d = {}
            for i, v in c.items():
                v = field(v)
                if not field.is_zero(v):
                    if not 0 <= i < nrows:
                        raise ValueError(f"row index {i} out of range")
                    d[i] = v
            clean.append(d)
        self.cols = tuple(clean)

    @classmethod
    def zero(cls, nrows: int, ncols: int, field: Field) -> "SparseMatrix":
        return cls(nrows, ncols, [{} for _ in range(ncols)], field)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], field: Field) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{i: rows[i][j] for i in range(nrows) if rows[i][j] != 0} for j in range(ncols)]
        return cls(nrows, ncols, cols, field)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_dense(self) -> list[list]:
        out = [[self.field(0)] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        cols: list[dict] = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                cols[i][j] = v
        return SparseMatrix(self.ncols, self.nrows, cols, self.field)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ComplexError(f"cannot compose {self.shape} with {other.shape}")
        f = self.field
        cols = []
        for c in other.cols:
            acc: dict[int, object] = {}
            for k, v in c.items():
                for i, w in self.cols[k].items():
                    acc[i] = f.add(acc.get(i, 0), f.mul(w, v))
            cols.append(acc)
        return SparseMatrix(self.nrows, other.ncols, cols, f)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ComplexError(f"cannot add {self.shape} and {other.shape}")
        f = self.field
        cols = []
        for a, b in zip(self.cols, other.cols):
            d = dict(a)
            for i, v in b.items():
                d[i] = f.add(d.get(i, 0), v)
            cols.append(d)
        return SparseMatrix(self.nrows, self.ncols, cols, f)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SparseMatrix":
        """Row i moves to ``row_perm[i]``; column ``col_perm[j]`` becomes column j."""
        cols = [{row_perm[i]: v for i, v in self.cols[col_perm[j]].items()} for j in range(self.ncols)]
        return SparseMatrix(self.nrows, self.ncols, cols, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.shape == other.shape
            and self.field == other.field
            and self.cols == other.cols
        )

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, {self.field})"


def rank(m: SparseMatrix) -> int:
    """Exact rank of a sparse matrix."""
    vectors = [c for c in m.cols if c]
    if not vectors:
        return 0
    # sparsest columns first keeps fill-in down
    vectors.sort(key=len)
    if m.field.char == 0:
        return _rank_q(vectors)
    return _rank_mod_p(vectors, m.field.char)


def _rank_mod_p(vectors: Iterable[Mapping[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for v in vectors:
        v = {i: x % p for i, x in v.items() if x % p}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {i: x * inv % p for i, x in v.items()}
                break
            c = v[lead]
            for i, x in piv.items():
                y = (v.get(i, 0) - c * x) % p
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
    return len(pivots)


def _integer_vector(v: Mapping[int, object]) -> dict[int, int]:
    dens = [Fraction(x).denominator for x in v.values()]
    scale = lcm(*dens) if dens else 1
    out = {i: int(Fraction(x) * scale) for i, x in v.items()}
    return _primitive(out)


def _primitive(v: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return {i: x // g for i, x in v.items()}
    return v


def _rank_q(vectors: Iterable[Mapping[int, object]]) -> int:
    # Fraction-free: v <- a*v - c*piv with a, c the two leading entries
    # divided by their gcd, then v is divided by its content.
    pivots: dict[int, dict[int, int]] = {}
    for v in vectors:
        v = _integer_vector(v)
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = v
                break
            a, c = piv[lead], v[lead]
            g = gcd(a, c)
            a, c = a // g, c // g
            w = {i: a * x for i, x in v.items()} if a != 1 else dict(v)
            for i, x in piv.items():
                y = w.get(i, 0) - c * x
                if y:
                    w[i] = y
                else:
                    w.pop(i, None)
            v = _primitive(w)
    return len(pivots)


@dataclass
class BoundarySequence:
    """A chain complex ``C_0 <- C_1 <- C_2 <- ...`` truncated at the top.

    ``dims[n]`` is dim C_n and ``matrices[n-1]`` is the differential
    C_n -> C_{n-1} (so there are ``len(dims) - 1`` matrices).
    """

    dims: list[int]
    matrices: list[SparseMatrix]

    def __post_init__(self):
        if len(self.matrices) != len(self.dims) - 1:
            raise ComplexError("need exactly one matrix per positive degree")
        for n, m in enumerate(self.matrices, start=1):
            if m.shape != (self.dims[n - 1], self.dims[n]):
                raise ComplexError(
                    f"differential {n} has shape {m.shape}, expected {(self.dims[n - 1], self.dims[n])}"
                )

    def check(self) -> None:
        for n in range(1, len(self.matrices)):
            if not (self.matrices[n - 1] @ self.matrices[n]).is_zero():
                raise ComplexError(f"d_{n} d_{n + 1} != 0")


def homology_dims(seq: BoundarySequence, n_max: int | None = None, check: bool = True) -> list[int]:
    """dim H_n = dim C_n - rank d_n - rank d_{n+1} for n <= n_max.

    ``n_max`` defaults to the top degree at which d_{n+1} is available.
    The truncated Euler identity
    ``sum (-1)^n dim C_n = sum (-1)^n dim H_n + (-1)^N rank d_{N+1}``
    is asserted on the way out.
    """
    top = len(seq.dims) - 2
    if n_max is None:
        n_max = top
    if n_max > top:
        raise ComplexError(f"need differentials up to degree {n_max + 1}")
    if check:
        seq.check()
    ranks = [0] + [rank(m) for m in seq.matrices[: n_max + 1]]
    h = [seq.dims[n] - ranks[n] - ranks[n + 1] for n in range(n_max + 1)]
    euler_c = sum((-1) ** n * seq.dims[n] for n in range(n_max + 1))
    euler_h = sum((-1) ** n * h[n] for n in range(n_max + 1))
    if euler_c != euler_h + (-1) ** n_max * ranks[n_max + 1] or min(h, default=0) < 0:
        raise ComplexError("Euler characteristic bookkeeping failed")
    return h


# Small dense helpers for module computations.


def rref(rows: Sequence[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [[field(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.add(x, field.neg(field.mul(f, y))) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> list[list]:
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    if not rows:
        return [[field(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field(0)] * ncols
        v[fc] = field(1)
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def solve(columns: Sequence[Sequence], target: Sequence, field: Field) -> list | None:
    """Coefficients x with sum_j x_j columns[j] = target, or None."""
    n = len(columns)
    dim = len(target)
    rows = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    if not rows:
        return [field(0)] * n
    red, pivots = rref(rows, field)
    if n in pivots:
        return None
    x = [field(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return x


def dense_rank(rows: Sequence[Sequence], field: Field) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows, field)[1])
