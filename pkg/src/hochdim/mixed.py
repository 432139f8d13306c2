"""The E-normalized mixed complex of a monomial algebra.

In degree n the complex has basis the tuples ``(p_0, p_1, ..., p_n)`` of
nonzero paths with ``p_1..p_n`` of length >= 1, ``p_0`` possibly trivial,
and ``p_0 p_1 ... p_n`` a closed path.  The Hochschild boundary ``b`` and
Connes' operator ``B`` both preserve the total path length, so every
computation splits into independent blocks by that length (the internal
degree q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import SizeCapError
from .linalg import BoundarySequence, Field, SparseMatrix, homology_dims
from .quiver import MonomialAlgebra, Path

DEFAULT_CAP = 2_000_000

Chain = tuple[Path, ...]


def chain_degree(chain: Chain) -> int:
    return sum(p.length for p in chain)


def _chain_key(chain: Chain):
    return (chain_degree(chain), tuple(p.sort_key() for p in chain))


class MixedComplex:
    """Lazily built chain bases and b/B blocks, cut off at ``max_degree``."""

    def __init__(self, algebra: MonomialAlgebra, max_degree: int, cap: int = DEFAULT_CAP):
        self.algebra = algebra
        self.max_degree = max_degree
        self.cap = cap
        self.field = Field(algebra.char)
        self._chains: dict[int, dict[int, list[Chain]]] = {}
        self._index: dict[tuple[int, int], dict[Chain, int]] = {}
        self._size = 0

    def _generate(self, n: int) -> Iterator[Chain]:
        A = self.algebra
        qmax = self.max_degree
        rad_from = A.radical_paths_from
        for p0 in A.basis:
            if p0.length + n > qmax:
                continue
            if n == 0:
                if p0.source == p0.target:
                    yield (p0,)
                continue
            stack = [((p0,), p0.length)]
            while stack:
                chain, deg = stack.pop()
                k = len(chain) - 1  # positions already filled after p0
                last = chain[-1]
                for p in rad_from[last.target]:
                    d = deg + p.length
                    if d + (n - k - 1) > qmax:
                        continue
                    if k + 1 == n:
                        if p.target == p0.source:
                            yield chain + (p,)
                    else:
                        stack.append((chain + (p,), d))

    def chains(self, n: int, q: int | None = None) -> list[Chain]:
        """Basis of C_n, restricted to internal degree ``q`` when given."""
        if n not in self._chains:
            by_deg: dict[int, list[Chain]] = {}
            for c in self._generate(n):
                self._size += 1
                if self._size > self.cap:
                    raise SizeCapError(
                        f"mixed complex exceeds {self.cap} basis elements (chain degree {n})"
                    )
                by_deg.setdefault(chain_degree(c), []).append(c)
            for lst in by_deg.values():
                lst.sort(key=_chain_key)
            self._chains[n] = by_deg
        by_deg = self._chains[n]
        if q is not None:
            return by_deg.get(q, [])
        return [c for d in sorted(by_deg) for c in by_deg[d]]

    def index(self, n: int, q: int | None) -> dict[Chain, int]:
        key = (n, -1 if q is None else q)
        if key not in self._index:
            self._index[key] = {c: i for i, c in enumerate(self.chains(n, q))}
        return self._index[key]

    def b(self, n: int, q: int | None = None) -> SparseMatrix:
        """b_n : C_n -> C_{n-1}, on the degree-q block (or everything)."""
        A = self.algebra
        src = self.chains(n, q)
        rows = self.index(n - 1, q) if n >= 1 else {}
        cols = []
        for t in src:
            col: dict[int, int] = {}
            for i in range(n):
                prod = A.multiply(t[i], t[i + 1])
                if prod is not None:
                    r = rows[t[:i] + (prod,) + t[i + 2 :]]
                    col[r] = col.get(r, 0) + (-1) ** i
            if n >= 1:
                prod = A.multiply(t[n], t[0])
                if prod is not None:
                    r = rows[(prod,) + t[1:n]]
                    col[r] = col.get(r, 0) + (-1) ** n
            cols.append(col)
        return SparseMatrix(len(rows), len(src), cols, self.field)

    def B(self, n: int, q: int | None = None) -> SparseMatrix:
        """Connes' B_n : C_n -> C_{n+1}.

        B(a_0, ..., a_n) = sum_i (-1)^{in} (1, a_i, ..., a_n, (a_0)_r, ..., a_{i-1});
        the unit becomes the trivial path at the source of a_i, and the whole
        term vanishes when a_0 is a trivial path.
        """
        A = self.algebra
        q_ = A.quiver
        src = self.chains(n, q)
        rows = self.index(n + 1, q)
        cols = []
        for t in src:
            col: dict[int, int] = {}
            if not t[0].is_trivial:
                for i in range(n + 1):
                    image = (q_.trivial(t[i].source),) + t[i:] + t[:i]
                    r = rows[image]
                    col[r] = col.get(r, 0) + (-1) ** (i * n)
            cols.append(col)
        return SparseMatrix(len(rows), len(src), cols, self.field)


def _complex_for(A: MonomialAlgebra, n_top: int, cap: int) -> MixedComplex:
    return MixedComplex(A, (n_top + 1) * A.max_length, cap)


def chain_basis(A: MonomialAlgebra, n: int, q: int | None = None, cap: int = DEFAULT_CAP) -> list[Chain]:
    """Basis of the degree-n chains, optionally only those of internal degree q."""
    top = n if q is None else max(n, q)
    return _complex_for(A, top, cap).chains(n, q)


def boundary_b_matrix(A: MonomialAlgebra, n: int, cap: int = DEFAULT_CAP) -> SparseMatrix:
    """Matrix of b_n on the full chain bases (ordered by degree, then paths)."""
    if n < 1:
        raise ValueError("b_n is defined for n >= 1")
    return _complex_for(A, n, cap).b(n)


def connes_B_matrix(A: MonomialAlgebra, n: int, cap: int = DEFAULT_CAP) -> SparseMatrix:
    if n < 0:
        raise ValueError("B_n is defined for n >= 0")
    return _complex_for(A, n + 1, cap).B(n)


@dataclass
class HHResult:
    """Dimensions per homological degree plus the internal-degree refinement."""

    dims: list[int]
    graded: dict[tuple[int, int], int] = field(default_factory=dict)

    def graded_table(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (p, q), d in sorted(self.graded.items()):
            out.setdefault(p, {})[q] = d
        return out


def hh(A: MonomialAlgebra, n_max: int, cap: int = DEFAULT_CAP, positive_only: bool = False) -> HHResult:
    """Hochschild homology hh_0..hh_{n_max}, computed block by block in q.

    With ``positive_only`` the internal degree q = 0 (the trivial paths) is
    skipped; this is the part that cycle-algebra summands contribute.
    """
    mc = _complex_for(A, n_max + 1, cap)
    L = A.max_length
    dims = [0] * (n_max + 1)
    graded: dict[tuple[int, int], int] = {}
    for q in range(1 if positive_only else 0, (n_max + 1) * L + 1):
        seq = BoundarySequence(
            [len(mc.chains(n, q)) for n in range(n_max + 2)],
            [mc.b(n, q) for n in range(1, n_max + 2)],
        )
        if not any(seq.dims[: n_max + 1]):
            continue
        for p, d in enumerate(homology_dims(seq, n_max)):
            if d:
                dims[p] += d
                graded[(p, q)] = d
    return HHResult(dims, graded)


def _total_differential(mc: MixedComplex, n: int, q: int) -> tuple[SparseMatrix, int, int]:
    """d = b + B : D_n -> D_{n-1} on the q-block, D_n = C_n + C_{n-2} + ..."""
    src_parts = list(range(n, -1, -2))
    dst_parts = list(range(n - 1, -1, -2))
    src_off, off = {}, 0
    for m in src_parts:
        src_off[m] = off
        off += len(mc.chains(m, q))
    ncols = off
    dst_off, off = {}, 0
    for m in dst_parts:
        dst_off[m] = off
        off += len(mc.chains(m, q))
    nrows = off
    cols: list[dict] = [{} for _ in range(ncols)]
    f = mc.field
    for m in src_parts:
        blocks = []
        if m - 1 in dst_off:
            blocks.append((mc.b(m, q), dst_off[m - 1]))
        if m + 1 in dst_off:
            blocks.append((mc.B(m, q), dst_off[m + 1]))
        for mat, roff in blocks:
            for j, c in enumerate(mat.cols):
                col = cols[src_off[m] + j]
                for i, v in c.items():
                    col[roff + i] = f.add(col.get(roff + i, 0), v)
    return SparseMatrix(nrows, ncols, cols, f), nrows, ncols


def hc(A: MonomialAlgebra, n_max: int, cap: int = DEFAULT_CAP, positive_only: bool = False) -> HHResult:
    """Cyclic homology from the total complex of the (b, B) bicomplex."""
    mc = _complex_for(A, n_max + 1, cap)
    L = A.max_length
    dims = [0] * (n_max + 1)
    graded: dict[tuple[int, int], int] = {}
    for q in range(1 if positive_only else 0, (n_max + 1) * L + 1):
        mats, tdims = [], []
        for n in range(n_max + 2):
            if n == 0:
                tdims.append(len(mc.chains(0, q)))
                continue
            m, nrows, ncols = _total_differential(mc, n, q)
            mats.append(m)
            tdims.append(ncols)
        if not any(tdims[: n_max + 1]):
            continue
        for p, d in enumerate(homology_dims(BoundarySequence(tdims, mats), n_max)):
            if d:
                dims[p] += d
                graded[(p, q)] = d
    return HHResult(dims, graded)
