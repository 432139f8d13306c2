"""Minimal projective resolutions of right modules over a monomial algebra.

A right module is a representation: a space ``M_v`` per vertex and, per
arrow a, the matrix of ``m -> m.a`` from ``M_{s(a)}`` to ``M_{e(a)}``.
The indecomposable projective ``P_v = e_v A`` has the nonzero paths
starting at v as basis, with arrows acting by right concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Field, dense_rank, nullspace, rref, solve
from .quiver import MonomialAlgebra, Path

Matrix = list[list]


def _matvec(m: Matrix, v: list, f: Field) -> list:
    out = []
    for row in m:
        acc = f(0)
        for a, b in zip(row, v):
            if a and b:
                acc = f.add(acc, f.mul(a, b))
        out.append(acc)
    return out


@dataclass
class RightModule:
    algebra: MonomialAlgebra
    dims: tuple[int, ...]
    actions: dict[int, Matrix]  # arrow -> dim M_{e(a)} x dim M_{s(a)}

    def __post_init__(self):
        q = self.algebra.quiver
        for i, a in enumerate(q.arrows):
            m = self.actions.setdefault(i, [[0] * self.dims[a.source] for _ in range(self.dims[a.target])])
            if len(m) != self.dims[a.target] or any(len(r) != self.dims[a.source] for r in m):
                raise ValueError(f"action of {a.name} has the wrong shape")

    @property
    def field(self) -> Field:
        return Field(self.algebra.char)

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def act(self, v: list, word) -> list:
        f = self.field
        for a in word:
            v = _matvec(self.actions[a], v, f)
        return v

    def check_relations(self) -> bool:
        """Every relation acts as zero."""
        A = self.algebra
        q = A.quiver
        words = list(A.relations)
        if A.truncation is not None:
            for v in range(A.num_vertices):
                words.extend(_words_from(q, v, A.truncation))
        for w in words:
            s = q.arrows[w[0]].source
            for k in range(self.dims[s]):
                e = [int(i == k) for i in range(self.dims[s])]
                if any(self.act(e, w)):
                    return False
        return True

    def radical(self, v: int) -> Matrix:
        """Columns spanning (M.r)_v."""
        cols = []
        for i, a in enumerate(self.algebra.quiver.arrows):
            if a.target == v:
                m = self.actions[i]
                cols.extend([[m[r][c] for r in range(len(m))] for c in range(self.dims[a.source])])
        return cols

    def top_dims(self) -> tuple[int, ...]:
        f = self.field
        return tuple(self.dims[v] - dense_rank(self.radical(v), f) for v in range(len(self.dims)))


def _words_from(q, v: int, length: int):
    stack = [((), v)]
    while stack:
        w, u = stack.pop()
        if len(w) == length:
            yield w
            continue
        for a in q.out_arrows[u]:
            stack.append((w + (a,), q.arrows[a].target))


def simple(A: MonomialAlgebra, v: int) -> RightModule:
    dims = tuple(int(u == v) for u in range(A.num_vertices))
    return RightModule(A, dims, {})


def _projective_basis(A: MonomialAlgebra, v: int) -> list[list[Path]]:
    per_vertex: list[list[Path]] = [[] for _ in range(A.num_vertices)]
    for p in A.basis:
        if p.source == v:
            per_vertex[p.target].append(p)
    return per_vertex


def projective(A: MonomialAlgebra, v: int) -> RightModule:
    basis = _projective_basis(A, v)
    index = [{p: i for i, p in enumerate(b)} for b in basis]
    q = A.quiver
    actions = {}
    for i, a in enumerate(q.arrows):
        m = [[0] * len(basis[a.source]) for _ in range(len(basis[a.target]))]
        for c, p in enumerate(basis[a.source]):
            pa = A.multiply(p, Path(a.source, a.target, (i,)))
            if pa is not None:
                m[index[a.target][pa]][c] = 1
        actions[i] = m
    return RightModule(A, tuple(len(b) for b in basis), actions)


@dataclass
class Cover:
    """A projective cover ``⊕ P_w -> M``.

    ``summands`` lists the vertex of each copy of P_w; ``module`` is the
    direct sum; ``maps[u]`` is the dim M_u x dim cover_u matrix of the
    surjection at vertex u.
    """

    summands: list[int]
    module: RightModule
    maps: list[Matrix]

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.summands:
            out[w] = out.get(w, 0) + 1
        return out


def projective_cover(M: RightModule) -> Cover:
    A = M.algebra
    f = M.field
    nv = A.num_vertices
    # tops: for each vertex, vectors completing a basis of the radical
    tops: list[tuple[int, list]] = []
    for w in range(nv):
        rad = M.radical(w)
        current = rref(rad, f)[0] if rad else []
        for k in range(M.dims[w]):
            e = [f(int(i == k)) for i in range(M.dims[w])]
            if dense_rank(current + [e], f) > len(current):
                current.append(e)
                tops.append((w, e))
    summands = [w for w, _ in tops]
    proj = {w: projective(A, w) for w in set(summands)}
    pbasis = {w: _projective_basis(A, w) for w in set(summands)}
    dims = tuple(sum(proj[w].dims[u] for w in summands) for u in range(nv))
    actions = {}
    for i, a in enumerate(A.quiver.arrows):
        m = [[f(0)] * dims[a.source] for _ in range(dims[a.target])]
        ro = co = 0
        for w in summands:
            blk = proj[w].actions[i]
            for r, row in enumerate(blk):
                for c, x in enumerate(row):
                    if x:
                        m[ro + r][co + c] = f(x)
            ro += proj[w].dims[a.target]
            co += proj[w].dims[a.source]
        actions[i] = m
    cover_module = RightModule(A, dims, actions)
    maps = []
    for u in range(nv):
        cols = []
        for w, t in tops:
            for p in pbasis[w][u]:
                cols.append(M.act(t, p.arrows))
        maps.append([[cols[j][r] for j in range(len(cols))] for r in range(M.dims[u])])
    return Cover(summands, cover_module, maps)


def syzygy(M: RightModule, cover: Cover | None = None) -> RightModule:
    """Kernel of the projective cover, with the induced action."""
    cover = cover or projective_cover(M)
    P = cover.module
    f = M.field
    A = M.algebra
    kernels = []
    for u in range(A.num_vertices):
        kernels.append(nullspace(cover.maps[u], P.dims[u], f))
    actions = {}
    for i, a in enumerate(A.quiver.arrows):
        src, dst = kernels[a.source], kernels[a.target]
        m = [[f(0)] * len(src) for _ in range(len(dst))]
        for c, k in enumerate(src):
            image = _matvec(P.actions[i], k, f)
            coords = solve(dst, image, f)
            if coords is None:
                raise ArithmeticError("kernel is not a submodule")
            for r, x in enumerate(coords):
                m[r][c] = x
        actions[i] = m
    return RightModule(A, tuple(len(k) for k in kernels), actions)


@dataclass(frozen=True)
class Probe:
    """Result of a bounded dimension probe: exact value or a lower bound."""

    value: int
    exact: bool

    def __str__(self):
        return f"= {self.value}" if self.exact else f"> {self.value}"


@dataclass
class ResolutionTrace:
    covers: list[dict[int, int]] = field(default_factory=list)
    syzygy_dims: list[int] = field(default_factory=list)


def resolve(M: RightModule, steps: int) -> tuple[Probe, ResolutionTrace]:
    trace = ResolutionTrace()
    for d in range(steps + 1):
        cover = projective_cover(M)
        omega = syzygy(M, cover)
        trace.covers.append(cover.multiplicities())
        trace.syzygy_dims.append(omega.dimension)
        if omega.dimension == 0:
            return Probe(d, True), trace
        M = omega
    return Probe(steps, False), trace


def projdim_probe(M: RightModule, N: int) -> Probe:
    """Projective dimension if it is at most N, else the bound "> N"."""
    if M.dimension == 0:
        return Probe(0, True)
    return resolve(M, N)[0]


def gldim_probe(A: MonomialAlgebra, N: int) -> Probe:
    """Maximum projective dimension of the simple modules, probed up to N."""
    best = 0
    for v in range(A.num_vertices):
        p = projdim_probe(simple(A, v), N)
        if not p.exact:
            return Probe(N, False)
        best = max(best, p.value)
    return Probe(best, True)
