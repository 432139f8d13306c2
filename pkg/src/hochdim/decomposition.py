"""Hochschild and cyclic homology of a monomial algebra as a sum over
minimal cycle algebras, one per rotation orbit of proper cycles.

Every chain of positive path length in the normalized mixed complex of A
spells out a power of a unique proper cycle up to rotation, so the mixed
complex splits into one summand per orbit.  The summand for the orbit of
``a_1 ... a_r`` is the positive-length part of the mixed complex of the
basic r-cycle algebra obtained by pulling the relations of A back along
``c_i -> a_i``.  The length-0 part (trivial paths) is kept separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .mixed import DEFAULT_CAP, hc, hh
from .quiver import CycleWord, MonomialAlgebra, proper_cycle_orbits
from .skoldberg import basic_cycle_quiver, hh_p_basic_cycle


@dataclass(frozen=True)
class CycleAlgebra:
    orbit: CycleWord
    algebra: MonomialAlgebra

    @property
    def length(self) -> int:
        return self.orbit.length

    def truncation_index(self) -> int | None:
        """n when the pulled-back relations are exactly all length-n paths."""
        rels = self.algebra.relations
        if not rels:
            return None
        n = len(rels[0])
        r = self.length
        if all(len(x) == n for x in rels) and len(rels) == r:
            return n
        return None


def minimal_cycle_algebra(A: MonomialAlgebra, orbit: CycleWord) -> CycleAlgebra:
    """Pull the relations of A back to the basic cycle over ``orbit``.

    A wrap-around path of the r-cycle starting at position i with m arrows
    is a relation iff its image in Q is zero in A; only the minimal ones
    are kept.  All images of length L + 1 vanish, so m <= L + 1 suffices.
    """
    if not orbit.proper:
        raise ValueError("cycle algebras are built from proper cycles only")
    word = orbit.arrows
    r = len(word)
    L = A.max_length

    def image(i: int, m: int) -> tuple[int, ...]:
        return tuple(word[(i + t) % r] for t in range(m))

    rels = []
    for i in range(r):
        for m in range(2, L + 2):
            if A.is_zero_word(image(i, m)):
                # minimal: dropping the last arrow already gives a nonzero
                # path (dropping the first is handled by the reduction)
                rels.append(tuple((i + t) % r for t in range(m)))
                break
    Z = MonomialAlgebra(basic_cycle_quiver(r), tuple(rels), None, A.char)
    return CycleAlgebra(orbit, Z)


def contributing_orbits(A: MonomialAlgebra, n: int) -> list[CycleWord]:
    """Proper-cycle orbits that can carry homology in degree n.

    A chain of degree n has path length at most (n + 1) L, and the chains of
    a cycle algebra on an r-cycle have length divisible by r, so orbits
    longer than (n + 1) L contribute nothing.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[CycleWord] = []
    for r in range(1, (n + 1) * A.max_length + 1):
        out.extend(proper_cycle_orbits(A.quiver, r)[0])
    return out


@dataclass
class OrbitRow:
    orbit: CycleWord
    word: str
    hh: list[int]
    hc: list[int] | None = None
    method: str = "direct"


@dataclass
class Decomposition:
    """Per-orbit contributions for degrees 1..n_max (index 0 unused)."""

    rows: list[OrbitRow] = field(default_factory=list)
    n_max: int = 0

    def totals(self, kind: str = "hh") -> list[int]:
        out = [0] * (self.n_max + 1)
        for row in self.rows:
            vals = row.hh if kind == "hh" else row.hc
            for n in range(1, self.n_max + 1):
                out[n] += vals[n]
        return out

    def breakdown(self, n: int, kind: str = "hh") -> dict[str, int]:
        out = {}
        for row in self.rows:
            v = (row.hh if kind == "hh" else row.hc)[n]
            if v:
                out[row.word] = v
        return out


def _summand_hh(Z: CycleAlgebra, n_max: int, use_formula: bool, cap: int) -> tuple[list[int], str]:
    tn = Z.truncation_index() if use_formula else None
    if tn is not None:
        vals = [0] + [hh_p_basic_cycle(Z.length, tn, p, Z.algebra.char) for p in range(1, n_max + 1)]
        return vals, "formula"
    return hh(Z.algebra, n_max, cap, positive_only=True).dims, "direct"


def decompose(
    A: MonomialAlgebra,
    n_max: int,
    *,
    with_hc: bool = False,
    use_formula: bool = False,
    cap: int = DEFAULT_CAP,
) -> Decomposition:
    if n_max < 1:
        raise ValueError("the decomposition covers degrees n >= 1")
    dec = Decomposition(n_max=n_max)
    for orbit in contributing_orbits(A, n_max):
        Z = minimal_cycle_algebra(A, orbit)
        vals, method = _summand_hh(Z, n_max, use_formula, cap)
        vals[0] = 0
        row = OrbitRow(orbit, A.quiver.word_str(orbit.arrows), vals, method=method)
        if with_hc:
            row.hc = hc(Z.algebra, n_max, cap, positive_only=True).dims
            row.hc[0] = 0
        dec.rows.append(row)
    return dec


def hh_decomposed(A: MonomialAlgebra, n_max: int, use_formula: bool = False, cap: int = DEFAULT_CAP) -> Decomposition:
    """hh_n(A) = sum over minimal cycle algebras Z of hh_n(Z), for 1 <= n <= n_max."""
    return decompose(A, n_max, use_formula=use_formula, cap=cap)


def hc_decomposed(A: MonomialAlgebra, n_max: int, cap: int = DEFAULT_CAP) -> list[int]:
    """hc_n(A) for 1 <= n <= n_max (index 0 unused) from the orbit summands.

    The trivial paths of A form a separate summand with zero differentials,
    contributing |Q_0| to every even degree.
    """
    dec = decompose(A, n_max, with_hc=True, cap=cap)
    totals = dec.totals("hc")
    for n in range(2, n_max + 1, 2):
        totals[n] += A.num_vertices
    return totals
