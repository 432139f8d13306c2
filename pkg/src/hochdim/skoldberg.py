"""Closed formulas for truncated quiver algebras kQ/k^nQ.

Covers the bigraded Hochschild homology of a truncated algebra in terms
of cycle-orbit counts, the specialisation to a single basic cycle, the
arithmetic progressions of degrees on which that homology is nonzero, and
the acyclicity classifier for truncated algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .linalg import Field
from .quiver import CycleWord, MonomialAlgebra, Quiver, cycle_orbits, proper_cycle_orbits, shortest_cycle


@dataclass(frozen=True)
class TruncatedPresentation:
    quiver: Quiver
    n: int
    char: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("truncation index must be >= 2")

    @classmethod
    def of(cls, A: MonomialAlgebra) -> "TruncatedPresentation":
        if not A.is_truncated:
            raise ValueError("algebra is not given in truncated form")
        return cls(A.quiver, A.truncation, A.char)

    def algebra(self) -> MonomialAlgebra:
        return MonomialAlgebra(self.quiver, (), self.n, self.char)


def _divisors(q: int) -> list[int]:
    return [r for r in range(1, q + 1) if q % r == 0]


def _char_divides(char: int, m: int) -> int:
    # dim Ker(m: k -> k) = dim Coker(m: k -> k) = 1 iff m = 0 in k
    return int(Field(char).divides(m))


def hh_pq_truncated(T: TruncatedPresentation, p: int, q: int) -> int:
    """dim HH_{p,q} of kQ/k^nQ (homological degree p, path length q)."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    n = T.n
    if p == 0 and q == 0:
        return len(T.quiver.vertices)
    c, e = divmod(q, n)
    if 1 <= e <= n - 1:
        if 2 * c <= p <= 2 * c + 1:
            return cycle_orbits(T.quiver, q)[1]
        return 0
    if e == 0 and ((p == 2 * c - 1 and p > 0) or (p == 2 * c and p > 0)):
        total = 0
        for r in _divisors(q):
            b_r = proper_cycle_orbits(T.quiver, r)[1]
            if b_r:
                g = gcd(n, r)
                total += b_r * (g - 1 + _char_divides(T.char, n // g))
        return total
    return 0


def q_bound(p: int, n: int) -> int:
    """No HH_{p,q} is nonzero for q above (floor(p/2) + 1) * n."""
    return (p // 2 + 1) * n


def hh_graded_truncated(T: TruncatedPresentation, p_max: int) -> dict[tuple[int, int], int]:
    out = {}
    for p in range(p_max + 1):
        for q in range(q_bound(p, T.n) + 1):
            d = hh_pq_truncated(T, p, q)
            if d:
                out[(p, q)] = d
    return out


def hh_total_truncated(T: TruncatedPresentation, p_max: int) -> list[int]:
    dims = [0] * (p_max + 1)
    for (p, _), d in hh_graded_truncated(T, p_max).items():
        dims[p] += d
    return dims


def hh_p_basic_cycle(l: int, n: int, p: int, char: int = 0) -> int:
    """hh_p of the truncated algebra kQ/k^nQ on a basic cycle with l arrows."""
    if l < 1 or n < 2 or p < 0:
        raise ValueError("need l >= 1, n >= 2, p >= 0")
    if p == 0:
        return l + (n - 1) // l
    h = p // 2
    base = (h * n + n - 1) // l - (h * n) // l
    if ((p + 1) // 2 * n) % l:
        return base
    g = gcd(n, l)
    return base + g - 1 + _char_divides(char, n // g)


@dataclass(frozen=True)
class Progression:
    """Degrees ``start, start + step, ...`` on which hh_p >= 1."""

    start: int
    step: int
    reason: str

    def members(self, count: int) -> list[int]:
        return [self.start + k * self.step for k in range(count)]


def infinite_witness(l: int, n: int) -> Progression:
    """An infinite set of degrees with nonzero homology for a truncated basic cycle."""
    if l < 1 or n < 2:
        raise ValueError("need l >= 1, n >= 2")
    g = gcd(n, l)
    if g >= 2:
        # p = 2ml - 1, m >= 1
        return Progression(2 * l - 1, 2 * l, "gcd(n, l) >= 2")
    if l <= n - 1:
        return Progression(1, 1, "gcd(n, l) = 1 and l <= n - 1")
    # un + vl = 1 with u taken as the inverse of n mod l
    u = pow(n, -1, l)
    v = (1 - u * n) // l
    m0 = abs(u) + abs(v) + 1
    return Progression(2 * (m0 * l + u - 1), 2 * l, f"gcd(n, l) = 1, l > n - 1, u={u}, v={v}")


@dataclass(frozen=True)
class TruncatedClassification:
    acyclic: bool
    gldim_finite: bool
    hhdim_zero: bool
    witness: CycleWord | None = None
    witness_algebra: MonomialAlgebra | None = None
    progression: Progression | None = None


def basic_cycle_quiver(l: int) -> Quiver:
    """Vertices 0..l-1 with arrows c1..cl, c_i : i-1 -> i mod l."""
    return Quiver.build(range(l), [(f"c{i + 1}", i, (i + 1) % l) for i in range(l)])


def classify_truncated(T: TruncatedPresentation) -> TruncatedClassification:
    """Acyclic quiver, finite global dimension and hh.dim = 0 coincide for
    truncated algebras; a cyclic quiver comes with its shortest (basic)
    cycle as witness of infinite hh.dim."""
    w = shortest_cycle(T.quiver)
    if w is None:
        return TruncatedClassification(True, True, True)
    l = w.length
    Z = MonomialAlgebra(basic_cycle_quiver(l), (), T.n, T.char)
    return TruncatedClassification(False, False, False, w, Z, infinite_witness(l, T.n))
