"""End-to-end Hochschild/cyclic homology report for a monomial algebra.

Steps: proper-cycle orbits, their cycle algebras, per-orbit homology (a
closed formula when the cycle algebra is truncated, the complex
otherwise), totals for n >= 1, hh_0 and hc_0 from the algebra directly,
and a comparison with the direct complex of A when it fits under the cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import decompose, minimal_cycle_algebra
from .errors import CrossCheckError, SizeCapError
from .mixed import DEFAULT_CAP, hc, hh
from .quiver import MonomialAlgebra

CROSSCHECK_CAP = 200_000


@dataclass
class AlgorithmReport:
    n_max: int
    orbits: list[dict] = field(default_factory=list)
    hh: list[int] = field(default_factory=list)
    hh_methods: list[str] = field(default_factory=list)
    hc: list[int] = field(default_factory=list)
    hc_methods: list[str] = field(default_factory=list)
    direct_hh: list[int] | None = None
    direct_hc: list[int] | None = None

    @property
    def crosschecked(self) -> bool:
        return self.direct_hh is not None


def run_algorithm(
    A: MonomialAlgebra,
    n_max: int,
    *,
    with_hc: bool = True,
    crosscheck: bool = True,
    cap: int = DEFAULT_CAP,
    crosscheck_cap: int = CROSSCHECK_CAP,
) -> AlgorithmReport:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rep = AlgorithmReport(n_max)
    dec = decompose(A, n_max, with_hc=with_hc, use_formula=True, cap=cap)
    for row in dec.rows:
        Z = minimal_cycle_algebra(A, row.orbit)
        rep.orbits.append(
            {
                "orbit": row.word,
                "length": row.orbit.length,
                "relations": [Z.algebra.quiver.word_str(r) for r in Z.algebra.relations],
                "dimension": Z.algebra.dimension,
                "truncated": Z.truncation_index(),
                "method": row.method,
                "hh": {str(n): row.hh[n] for n in range(1, n_max + 1)},
                **({"hc": {str(n): row.hc[n] for n in range(1, n_max + 1)}} if with_hc else {}),
            }
        )

    hh0 = hh(A, 0, cap).dims[0]
    totals = dec.totals("hh")
    rep.hh = [hh0] + totals[1:]
    rep.hh_methods = ["direct"]
    for n in range(1, n_max + 1):
        used = {r.method for r in dec.rows if r.hh[n]}
        rep.hh_methods.append("formula" if used == {"formula"} else "decomposition")

    if with_hc:
        hc_tot = dec.totals("hc")
        for n in range(2, n_max + 1, 2):
            hc_tot[n] += A.num_vertices
        rep.hc = [hh0] + hc_tot[1:]
        rep.hc_methods = ["direct"] + ["decomposition"] * n_max

    if crosscheck:
        try:
            rep.direct_hh = hh(A, n_max, crosscheck_cap).dims
            if with_hc:
                rep.direct_hc = hc(A, n_max, crosscheck_cap).dims
        except SizeCapError:
            rep.direct_hh = rep.direct_hc = None
        if rep.direct_hh is not None and rep.direct_hh != rep.hh:
            raise CrossCheckError("hh: decomposition and direct complex disagree", rep.hh, rep.direct_hh)
        if rep.direct_hc is not None and rep.direct_hc != rep.hc:
            raise CrossCheckError("hc: decomposition and direct complex disagree", rep.hc, rep.direct_hc)
    return rep
