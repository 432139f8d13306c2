"""Exact Hochschild (co)homology and cyclic homology of quiver algebras."""

from .algebra_file import canonical_hash, format_algebra, parse_algebra, read_algebra
from .algorithm import AlgorithmReport, run_algorithm
from .aq import build_aq, crosscheck_aq, hch_aq, hh_aq, tau_matrix
from .decomposition import (
    contributing_orbits,
    hc_decomposed,
    hh_decomposed,
    minimal_cycle_algebra,
)
from .errors import (
    AlgebraFormatError,
    ComplexError,
    CrossCheckError,
    HochError,
    InfiniteDimensionalError,
    SizeCapError,
    StructureError,
)
from .linalg import BoundarySequence, Field, SparseMatrix, homology_dims, rank
from .mixed import boundary_b_matrix, chain_basis, connes_B_matrix, hc, hh
from .quiver import (
    CycleWord,
    MonomialAlgebra,
    Path,
    Quiver,
    classify_cycle,
    cycle_orbits,
    finite_dimensional,
    nonzero_paths,
    proper_cycle_orbits,
    shortest_cycle,
)
from .resolution import gldim_probe, projdim_probe, projective_cover, syzygy
from .scalgebra import SCAlgebra, sc_disjoint, sc_from_monomial, sc_hch, sc_hh, sc_tensor
from .skoldberg import (
    TruncatedPresentation,
    classify_truncated,
    hh_p_basic_cycle,
    hh_pq_truncated,
    hh_total_truncated,
    infinite_witness,
)

__version__ = "0.1.0"
