"""hominf: finite-window homology at infinity and boundary nerve towers.

The library computes, at desk scale and over prime fields:

* Cayley-graph balls of finitely presented groups (free, abelian, Dehn),
* windowed Rips complexes with radial subcomplexes and complement
  towers approximating homology at infinity,
* the constructive filling-and-stabilization procedure for windowed
  locally finite cycles,
* nerves of epsilon-ball covers of finite metric samples, refinement
  chain maps, and Cech-style tower reports,
* epsilon-subdivision certificates and the disk-triangulation filling
  of nerve loops.

Everything is deterministic: exact rational / finite-field arithmetic,
canonical simplex indexing, and pivoting rules with no randomness.
"""

__version__ = "0.1.0"

from .complexes import (
    BoundaryMatrix,
    Chain,
    FieldSpec,
    Infeasible,
    SimplicialComplex,
    betti,
    boundary_matrix,
    boundary_of_simplex,
    chain_boundary,
    rank_gf,
    solve_boundary,
)
from .groups import (
    CayleyBall,
    GroupElement,
    GroupPresentation,
    Strategy,
    canonicalize,
    enumerate_ball,
    pair_distance,
    parse_presentation,
)

__all__ = [
    "__version__",
    "BoundaryMatrix",
    "Chain",
    "FieldSpec",
    "Infeasible",
    "SimplicialComplex",
    "betti",
    "boundary_matrix",
    "boundary_of_simplex",
    "chain_boundary",
    "rank_gf",
    "solve_boundary",
    "CayleyBall",
    "GroupElement",
    "GroupPresentation",
    "Strategy",
    "canonicalize",
    "enumerate_ball",
    "pair_distance",
    "parse_presentation",
]
