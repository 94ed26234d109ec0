"""Numerical geometry of complex Grassmannians.

The central identity this package verifies: the locus where the overlap
with a fixed base plane vanishes (a hyperplane section of the embedded
Grassmannian) coincides with the cut locus of that plane in the invariant
metric, and stratifies by how deeply a plane meets the base's orthogonal
complement.  Modules: ``subspaces`` (frames and charts), ``pluecker``
(projective embedding), ``coherent`` (overlaps and the polar divisor),
``geodesics`` (exp/log/cut), ``schubert`` (varieties and strata),
``atlas_g24`` (the six-chart G_2(C^4) example), ``harness``/``cli``
(seeded verification campaigns).
"""

from ._version import __version__
from .errors import (
    AtCutLocus,
    ConfigError,
    GrasscutError,
    Malformed,
    NotInChart,
    OutsideOverlap,
    RankDeficient,
    WrongShape,
)
from .subspaces import (
    DEFAULT_TOLERANCES,
    Plane,
    PontrjaginCoords,
    TolerancePolicy,
    base_point,
    intersection_dim,
    ortho_complement,
    plane_equal,
    plane_new,
    plane_to_pontrjagin,
    pontrjagin_to_plane,
    random_plane,
)
from .pluecker import (
    Hyperplane,
    PlueckerPoint,
    embed,
    fs_distance,
    hyperplane_membership,
    projective_equal,
    quadric_residual_g24,
)
from .coherent import (
    Overlap,
    cauchy_check,
    normalized_overlap,
    overlap,
    overlap_pontrjagin,
    polar_divisor_member,
)
from .geodesics import (
    CutVerdict,
    Tangent,
    cut_locus_member,
    cut_time,
    exp_geodesic,
    log_geodesic,
    principal_angles,
    tangent,
)
from .schubert import (
    Flag,
    SchubertSymbol,
    codim,
    cutlocus_stratification,
    jump_indices,
    standard_flag_adapted,
    stratum_member,
    symbol_new,
    symbol_vpl,
    variety_member,
)

__all__ = [name for name in dir() if not name.startswith("_")]
