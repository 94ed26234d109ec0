"""Geodesics from the base plane, principal angles, and the cut locus.

G_n(C^N) carries its symmetric-space metric; geodesics from the base plane
O = span(e_1..e_n) are driven by an n-by-m tangent matrix B whose singular
values become the principal angles swept out at t = 1.  The first time a
geodesic stops minimizing is (pi/2) / sigma_max, and the set of points past
which no geodesic minimizes — the cut locus of O — is classified here by
three logically independent criteria so they can be played against each
other: vanishing overlap, Fubini–Study distance pi/2 in the embedding, and
nontrivial intersection with the orthogonal complement of O.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import coherent, pluecker
from .errors import AtCutLocus, Malformed
from .subspaces import (
    DEFAULT_TOLERANCES,
    Plane,
    TolerancePolicy,
    intersection_dim,
    ortho_complement,
    plane_new,
)

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class Tangent:
    """Tangent vector at the base plane: an n-by-m complex matrix."""

    b: np.ndarray

    @property
    def n(self):
        return self.b.shape[0]

    @property
    def m(self):
        return self.b.shape[1]


@dataclass(frozen=True)
class CutVerdict:
    """Three-way cut-locus classification of a plane relative to a base.

    The booleans answer the same question through unrelated computations;
    ``max_principal_angle`` locates the point relative to the critical
    angle pi/2 so that ties near the threshold can be recognized.
    """

    by_overlap: bool
    by_distance: bool
    by_rank: bool
    max_principal_angle: float


def tangent(b) -> Tangent:
    """Validate and wrap a tangent matrix (finite entries; zero allowed)."""
    arr = np.array(b, dtype=np.complex128, copy=True)
    if arr.ndim != 2:
        raise Malformed("a tangent is an n-by-m matrix")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise Malformed("tangent entries must be finite")
    arr.setflags(write=False)
    return Tangent(b=arr)


def _require_base(o: Plane):
    n, big_n = o.basis.shape
    expected = np.zeros((n, big_n))
    expected[:, :n] = np.eye(n)
    if np.max(np.abs(o.basis - expected)) > 1e-12:
        raise Malformed("geodesic formulas are anchored at the standard base plane")
    return n, big_n - n


def principal_angles(x: Plane, y: Plane) -> np.ndarray:
    """Principal angles between two n-planes, nondecreasing, in [0, pi/2].

    arccos of the singular values of the orthonormal-frame cross-Gram
    matrix, clipped into [0, 1] before the arccos.
    """
    if x.ambient != y.ambient or x.n != y.n:
        raise Malformed("principal angles need equal-dimensional planes")
    s = np.linalg.svd(x.onb.conj() @ y.onb.T, compute_uv=False)
    return np.arccos(np.clip(s, 0.0, 1.0))


def exp_geodesic(o: Plane, t_vec: Tangent, t: float) -> Plane:
    """The geodesic from the base plane ``o`` with velocity ``t_vec`` at time ``t``.

    With the thin decomposition B = U diag(s) V^H, the plane at time t is
    spanned by the rows of

        [ 1 + U (cos(s t) − 1) U^H  |  U sin(s t) V^H ]

    (O-block, complement-block); the frame is orthonormal by construction.
    """
    n, m = _require_base(o)
    if t_vec.b.shape != (n, m):
        raise Malformed(f"tangent must be {n}-by-{m}")
    u, s, vh = np.linalg.svd(t_vec.b, full_matrices=False)
    c = np.cos(s * t)
    si = np.sin(s * t)
    left = np.eye(n) + (u * (c - 1.0)) @ u.conj().T
    right = (u * si) @ vh
    return plane_new(np.hstack([left, right]))


def log_geodesic(o: Plane, x: Plane, tol: float = 1e-8) -> Tangent:
    """The tangent whose time-1 geodesic from ``o`` reaches ``x``.

    Defined away from the cut locus; raises AtCutLocus when the largest
    principal angle is within ``tol`` of pi/2.  The singular values of the
    result are exactly the principal angles between ``o`` and ``x``.
    """
    n, m = _require_base(o)
    if x.ambient != o.ambient or x.n != n:
        raise Malformed("log target must live on the same Grassmannian")
    angles = principal_angles(o, x)
    if angles[-1] >= HALF_PI - tol:
        raise AtCutLocus("plane lies at or beyond the cut locus of the base")
    qa = x.onb[:, :n]
    qb = x.onb[:, n:]
    u, s, vh = np.linalg.svd(np.linalg.solve(qa, qb), full_matrices=False)
    return tangent((u * np.arctan(s)) @ vh)


def cut_time(t_vec: Tangent) -> float:
    """First time the geodesic with this velocity stops minimizing.

    (pi/2) / sigma_max; infinite for the zero tangent.
    """
    if t_vec.b.size == 0:
        return math.inf
    top = float(np.linalg.norm(t_vec.b, 2))
    return math.inf if top == 0.0 else HALF_PI / top


def cut_locus_member(
    x: Plane,
    base: Plane,
    tol: float = 1e-8,
    rank_policy: TolerancePolicy = DEFAULT_TOLERANCES,
) -> CutVerdict:
    """Classify ``x`` against the cut locus of ``base`` by three routes.

    by_overlap: |normalized overlap| < tol (polar-divisor membership).
    by_distance: Fubini–Study distance of the embedded points is within
    ``tol`` of pi/2.  by_rank: X meets the orthogonal complement of the
    base nontrivially.  The three agree away from a band of width ~10 tol
    around the critical angle; inside it they may split on roundoff.
    """
    by_overlap = coherent.polar_divisor_member(x, base, tol)
    dist = pluecker.fs_distance(pluecker.embed(base), pluecker.embed(x))
    by_distance = bool(abs(dist - HALF_PI) < tol)
    by_rank = intersection_dim(x, ortho_complement(base), rank_policy) >= 1
    angles = principal_angles(x, base)
    return CutVerdict(
        by_overlap=by_overlap,
        by_distance=by_distance,
        by_rank=by_rank,
        max_principal_angle=float(angles[-1]),
    )
