"""Pluecker embedding of G_n(C^N) into projective space.

A plane maps to the vector of all n-by-n minors of its frame, indexed by
the n-element column subsets in lexicographic order.  Changing the frame
rescales the whole vector by one nonzero factor, so the embedded point is
well defined projectively; distances and membership predicates below are
all scale-invariant.
"""

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import Malformed, WrongShape
from .subspaces import Plane


@dataclass(frozen=True)
class PlueckerPoint:
    """Projective coordinates of an embedded n-plane in C^N.

    ``coords`` has length C(N, n); entry k is the minor on the k-th column
    subset in lexicographic order.  Defined up to one overall complex scale.
    """

    n: int
    ambient: int
    coords: np.ndarray


@dataclass(frozen=True)
class Hyperplane:
    """The coordinate hyperplane {p_K = 0} for the ``index``-th subset K (1-based)."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise Malformed("hyperplane index is 1-based")


def subset_index(n: int, big_n: int, subset) -> int:
    """1-based position of an n-element column subset in lexicographic order."""
    target = tuple(sorted(int(c) for c in subset))
    for k, combo in enumerate(combinations(range(1, big_n + 1), n)):
        if combo == target:
            return k + 1
    raise Malformed(f"{subset} is not an {n}-subset of 1..{big_n}")


def pluecker_point(n: int, ambient: int, coords) -> PlueckerPoint:
    """Validate and wrap a raw coordinate vector."""
    arr = np.array(coords, dtype=np.complex128, copy=True).reshape(-1)
    if arr.size != math.comb(ambient, n):
        raise Malformed(f"expected C({ambient},{n}) coordinates, got {arr.size}")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise Malformed("coordinates must be finite")
    if np.max(np.abs(arr)) == 0.0:
        raise Malformed("the zero vector is not a projective point")
    arr.setflags(write=False)
    return PlueckerPoint(n=n, ambient=ambient, coords=arr)


def embed(x: Plane) -> PlueckerPoint:
    """Pluecker coordinates of ``x``, computed from its stored frame."""
    return pluecker_point(x.n, x.ambient, kernels.minor_vector(x.basis))


def inner(p: PlueckerPoint, q: PlueckerPoint) -> complex:
    """Hermitian inner product of coordinate vectors, conjugate-linear in ``p``."""
    if (p.n, p.ambient) != (q.n, q.ambient):
        raise Malformed("points live on different Grassmannians")
    return complex(np.vdot(p.coords, q.coords))


def fs_distance(p: PlueckerPoint, q: PlueckerPoint) -> float:
    """Fubini–Study (great-circle) distance between two projective points.

    arccos of |<p, q>| / (|p| |q|); ranges over [0, pi/2], independent of
    the scale and phase of either coordinate vector.  Evaluated as
    atan2(residual, |cos|) — the same angle, but accurate at both ends of
    the range, where a bare arccos loses half the working precision.
    """
    u = p.coords / np.linalg.norm(p.coords)
    v = q.coords / np.linalg.norm(q.coords)
    if (p.n, p.ambient) != (q.n, q.ambient):
        raise Malformed("points live on different Grassmannians")
    c = np.vdot(u, v)
    residual = np.linalg.norm(v - u * c)
    return float(np.arctan2(residual, abs(c)))


def projective_equal(p: PlueckerPoint, q: PlueckerPoint, tol: float = 1e-9) -> bool:
    """Whether two coordinate vectors name the same projective point."""
    return fs_distance(p, q) < tol


def quadric_residual_g24(p: PlueckerPoint) -> float:
    """|p12 p34 − p13 p24 + p14 p23| after scaling to unit max modulus.

    Zero (to roundoff) exactly on the image of G_2(C^4); the max-modulus
    normalization keeps the residual scale-free without inflating points
    whose leading coordinates vanish.
    """
    if (p.n, p.ambient) != (2, 4):
        raise WrongShape("the quadric relation is specific to G_2(C^4)")
    c = p.coords / np.max(np.abs(p.coords))
    return float(abs(c[0] * c[5] - c[1] * c[4] + c[2] * c[3]))


def hyperplane_membership(p: PlueckerPoint, h: Hyperplane, tol: float = 1e-8) -> bool:
    """Whether ``p`` lies on the coordinate hyperplane ``h``.

    Tests |coords[h.index]| against ``tol`` after unit-norm scaling.
    """
    if h.index > p.coords.size:
        raise Malformed(
            f"hyperplane index {h.index} out of range for C({p.ambient},{p.n}) coordinates"
        )
    return bool(abs(p.coords[h.index - 1]) / np.linalg.norm(p.coords) < tol)
