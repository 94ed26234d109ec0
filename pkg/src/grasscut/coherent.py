"""Coherent-state overlaps between planes and the polar-divisor predicate.

The overlap of two planes is the Gram determinant of their frames,
det G with G_ij = <y_i, x_j>: linear in the rows of Y, conjugate-linear in
the rows of X.  By the Cauchy–Binet identity this equals the Hermitian
inner product of the two Pluecker coordinate vectors, which is what makes
the polar divisor {overlap = 0} a hyperplane section of the embedded
Grassmannian.  Normalizing by the frame norms removes all frame dependence
up to phase.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels, pluecker
from .errors import Malformed
from .subspaces import Plane, PontrjaginCoords, pontrjagin_to_plane


@dataclass(frozen=True)
class Overlap:
    """Raw overlap value plus the two frame norms that normalize it."""

    value: complex
    norm_left: float
    norm_right: float

    @property
    def normalized(self) -> complex:
        return self.value / (self.norm_left * self.norm_right)


def overlap(x: Plane, y: Plane) -> Overlap:
    """Gram-determinant overlap of the stored frames of ``x`` and ``y``.

    value = det(Y X^H) where X, Y are the frames; the norm fields are
    sqrt(det) of the self-Gram matrices and absorb the frame scales.
    """
    if x.ambient != y.ambient or x.n != y.n:
        raise Malformed("overlap needs two planes of equal dimension in the same space")
    return Overlap(
        value=kernels.gram_det(y.basis, x.basis),
        norm_left=kernels.frame_norm(x.basis),
        norm_right=kernels.frame_norm(y.basis),
    )


def normalized_overlap(x: Plane, y: Plane) -> complex:
    """Frame-independent overlap; modulus in [0, 1], Hermitian in (x, y)."""
    return overlap(x, y).normalized


def overlap_pontrjagin(z, zp) -> complex:
    """Closed-form overlap det(1_n + Z Zp^H) between two chart points.

    Equals the Gram determinant of the literal chart frames:
    overlap(plane(sigma, Zp), plane(sigma, Z)).value for any common chart
    sigma.  (Swapping the arguments conjugates the value.)
    """
    z = np.asarray(z, dtype=np.complex128)
    zp = np.asarray(zp, dtype=np.complex128)
    if z.shape != zp.shape or z.ndim != 2:
        raise Malformed("chart matrices must share an n-by-m shape")
    n = z.shape[0]
    return kernels.det(np.eye(n) + z @ zp.conj().T)


def polar_divisor_member(x: Plane, base: Plane, tol: float = 1e-8) -> bool:
    """Whether ``x`` lies on the polar divisor of ``base``.

    The polar divisor is the zero set of the overlap with the base plane;
    membership is |normalized_overlap(base, x)| < tol.
    """
    return bool(abs(normalized_overlap(base, x)) < tol)


def cauchy_check(x: Plane, y: Plane) -> float:
    """Deviation between the two routes to the normalized overlap magnitude.

    Route one: Gram determinant of the frames, normalized.  Route two:
    Hermitian inner product of the Pluecker coordinate vectors, normalized.
    The two agree identically (Cauchy–Binet); the return value is the
    absolute difference actually observed, a pure roundoff residual.
    """
    gram_route = abs(normalized_overlap(x, y))
    px, py = pluecker.embed(x), pluecker.embed(y)
    embed_route = abs(pluecker.inner(px, py)) / (
        np.linalg.norm(px.coords) * np.linalg.norm(py.coords)
    )
    return float(abs(gram_route - embed_route))


def overlap_pontrjagin_oracle(sigma, z, zp) -> complex:
    """Gram-determinant route to the chart overlap, for cross-checking.

    Builds the literal chart frames for ``z`` and ``zp`` and evaluates the
    frame Gram determinant directly — an independent code path from the
    det(1 + Z Zp^H) closed form.
    """
    a = pontrjagin_to_plane(PontrjaginCoords(sigma=tuple(sigma), z=np.asarray(z)))
    b = pontrjagin_to_plane(PontrjaginCoords(sigma=tuple(sigma), z=np.asarray(zp)))
    return overlap(b, a).value
