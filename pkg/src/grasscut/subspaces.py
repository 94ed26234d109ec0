"""Planes in C^N: frames, complements, intersections, affine coordinates.

A point of the Grassmannian G_n(C^N) is represented by a ``Plane``: an
n-by-N complex matrix whose rows span the subspace.  The frame handed to
``plane_new`` is kept verbatim (several overlap formulas are stated for a
specific frame, e.g. an affine chart layout); an orthonormal row basis is
computed once at construction and used for every metric or rank question,
so no downstream result depends on the conditioning of the input frame.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import Malformed, NotInChart, RankDeficient


@dataclass(frozen=True)
class TolerancePolicy:
    """Numerical thresholds used throughout the package.

    rank_tol is relative: a singular value counts as nonzero when it exceeds
    ``rank_tol * s_max``.  zero_tol is an absolute threshold for scalar
    comparisons (chart-domain determinants, orthogonality residuals).
    """

    rank_tol: float = 1e-8
    zero_tol: float = 1e-12

    def __post_init__(self):
        if not (0.0 < self.rank_tol < 1.0):
            raise Malformed("rank_tol must lie in (0, 1)")
        if not (self.zero_tol > 0.0):
            raise Malformed("zero_tol must be positive")


DEFAULT_TOLERANCES = TolerancePolicy()


@dataclass(frozen=True, eq=False)
class Plane:
    """An n-dimensional subspace of C^N, spanned by the rows of ``basis``.

    ``basis`` is the caller's frame, unchanged; ``onb`` is an orthonormal
    frame for the same row span.  Use :func:`plane_equal` for comparison —
    two planes are the same point of the Grassmannian exactly when their
    row spans coincide, regardless of frames.
    """

    basis: np.ndarray
    onb: np.ndarray = field(repr=False)

    @property
    def n(self):
        return self.basis.shape[0]

    @property
    def ambient(self):
        return self.basis.shape[1]


@dataclass(frozen=True)
class PontrjaginCoords:
    """Affine chart coordinates for G_n(C^N).

    ``sigma`` is a strictly increasing tuple of n column indices (1-based);
    the chart frame puts an identity block in those columns and the n-by-m
    matrix ``z`` in the remaining columns, taken in increasing order.
    """

    sigma: tuple
    z: np.ndarray

    @property
    def n(self):
        return self.z.shape[0]

    @property
    def m(self):
        return self.z.shape[1]


def _as_frame(matrix):
    arr = np.array(matrix, dtype=np.complex128, copy=True, order="C")
    if arr.ndim != 2:
        raise Malformed("a frame must be a 2-d array")
    return arr


def plane_new(matrix, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> Plane:
    """Validate a frame and build a Plane from it.

    The rows of ``matrix`` (n-by-N, n <= N) must be numerically independent:
    the smallest singular value has to exceed ``tol.rank_tol`` times the
    largest.  Raises RankDeficient otherwise.
    """
    arr = _as_frame(matrix)
    n, big_n = arr.shape
    if n < 1:
        raise Malformed("a plane needs at least one row")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise Malformed("frame entries must be finite")
    u, s, vh = np.linalg.svd(arr, full_matrices=False)
    if n > big_n or s[0] == 0.0 or s[-1] <= tol.rank_tol * s[0]:
        raise RankDeficient(
            f"frame rows are not independent at relative tolerance {tol.rank_tol:g}"
        )
    arr.setflags(write=False)
    onb = np.ascontiguousarray(vh[:n])
    onb.setflags(write=False)
    return Plane(basis=arr, onb=onb)


def base_point(n: int, big_n: int) -> Plane:
    """The plane spanned by the first n standard basis vectors of C^N."""
    if not (1 <= n < big_n):
        raise Malformed("need 1 <= n < N")
    frame = np.zeros((n, big_n), dtype=np.complex128)
    frame[:, :n] = np.eye(n)
    return plane_new(frame)


def ortho_complement(x: Plane, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> Plane:
    """The (N-n)-dimensional orthogonal complement of ``x``.

    Every row of the result is Hermitian-orthogonal to every row of ``x``.
    """
    n, big_n = x.onb.shape
    if n >= big_n:
        raise Malformed("the complement of a full plane is empty")
    _, _, vh = np.linalg.svd(x.onb, full_matrices=True)
    return plane_new(np.ascontiguousarray(vh[n:]), tol)


def _numrank(a, rank_tol):
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rank_tol * s[0]))


def intersection_dim(x: Plane, w: Plane, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> int:
    """dim(X ∩ W), computed as dim X + dim W − rank of the stacked bases."""
    if x.ambient != w.ambient:
        raise Malformed("planes live in different ambient spaces")
    stacked = np.vstack([x.onb, w.onb])
    return x.n + w.n - _numrank(stacked, tol.rank_tol)


def pontrjagin_to_plane(pc: PontrjaginCoords) -> Plane:
    """Materialize chart coordinates as the literal chart frame.

    Row i is e_{sigma(i)} plus the i-th row of ``z`` spread over the
    complementary columns in increasing order.
    """
    n, m = pc.z.shape
    big_n = n + m
    sigma = tuple(int(i) for i in pc.sigma)
    if len(sigma) != n or sorted(set(sigma)) != list(sigma):
        raise Malformed("sigma must be strictly increasing")
    if sigma[0] < 1 or sigma[-1] > big_n:
        raise Malformed("sigma indices must lie in 1..N")
    others = [j for j in range(big_n) if (j + 1) not in sigma]
    frame = np.zeros((n, big_n), dtype=np.complex128)
    for i, col in enumerate(sigma):
        frame[i, col - 1] = 1.0
    frame[:, others] = np.asarray(pc.z, dtype=np.complex128)
    return plane_new(frame)


def plane_to_pontrjagin(
    x: Plane, sigma, tol: TolerancePolicy = DEFAULT_TOLERANCES
) -> PontrjaginCoords:
    """Chart coordinates of ``x`` in the chart labelled by ``sigma``.

    Raises NotInChart when the sigma-column block of the frame is
    numerically singular, i.e. the plane misses the chart.
    """
    sigma = tuple(int(i) for i in sigma)
    n, big_n = x.onb.shape
    if len(sigma) != n:
        raise Malformed("sigma must pick one column per row")
    if sorted(set(sigma)) != list(sigma) or sigma[0] < 1 or sigma[-1] > big_n:
        raise Malformed("sigma must be strictly increasing within 1..N")
    cols = [c - 1 for c in sigma]
    others = [j for j in range(big_n) if j not in set(cols)]
    block = x.onb[:, cols]
    s = np.linalg.svd(block, compute_uv=False)
    if s[0] == 0.0 or s[-1] <= tol.rank_tol * s[0]:
        raise NotInChart(f"plane has no representative in chart sigma={sigma}")
    z = np.linalg.solve(block, x.onb[:, others])
    return PontrjaginCoords(sigma=sigma, z=z)


def plane_equal(x: Plane, y: Plane, tol: float = 1e-8) -> bool:
    """Whether two planes are the same Grassmannian point.

    Compares the orthogonal projectors onto the two row spans entrywise,
    which is invariant under any change of frame.
    """
    if x.ambient != y.ambient or x.n != y.n:
        return False
    px = x.onb.T @ x.onb.conj()
    py = y.onb.T @ y.onb.conj()
    return bool(np.max(np.abs(px - py)) < tol)


def complex_gaussian(rng, shape):
    """Standard complex normal samples: (N(0,1) + i N(0,1)) / sqrt(2)."""
    re = rng.standard_normal(shape)
    im = rng.standard_normal(shape)
    return (re + 1j * im) / np.sqrt(2.0)


def random_plane(n: int, big_n: int, seed) -> Plane:
    """A uniformly distributed n-plane in C^N, deterministic per seed.

    Entries of a Gaussian frame are drawn row-major in one call, then the
    frame is orthonormalized; the resulting distribution is the unitarily
    invariant one.  ``seed`` may be an int, SeedSequence, or Generator.
    """
    if not (1 <= n < big_n):
        raise Malformed("need 1 <= n < N")
    rng = np.random.default_rng(seed)
    g = complex_gaussian(rng, (n, big_n))
    _, _, vh = np.linalg.svd(g, full_matrices=False)
    return plane_new(np.ascontiguousarray(vh[:n]))
