"""The six-chart affine atlas of G_2(C^4) and the local polar divisor.

Each chart pins an identity 2-by-2 block into one pair of columns and
spreads four free complex coordinates over the other pair:

    chart   identity columns   frame rows
    V1      1, 2               (1, 0, a1, a2), (0, 1, a3, a4)
    V2      1, 3               (1, b1, 0, b2), (0, b3, 1, b4)
    V3      1, 4               (1, c1, c2, 0), (0, c3, c4, 1)
    V4      2, 3               (d1, 1, 0, d2), (d3, 0, 1, d4)
    V5      2, 4               (e1, 1, e2, 0), (e3, 0, e4, 1)
    V6      3, 4               (f1, f2, 1, 0), (f3, f4, 0, 1)

The Pluecker image of a chart frame is a sextuple of explicit polynomials
of degree <= 2 in the chart coordinates, and the polar divisor of the
standard base plane is cut out locally by its first component: absent from
V1, a single coordinate in V2..V5, and the quadric f1 f4 − f2 f3 in V6 —
whose zero set is a cone with vertex at the plane spanned by e3, e4.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import coherent, pluecker, subspaces
from .errors import Malformed, NotInChart, OutsideOverlap, WrongShape
from .subspaces import (
    DEFAULT_TOLERANCES,
    Plane,
    PontrjaginCoords,
    TolerancePolicy,
    complex_gaussian,
)


class ChartId(Enum):
    V1 = (1, 2)
    V2 = (1, 3)
    V3 = (1, 4)
    V4 = (2, 3)
    V5 = (2, 4)
    V6 = (3, 4)

    @property
    def columns(self):
        """The 1-based pair of columns holding the identity block."""
        return self.value


@dataclass(frozen=True)
class ChartCoords:
    """A point of G_2(C^4) written in one affine chart: four complex numbers."""

    chart: ChartId
    c: np.ndarray


@dataclass(frozen=True)
class Poly:
    """A tiny polynomial in the four chart coordinates: sum of monomials.

    ``terms`` is a tuple of (coefficient, exponent-4-tuple) pairs.  Enough
    structure to evaluate the local divisor equations and their gradients
    exactly, with no symbolic machinery.
    """

    terms: tuple

    def evaluate(self, c) -> complex:
        c = np.asarray(c, dtype=np.complex128)
        total = 0.0 + 0.0j
        for coeff, powers in self.terms:
            mono = coeff
            for var, p in zip(c, powers):
                for _ in range(p):
                    mono *= var
            total += mono
        return complex(total)

    def gradient(self, c) -> np.ndarray:
        c = np.asarray(c, dtype=np.complex128)
        out = np.zeros(4, dtype=np.complex128)
        for coeff, powers in self.terms:
            for k in range(4):
                if powers[k] == 0:
                    continue
                mono = coeff * powers[k]
                for var, p in zip(c, (powers[:k] + (powers[k] - 1,) + powers[k + 1 :])):
                    for _ in range(p):
                        mono *= var
                out[k] += mono
        return out


def chart_coords(chart: ChartId, c) -> ChartCoords:
    """Validate and wrap four finite chart coordinates."""
    arr = np.array(c, dtype=np.complex128, copy=True).reshape(-1)
    if arr.size != 4:
        raise Malformed("a chart point has exactly four coordinates")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise Malformed("chart coordinates must be finite")
    arr.setflags(write=False)
    return ChartCoords(chart=chart, c=arr)


def chart_frame(cc: ChartCoords) -> Plane:
    """The literal chart frame of ``cc`` as a Plane.

    Row i carries the identity in the chart's column pair and coordinates
    (c1, c2) / (c3, c4) in the free columns, in increasing column order.
    """
    z = np.array([[cc.c[0], cc.c[1]], [cc.c[2], cc.c[3]]])
    return subspaces.pontrjagin_to_plane(
        PontrjaginCoords(sigma=cc.chart.columns, z=z)
    )


def to_chart(x: Plane, chart: ChartId, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> ChartCoords:
    """Coordinates of ``x`` in ``chart``; NotInChart when the block is singular."""
    if (x.n, x.ambient) != (2, 4):
        raise WrongShape("the atlas is specific to G_2(C^4)")
    pc = subspaces.plane_to_pontrjagin(x, chart.columns, tol)
    return chart_coords(chart, pc.z.reshape(-1))


def overlap_condition(cc: ChartCoords, target: ChartId) -> complex:
    """The chart-overlap determinant whose nonvanishing admits ``target``.

    This is the 2-by-2 minor of the source frame on the target's identity
    columns; it reduces to a single coordinate or a 2-by-2 determinant of
    the source coordinates (e.g. a3 for V1 -> V2, a1 a4 − a2 a3 for
    V1 -> V6, identically 1 for the self-transition).
    """
    frame = chart_frame(cc).basis
    cols = [c - 1 for c in target.columns]
    block = frame[:, cols]
    return complex(block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0])


def transition(
    cc: ChartCoords, target: ChartId, tol: TolerancePolicy = DEFAULT_TOLERANCES
) -> ChartCoords:
    """Re-express a chart point in another chart of the atlas.

    Raises OutsideOverlap when the overlap condition is below ``zero_tol``
    in modulus.  The self-transition is the identity.
    """
    if abs(overlap_condition(cc, target)) <= tol.zero_tol:
        raise OutsideOverlap(
            f"{cc.chart.name} -> {target.name} undefined where the overlap minor vanishes"
        )
    if target is cc.chart:
        return cc
    try:
        return to_chart(chart_frame(cc), target, tol)
    except NotInChart as exc:  # the tol check above makes this unreachable
        raise OutsideOverlap(str(exc)) from exc


# Pluecker sextuples of the chart frames, in lexicographic minor order
# (12, 13, 14, 23, 24, 34).  V1 and V6 are the reference forms; V2..V5
# follow by expanding the same minors of their frame rows.
_PLUECKER_FORMS = {
    ChartId.V1: lambda a: (1.0, a[2], a[3], -a[0], -a[1], a[0] * a[3] - a[1] * a[2]),
    ChartId.V2: lambda b: (b[2], 1.0, b[3], b[0], b[0] * b[3] - b[1] * b[2], -b[1]),
    ChartId.V3: lambda c: (c[2], c[3], 1.0, c[0] * c[3] - c[1] * c[2], c[0], c[1]),
    ChartId.V4: lambda d: (-d[2], d[0], d[0] * d[3] - d[1] * d[2], 1.0, d[3], -d[1]),
    ChartId.V5: lambda e: (-e[2], e[0] * e[3] - e[1] * e[2], e[0], e[3], 1.0, e[1]),
    ChartId.V6: lambda f: (f[0] * f[3] - f[1] * f[2], -f[2], f[0], -f[3], f[1], 1.0),
}

# First Pluecker component (the divisor equation p12 = 0) per chart, as an
# explicit polynomial.  V1 is omitted: there p12 is identically 1, so the
# divisor misses the chart entirely.
_DIVISOR_FORMS = {
    ChartId.V2: Poly(terms=((1.0, (0, 0, 1, 0)),)),
    ChartId.V3: Poly(terms=((1.0, (0, 0, 1, 0)),)),
    ChartId.V4: Poly(terms=((-1.0, (0, 0, 1, 0)),)),
    ChartId.V5: Poly(terms=((-1.0, (0, 0, 1, 0)),)),
    ChartId.V6: Poly(terms=((1.0, (1, 0, 0, 1)), (-1.0, (0, 1, 1, 0)))),
}

VERTEX_COORDS = (0.0, 0.0, 0.0, 0.0, 0.0, 1.0)


def pluecker_from_chart(cc: ChartCoords) -> pluecker.PlueckerPoint:
    """Closed-form Pluecker sextuple of a chart point (no minors computed)."""
    return pluecker.pluecker_point(2, 4, _PLUECKER_FORMS[cc.chart](cc.c))


def polar_divisor_local(chart: ChartId) -> list:
    """Local equations of the polar divisor of the base plane in ``chart``.

    Empty for V1 (the divisor misses it); one polynomial of degree <= 2
    elsewhere.  A chart point is on the divisor exactly when every listed
    polynomial is small at its coordinates.
    """
    if chart is ChartId.V1:
        return []
    return [_DIVISOR_FORMS[chart]]


@dataclass(frozen=True)
class ConeAnalysis:
    """Position of an embedded point relative to the divisor's cone structure."""

    on_hyperplane: bool
    on_quadric: bool
    is_vertex: bool
    hyperplane_residual: float
    quadric_residual: float


def cone_analysis(p: pluecker.PlueckerPoint, tol: float = 1e-8) -> ConeAnalysis:
    """Classify a point of P^5 against the cone carrying the polar divisor.

    The divisor is the cone {p12 = 0, p14 p23 − p13 p24 = 0} over a smooth
    quadric surface, with vertex at the image of span(e3, e4).  Residuals
    are computed after scaling the coordinates to unit max modulus.
    """
    if (p.n, p.ambient) != (2, 4):
        raise WrongShape("cone analysis is specific to G_2(C^4)")
    c = p.coords / np.max(np.abs(p.coords))
    hyp = float(abs(c[0]))
    quad = float(abs(c[2] * c[3] - c[1] * c[4]))
    vertex = pluecker.pluecker_point(2, 4, VERTEX_COORDS)
    return ConeAnalysis(
        on_hyperplane=hyp < tol,
        on_quadric=quad < tol,
        is_vertex=pluecker.projective_equal(p, vertex, tol),
        hyperplane_residual=hyp,
        quadric_residual=quad,
    )


@dataclass(frozen=True)
class BertiniWitness:
    """Numerical evidence that the divisor's singular point is the vertex only.

    The unperturbed local equation f1 f4 − f2 f3 has a vanishing gradient
    at the vertex; a generically perturbed hyperplane section of the
    Grassmannian has none, neither among sampled solutions nor at the
    unique critical point of its local equation.
    """

    charts_containing_vertex: tuple
    vertex_on_divisor: bool
    vertex_gradient_norm: float
    probe_gradient: tuple
    sample_count: int
    vanishing_count: int
    min_gradient_norm: float
    critical_value: float
    seed: int


def bertini_witness(seed: int = 0, samples: int = 10000) -> BertiniWitness:
    """Contrast the singular divisor section with a generic perturbation.

    The vertex span(e3, e4) lies on the polar divisor, appears in exactly
    one chart (V6), and the gradient of the local equation vanishes there.
    A perturbed section sum_K h_K p_K = 0 with Gaussian ``h`` (fixed
    ``seed``) is then sampled ``samples`` times by solving for the best
    pivot variable; gradients stay bounded away from zero, and the unique
    critical point of its local equation misses the section.
    """
    base = subspaces.base_point(2, 4)
    vertex_plane = subspaces.ortho_complement(base)
    charts = tuple(
        chart for chart in ChartId if _chart_contains(vertex_plane, chart)
    )
    quadric = _DIVISOR_FORMS[ChartId.V6]
    origin = np.zeros(4, dtype=np.complex128)
    vertex_gradient = quadric.gradient(origin)
    probe = quadric.gradient(np.ones(4, dtype=np.complex128))

    rng = np.random.default_rng(seed)
    h = complex_gaussian(rng, 6)
    draws = complex_gaussian(rng, (samples, 4))
    scale = float(np.max(np.abs(h)))
    vanish_tol = 1e-8 * scale
    vanishing = 0
    min_norm = np.inf
    for row in draws:
        f = _section_solve(h, row)
        g = _section_gradient(h, f)
        norm = float(np.linalg.norm(g))
        min_norm = min(min_norm, norm)
        if norm < vanish_tol:
            vanishing += 1
    # the one point where the gradient of the local equation vanishes
    h0 = h[0]
    critical = np.array([h[3], -h[1], h[4], -h[2]]) / h0
    critical_value = abs(_section_value(h, critical))

    return BertiniWitness(
        charts_containing_vertex=charts,
        vertex_on_divisor=coherent.polar_divisor_member(vertex_plane, base),
        vertex_gradient_norm=float(np.linalg.norm(vertex_gradient)),
        probe_gradient=tuple(complex(v) for v in probe),
        sample_count=samples,
        vanishing_count=vanishing,
        min_gradient_norm=float(min_norm),
        critical_value=float(critical_value),
        seed=seed,
    )


def _chart_contains(x: Plane, chart: ChartId) -> bool:
    try:
        to_chart(x, chart)
    except NotInChart:
        return False
    return True


def _section_value(h, f):
    """sum_K h_K p_K at the V6 point ``f``."""
    p = np.array(_PLUECKER_FORMS[ChartId.V6](f), dtype=np.complex128)
    return complex(h @ p)


def _section_gradient(h, f):
    """Gradient of the section's local equation in V6 coordinates."""
    return np.array(
        [
            h[0] * f[3] + h[2],
            -h[0] * f[2] + h[4],
            -h[0] * f[1] - h[1],
            h[0] * f[0] - h[3],
        ]
    )


def _section_solve(h, draw):
    """A point on the perturbed section: fix three coordinates, solve the pivot.

    The local equation is affine in each single coordinate; the pivot is
    the coordinate whose linear coefficient is largest at the draw, which
    keeps the solve well conditioned.
    """
    f = np.array(draw, dtype=np.complex128)
    # the gradient component of the pivot never involves the pivot itself,
    # so evaluating it at the draw point is exact
    coeffs = _section_gradient(h, f)
    pivot = int(np.argmax(np.abs(coeffs)))
    f[pivot] = 0.0
    f[pivot] = -_section_value(h, f) / coeffs[pivot]
    return f
