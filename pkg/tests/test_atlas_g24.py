"""The six-chart atlas of G_2(C^4), transitions, and the local divisor."""

import numpy as np
import pytest

from grasscut import (
    Malformed,
    NotInChart,
    OutsideOverlap,
    WrongShape,
    base_point,
    ortho_complement,
    plane_equal,
    plane_new,
    polar_divisor_member,
    random_plane,
)
from grasscut.atlas_g24 import (
    VERTEX_COORDS,
    BertiniWitness,
    ChartId,
    bertini_witness,
    chart_coords,
    chart_frame,
    cone_analysis,
    overlap_condition,
    pluecker_from_chart,
    polar_divisor_local,
    to_chart,
    transition,
)
from grasscut.pluecker import embed, pluecker_point, projective_equal
from grasscut.subspaces import complex_gaussian

ALL_CHARTS = tuple(ChartId)


def test_chart_frame_layouts():
    a = chart_frame(chart_coords(ChartId.V1, [10, 20, 30, 40]))
    assert np.array_equal(a.basis, [[1, 0, 10, 20], [0, 1, 30, 40]])
    d = chart_frame(chart_coords(ChartId.V4, [10, 20, 30, 40]))
    assert np.array_equal(d.basis, [[10, 1, 0, 20], [30, 0, 1, 40]])
    f = chart_frame(chart_coords(ChartId.V6, [10, 20, 30, 40]))
    assert np.array_equal(f.basis, [[10, 20, 1, 0], [30, 40, 0, 1]])


def test_chart_coords_validation():
    with pytest.raises(Malformed):
        chart_coords(ChartId.V1, [1, 2, 3])
    with pytest.raises(Malformed):
        chart_coords(ChartId.V1, [1, 2, 3, np.nan])


def test_to_chart_examples():
    o = base_point(2, 4)
    cc = to_chart(o, ChartId.V1)
    assert np.allclose(cc.c, 0)
    with pytest.raises(NotInChart):
        to_chart(o, ChartId.V6)
    with pytest.raises(WrongShape):
        to_chart(base_point(1, 3), ChartId.V1)


@pytest.mark.parametrize("chart", ALL_CHARTS, ids=lambda c: c.name)
def test_chart_roundtrip(chart):
    rng = np.random.default_rng(sum(chart.columns))
    for _ in range(50):
        cc = chart_coords(chart, complex_gaussian(rng, 4))
        back = to_chart(chart_frame(cc), chart)
        assert np.allclose(back.c, cc.c, atol=1e-10)


@pytest.mark.parametrize("chart", ALL_CHARTS, ids=lambda c: c.name)
def test_closed_form_pluecker_matches_minors(chart):
    rng = np.random.default_rng(17)
    for _ in range(50):
        cc = chart_coords(chart, complex_gaussian(rng, 4))
        direct = pluecker_from_chart(cc)
        minors = embed(chart_frame(cc))
        assert np.allclose(direct.coords, minors.coords, atol=1e-12)


def test_overlap_condition_closed_forms():
    cc = chart_coords(ChartId.V1, [1, 2, 3, 4])
    assert overlap_condition(cc, ChartId.V1) == 1
    assert overlap_condition(cc, ChartId.V2) == 3  # a3
    assert overlap_condition(cc, ChartId.V6) == 1 * 4 - 2 * 3  # a1 a4 - a2 a3


def test_transition_examples():
    # a transition preserves the plane and the Pluecker image
    cc = chart_coords(ChartId.V1, [1, 0, 0, 1])
    out = transition(cc, ChartId.V6)
    assert plane_equal(chart_frame(cc), chart_frame(out), tol=1e-12)
    assert projective_equal(pluecker_from_chart(cc), pluecker_from_chart(out))
    # blocked where the overlap minor vanishes
    with pytest.raises(OutsideOverlap):
        transition(chart_coords(ChartId.V1, [0, 0, 0, 1]), ChartId.V2)
    # the self-transition is the identity
    same = transition(cc, ChartId.V1)
    assert same.chart is ChartId.V1 and np.array_equal(same.c, cc.c)


def test_transition_round_trip_and_cocycle():
    rng = np.random.default_rng(23)
    done_roundtrip = done_cocycle = 0
    while done_roundtrip < 50 or done_cocycle < 50:
        cc = chart_coords(ChartId.V1, complex_gaussian(rng, 4))
        conds = {t: abs(overlap_condition(cc, t)) for t in ALL_CHARTS}
        if conds[ChartId.V2] > 0.05:
            back = transition(transition(cc, ChartId.V2), ChartId.V1)
            assert np.allclose(back.c, cc.c, atol=1e-9)
            done_roundtrip += 1
        if conds[ChartId.V3] > 0.05 and conds[ChartId.V5] > 0.05:
            via = transition(transition(cc, ChartId.V3), ChartId.V5)
            direct = transition(cc, ChartId.V5)
            assert np.allclose(via.c, direct.c, atol=1e-8)
            done_cocycle += 1


def test_atlas_covers_every_plane():
    rng = np.random.default_rng(29)
    for _ in range(200):
        x = random_plane(2, 4, rng)
        hits = 0
        for chart in ALL_CHARTS:
            try:
                cc = to_chart(x, chart)
            except NotInChart:
                continue
            hits += 1
            assert plane_equal(chart_frame(cc), x, tol=1e-8)
        assert hits >= 1


def test_local_divisor_equations():
    assert polar_divisor_local(ChartId.V1) == []
    (poly_v2,) = polar_divisor_local(ChartId.V2)
    assert poly_v2.evaluate([5, 7, 0, 9]) == 0
    assert poly_v2.evaluate([5, 7, 2, 9]) == 2
    (poly_v6,) = polar_divisor_local(ChartId.V6)
    assert poly_v6.evaluate([1, 1, 1, 1]) == 0
    assert poly_v6.evaluate([1, 2, 3, 4]) == 4 - 6
    assert np.array_equal(poly_v6.gradient([1, 1, 1, 1]), [1, -1, -1, 1])


@pytest.mark.parametrize("chart", ALL_CHARTS[1:], ids=lambda c: c.name)
def test_local_equation_cuts_out_the_divisor(chart):
    base = base_point(2, 4)
    (poly,) = polar_divisor_local(chart)
    rng = np.random.default_rng(31)
    for _ in range(50):
        c = complex_gaussian(rng, 4)
        # project the draw onto the zero set by solving for one coordinate
        if chart is ChartId.V6:
            c[3] = c[1] * c[2] / c[0]
        else:
            c[2] = 0.0
        cc = chart_coords(chart, c)
        assert abs(poly.evaluate(cc.c)) < 1e-12
        assert polar_divisor_member(chart_frame(cc), base)
        # a generic draw stays off the divisor
        generic = chart_coords(chart, complex_gaussian(rng, 4) + 2.0)
        if abs(poly.evaluate(generic.c)) > 1e-3:
            assert not polar_divisor_member(chart_frame(generic), base)


def test_divisor_misses_first_chart():
    base = base_point(2, 4)
    rng = np.random.default_rng(37)
    for _ in range(200):
        cc = chart_coords(ChartId.V1, 10 * complex_gaussian(rng, 4))
        assert not polar_divisor_member(chart_frame(cc), base)


def test_cone_analysis():
    vertex = pluecker_point(2, 4, VERTEX_COORDS)
    res = cone_analysis(vertex)
    assert res.on_hyperplane and res.on_quadric and res.is_vertex
    assert res.hyperplane_residual == 0 and res.quadric_residual == 0
    # a divisor point away from the vertex: on the cone but not its apex
    member = embed(chart_frame(chart_coords(ChartId.V6, [1, 1, 1, 1])))
    res = cone_analysis(member)
    assert res.on_hyperplane and res.on_quadric and not res.is_vertex
    # the base point misses the hyperplane (though its quadric term is 0)
    res = cone_analysis(embed(base_point(2, 4)))
    assert not res.on_hyperplane and not res.is_vertex
    assert res.hyperplane_residual == 1.0
    # a point off both surfaces: sextuple (1, 0, 1, -1, 0, 1)
    res = cone_analysis(embed(chart_frame(chart_coords(ChartId.V1, [1, 0, 0, 1]))))
    assert not res.on_hyperplane and not res.on_quadric and not res.is_vertex
    assert res.hyperplane_residual == 1.0 and res.quadric_residual == 1.0
    with pytest.raises(WrongShape):
        cone_analysis(pluecker_point(1, 3, [1, 0, 0]))


def test_cone_decomposition_is_exclusive():
    # divisor membership == on the cone; the cone splits as stratum xor vertex
    base = base_point(2, 4)
    rng = np.random.default_rng(41)
    samples = [ortho_complement(base)]
    for k in range(100):
        if k % 2 == 0:
            c = complex_gaussian(rng, 4)
            c[3] = c[1] * c[2] / c[0]
            samples.append(chart_frame(chart_coords(ChartId.V6, c)))
        else:
            samples.append(random_plane(2, 4, rng))
    for x in samples:
        member = polar_divisor_member(x, base)
        res = cone_analysis(embed(x))
        assert member == (res.on_hyperplane and res.on_quadric)
        stratum = member and not res.is_vertex
        assert member == (stratum ^ res.is_vertex)


def test_bertini_witness():
    w = bertini_witness(seed=0, samples=2000)
    assert isinstance(w, BertiniWitness)
    assert w.charts_containing_vertex == (ChartId.V6,)
    assert w.vertex_on_divisor
    assert w.vertex_gradient_norm == 0.0
    assert w.probe_gradient == (1, -1, -1, 1)
    assert w.sample_count == 2000
    assert w.vanishing_count == 0
    assert w.min_gradient_norm > 1e-6
    assert w.critical_value > 1e-6
    assert w.seed == 0
    # reproducible for a fixed seed
    again = bertini_witness(seed=0, samples=2000)
    assert again == w
