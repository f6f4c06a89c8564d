import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from chhs.grid import CellField, GridSpec, MacField, project_function, zero_normal_faces
from chhs.operators import (
    divergence,
    face_average,
    gradient,
    inner_cell,
    inner_grad,
    inner_mac,
    laplacian,
    mac_norm2,
    norm_h1,
    norm_h3,
    norm_inf,
    norm_p,
)

BOX = GridSpec(3.2, 3.2, 16, 16)


def hand_grid():
    # phi_{1,1}=1, phi_{2,1}=2, phi_{1,2}=3, phi_{2,2}=4 on a 2x2 grid with h=1
    return CellField.from_interior(GridSpec(2.0, 2.0, 2, 2), np.array([[1.0, 3.0], [2.0, 4.0]]))


def test_gradient_hand_stencil():
    g = gradient(hand_grid())
    assert g.fx[1, 0] == 1.0
    assert g.fy[0, 1] == 2.0
    # closed boundary faces
    assert not g.fx[0].any() and not g.fx[-1].any()


def test_laplacian_hand_stencil():
    assert laplacian(hand_grid()).interior[0, 0] == 3.0


def test_constant_field_has_no_gradient():
    c = CellField.constant(BOX, 0.7)
    g = gradient(c)
    assert not g.fx.any() and not g.fy.any()
    assert not laplacian(c).interior.any()


def test_linear_field_has_unit_interior_gradient():
    phi = project_function(lambda x, y: x, BOX)
    np.testing.assert_allclose(gradient(phi).fx[1:-1], 1.0, rtol=0, atol=1e-13)


def test_second_difference_of_quadratic():
    spec = GridSpec(16.0, 16.0, 16, 16)  # h = 1 keeps the arithmetic exact
    phi = project_function(lambda x, y: x * x, spec)
    d = divergence(gradient(phi)).interior
    np.testing.assert_array_equal(d[1:-1, :], 2.0)


def test_face_average_examples():
    spec = GridSpec(2.0, 1.0, 2, 1)
    phi = CellField.from_interior(spec, np.array([[1.0], [3.0]]))
    a = face_average(phi)
    assert a.fx[1, 0] == 2.0
    assert a.fx[0, 0] == 1.0 and a.fx[2, 0] == 3.0
    five = CellField.from_interior(GridSpec(1.0, 1.0, 1, 1), np.array([[5.0]]))
    assert face_average(five).fx[0, 0] == 5.0


def test_inner_products_measure_the_domain():
    one = CellField.constant(BOX, 1.0)
    assert inner_cell(one, one) == pytest.approx(10.24, rel=1e-14)
    assert norm_p(one, 2) ** 2 == pytest.approx(10.24, rel=1e-14)


@pytest.mark.parametrize("c", [0.3, -1.7])
def test_norms_of_constants(c):
    f = CellField.constant(BOX, c)
    assert norm_p(f, 4) ** 4 == pytest.approx(c ** 4 * BOX.area, rel=1e-13)
    assert norm_p(f, 1) == pytest.approx(abs(c) * BOX.area, rel=1e-13)
    assert norm_h1(f) ** 2 == pytest.approx(c * c * BOX.area, rel=1e-13)
    assert norm_h3(f) ** 2 == pytest.approx(c * c * BOX.area, rel=1e-13)
    assert norm_inf(f) == abs(c)


def test_unsupported_norm_exponent():
    with pytest.raises(ValueError, match="unsupported"):
        norm_p(CellField(BOX), 3)


def test_mismatched_grids_rejected():
    with pytest.raises(ValueError, match="mismatch"):
        inner_cell(CellField(BOX), CellField(GridSpec(3.2, 3.2, 8, 8)))


def test_boundary_faces_have_half_weight():
    spec = GridSpec(2.0, 2.0, 2, 2)
    u = MacField(spec, np.ones((3, 2)), np.zeros((2, 3)))
    # 2 boundary columns at weight 1/2 plus one interior column, two faces each, h^2 = 1
    assert inner_mac(u, u) == 4.0
    assert mac_norm2(u) == 2.0


def test_inner_grad_is_squared_gradient_norm(rng):
    phi = CellField.from_interior(BOX, rng.standard_normal(BOX.shape))
    g = gradient(phi)
    assert inner_grad(phi, phi) == pytest.approx(mac_norm2(g) ** 2, rel=1e-14)


def test_h3_norm_reghosts_laplacian():
    # lap(cos(pi x / L)) is again a cosine with zero normal derivative; without
    # re-ghosting its boundary gradient would be polluted by the zero ghost
    L = 3.2
    phi = project_function(lambda x, y: np.cos(np.pi * x / L), BOX)
    lap = laplacian(phi).interior
    from chhs.operators import grad_laplacian
    g = grad_laplacian(phi)
    assert np.all(g.fx[0] == 0.0) and np.all(g.fx[-1] == 0.0)
    np.testing.assert_allclose(g.fx[1:-1], np.diff(lap, axis=0) / BOX.h, rtol=0, atol=1e-10)
    assert norm_h3(phi) > norm_h1(phi)


# summation by parts -------------------------------------------------------------

def _field(spec, data):
    return CellField.from_interior(spec, data)


@st.composite
def field_pairs(draw):
    n = draw(st.sampled_from([4, 8, 16, 32]))
    elems = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
    a = draw(arrays(np.float64, (n, n), elements=elems))
    b = draw(arrays(np.float64, (n, n), elements=elems))
    h = draw(st.sampled_from([0.1, 0.2, 1.0 / 3.0]))
    return GridSpec(n * h, n * h, n, n), a, b


@settings(max_examples=60, deadline=None)
@given(field_pairs())
def test_summation_by_parts_property(data):
    spec, a, b = data
    phi, psi = _field(spec, a), _field(spec, b)
    lhs = inner_cell(phi, laplacian(psi)) + inner_grad(phi, psi)
    scale = max(1.0, norm_p(phi, 2) * norm_h1(psi))
    assert abs(lhs) <= 1e-12 * scale


@settings(max_examples=60, deadline=None)
@given(field_pairs())
def test_divergence_is_minus_adjoint_property(data):
    spec, a, b = data
    phi = _field(spec, a)
    n = spec.nx
    u = zero_normal_faces(MacField(spec, np.resize(b, (n + 1, n)), np.resize(b.T, (n, n + 1))))
    lhs = inner_cell(phi, divergence(u)) + inner_mac(gradient(phi), u)
    scale = max(1.0, norm_p(phi, 2) * mac_norm2(u) / spec.h)
    assert abs(lhs) <= 1e-12 * scale


@settings(max_examples=40, deadline=None)
@given(field_pairs())
def test_minus_laplacian_is_positive_semidefinite(data):
    spec, a, _ = data
    phi = _field(spec, a)
    q = -inner_cell(phi, laplacian(phi))
    assert q >= -1e-13 * max(1.0, norm_p(phi, 2) ** 2 / spec.h ** 2)
    if np.ptp(a) > 1e-3:
        assert q > 0


def test_laplacian_quadratic_form_vanishes_only_on_constants():
    spec = GridSpec(1.0, 1.0, 8, 8)
    c = CellField.constant(spec, 2.5)
    assert inner_cell(c, laplacian(c)) == 0.0
    bump = c.copy()
    bump.values[3, 3] += 1e-6
    assert -inner_cell(bump, laplacian(bump)) > 0


@pytest.mark.parametrize("n", [4, 8, 16, 32])
def test_divergence_of_gradient_is_laplacian_bitwise(n, rng):
    spec = GridSpec(1.0, 1.0, n, n)
    phi = _field(spec, rng.standard_normal((n, n)))
    np.testing.assert_array_equal(divergence(gradient(phi)).values, laplacian(phi).values)
