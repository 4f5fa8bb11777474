import random
from fractions import Fraction

import pytest

from jfkernel.construct import (
    CompatibilityFailed,
    ConstraintFailed,
    InconsistentPair,
    NonSquarefreeIndex,
    VVPair,
    derive_bridge_constant,
    derive_heat_constant,
    eta6_dilated,
    lambda2_fwd,
    lambda2_inv,
    lambda_star_fwd,
    lambda_star_inv,
    psi_0m,
    psi_form,
    remark_maps,
    xi_hat,
    xi_m_star_hat,
    xi_pair_hat,
)
from jfkernel.cyclotomic import imag_unit
from jfkernel.jacobi import (
    d2_hat,
    restrict_z0,
    symmetry_check,
    theta_component,
    theta_decompose,
    theta_j,
)
from jfkernel.series import PuiseuxSeries, dilate, eta_power

F = Fraction


def random_series(rng, vb, nterms=6, grid=4):
    terms = {
        F(rng.randint(0, int(vb * grid) - 1), grid): rng.randint(-4, 4)
        + rng.randint(-1, 1) * imag_unit()
        for _ in range(nterms)
    }
    return PuiseuxSeries(terms, vb)


def test_xi_hat_leading_terms():
    xi = xi_hat(10)
    assert xi.val() == F(1, 4)
    assert xi.coeff(F(1, 4)) == F(-1, 2)
    assert xi.coeff(F(5, 4)) == 3
    assert xi.coeff(F(9, 4)) == F(-9, 2)


def test_xi_hat_is_minus_half_eta6():
    xi = xi_hat(50)
    e6 = eta_power(6, 50) * F(-1, 2)
    assert xi.same_below(e6)


def test_xi_star_hat_m1_is_xi_hat():
    assert xi_m_star_hat(1, 20).same_below(xi_hat(20))


def test_xi_star_hat_dilation_and_eta6():
    for m in range(1, 8):
        star = xi_m_star_hat(m, 30)
        viadil = m * dilate(xi_hat(Fraction(30, m) + 1), m)
        assert star.same_below(viadil, min(star.valid_below, viadil.valid_below)), m
        e6 = eta6_dilated(m, 30) * F(-m, 2)
        assert star.same_below(e6, min(star.valid_below, e6.valid_below)), m


def test_xi_star_hat_m2_leading():
    star = xi_m_star_hat(2, 10)
    assert star.val() == F(1, 2)
    assert star.coeff(F(1, 2)) == -1
    assert star.coeff(F(5, 2)) == 6


def test_xi_pair_leading_terms():
    xi0, xi2 = xi_pair_hat(10)
    assert xi0.coeff(F(1, 8)) == F(-1, 8)
    assert xi0.coeff(F(9, 8)) == F(-9, 8)
    assert xi2.coeff(F(5, 8)) == F(3, 4)
    assert xi0.val() == F(1, 8) and xi2.val() == F(5, 8)


def test_bridge_constant_is_one():
    c = derive_bridge_constant(14)
    assert c == 1
    # and the identity holds below q^30
    order = F(30)
    xi0, xi2 = xi_pair_hat(order)
    t0 = theta_component(2, 0, order)
    t1 = theta_component(2, 1, order)
    t2 = theta_component(2, 2, order)
    lhs = t2 * xi0 - t0 * xi2
    rhs = t1 * xi_m_star_hat(2, order)
    assert lhs.same_below(rhs, min(lhs.valid_below, rhs.valid_below))


def test_lambda2_fwd_trivial_cases():
    t1 = theta_component(2, 1, 12)
    z = PuiseuxSeries.zero(12)
    pair = lambda2_fwd(t1, z)
    assert pair.comp0.same_below(PuiseuxSeries.one(10), min(pair.comp0.valid_below, 10))
    assert pair.comp2.is_zero()
    q = PuiseuxSeries.monomial(1, 1, 12)
    q2 = PuiseuxSeries.monomial(1, 2, 12)
    pair2 = lambda2_fwd(q * t1, q2 * t1)
    assert pair2.comp0.same_below(q, min(pair2.comp0.valid_below, 12))
    assert pair2.comp2.same_below(q2, min(pair2.comp2.valid_below, 12))


def test_lambda2_inv_restricts_to_zero():
    rng = random.Random(31)
    for _ in range(10):
        phi0 = random_series(rng, 10)
        phi2 = random_series(rng, 10)
        phi = lambda2_inv(phi0, phi2, 12)
        assert restrict_z0(phi).is_zero()
        assert symmetry_check(phi, 2)


def test_lambda2_inv_unit_pair_components():
    one = PuiseuxSeries.one(12)
    zero = PuiseuxSeries.zero(12)
    phi = lambda2_inv(one, zero, 12)
    assert restrict_z0(phi).is_zero()
    h = theta_decompose(phi, 2)
    t1 = theta_component(2, 1, 12)
    t0 = theta_component(2, 0, 12)
    assert h[0].same_below(t1, min(h[0].valid_below, t1.valid_below))
    assert h[1].same_below(t0 * F(-1, 2), min(h[1].valid_below, t0.valid_below))
    assert h[2].is_zero()
    assert h[3].same_below(h[1], min(h[3].valid_below, h[1].valid_below))
    assert lambda2_inv(zero, zero, 12).is_zero()


def test_lambda2_round_trip():
    rng = random.Random(37)
    for _ in range(10):
        phi0 = random_series(rng, 10)
        phi2 = random_series(rng, 10)
        phi = lambda2_inv(phi0, phi2, 13)
        h = theta_decompose(phi, 2)
        pair = lambda2_fwd(h[0], h[2])
        b0 = min(pair.comp0.valid_below, phi0.valid_below)
        b2 = min(pair.comp2.valid_below, phi2.valid_below)
        assert pair.comp0.same_below(phi0, b0)
        assert pair.comp2.same_below(phi2, b2)


def test_d2_of_lambda2_inv_is_8k_pairing():
    rng = random.Random(41)
    for k in (2, 4, 10):
        for _ in range(6):
            phi0 = random_series(rng, 9)
            phi2 = random_series(rng, 9)
            phi = lambda2_inv(phi0, phi2, 11)
            lhs = d2_hat(phi, k)
            xi0, xi2 = xi_pair_hat(11)
            rhs = (phi0 * xi0 + phi2 * xi2) * (8 * k)
            assert lhs.same_below(rhs, min(lhs.valid_below, rhs.valid_below)), k


def test_d2_of_lambda2_inv_unit_example():
    # pair (0, 1): the heat image is 8k xi2
    zero = PuiseuxSeries.zero(12)
    one = PuiseuxSeries.one(12)
    for k in (2, 10):
        phi = lambda2_inv(zero, one, 12)
        lhs = d2_hat(phi, k)
        _, xi2 = xi_pair_hat(12)
        rhs = xi2 * (8 * k)
        assert lhs.same_below(rhs, min(lhs.valid_below, rhs.valid_below))


def test_heat_constant_derivation():
    for m in (1, 2, 3, 5):
        assert derive_heat_constant(m) == 4 * m, m


def test_d2_of_lambda_star_inv():
    rng = random.Random(43)
    for m in (1, 2, 3, 5):
        for k in (2, 4):
            phi = random_series(rng, 8)
            jac = lambda_star_inv(phi, m, 10)
            lhs = d2_hat(jac, k)
            rhs = phi * xi_m_star_hat(m, 10) * (4 * m * k)
            assert lhs.same_below(rhs, min(lhs.valid_below, rhs.valid_below)), (m, k)


def test_lambda_star_inv_structure():
    rng = random.Random(47)
    for m in (1, 2, 3, 5, 6):
        phi = random_series(rng, 8)
        jac = lambda_star_inv(phi, m, 10)
        assert restrict_z0(jac).is_zero()
        comps = theta_decompose(jac, m)
        for r in range(2 * m):
            if r not in (0, m):
                assert comps[r].is_zero(), (m, r)
        assert symmetry_check(jac, m)
    assert lambda_star_inv(PuiseuxSeries.zero(8), 2, 10).is_zero()


def test_lambda_star_inv_m1():
    one = PuiseuxSeries.one(10)
    jac = lambda_star_inv(one, 1, 10)
    expected = theta_component(1, 1, 10) * theta_j(1, 0, 10) - theta_component(1, 0, 10) * theta_j(1, 1, 10)
    assert jac.same_below(expected, min(jac.valid_below, expected.valid_below))
    assert restrict_z0(jac).is_zero()


def test_lambda_star_rejects_squareful_index():
    with pytest.raises(NonSquarefreeIndex):
        lambda_star_inv(PuiseuxSeries.one(5), 4, 6)


def test_lambda_star_fwd():
    m = 3
    t0 = theta_component(m, 0, 12)
    tm = theta_component(m, m, 12)
    out = lambda_star_fwd(tm, -t0, m)
    assert out.same_below(PuiseuxSeries.one(5), min(out.valid_below, 5))
    q = PuiseuxSeries.monomial(1, 1, 12)
    out2 = lambda_star_fwd(q * tm, -(q * t0), m)
    assert out2.same_below(q, min(out2.valid_below, 5))
    with pytest.raises(InconsistentPair):
        lambda_star_fwd(tm, t0, m)


def test_lambda_star_round_trip():
    rng = random.Random(53)
    for m in (1, 2, 3):
        for _ in range(8):
            phi = random_series(rng, 8)
            jac = lambda_star_inv(phi, m, 12)
            comps = theta_decompose(jac, m)
            back = lambda_star_fwd(comps[0], comps[m], m)
            b = min(back.valid_below, phi.valid_below)
            assert back.same_below(phi, b), m


def test_psi_form():
    xi0, xi2 = xi_pair_hat(12)
    psi = psi_form(xi2, -xi0)
    assert psi.same_below(PuiseuxSeries.one(5), min(psi.valid_below, 5))
    q = PuiseuxSeries.monomial(1, 1, 10)
    psi2 = psi_form(q * xi2, -(q * xi0))
    assert psi2.same_below(q, min(psi2.valid_below, 5))
    with pytest.raises(CompatibilityFailed):
        psi_form(xi2, xi0)


def test_psi_0m_projection():
    for m in (2, 3):
        t = theta_j(m, 0, 12)
        p = psi_0m(t, m)
        assert p.same_below(t, min(p.valid_below, t.valid_below))
        t1 = theta_j(m, 1, 12)
        assert psi_0m(t1, m).is_zero()


def test_psi_0m_idempotent():
    rng = random.Random(59)
    m = 2
    from jfkernel.jacobi import recompose

    comps = [random_series(rng, 8) for _ in range(4)]
    phi = recompose(comps, m, 10)
    once = psi_0m(phi, m)
    twice = psi_0m(once, m)
    assert twice.same_below(once, min(twice.valid_below, once.valid_below))


def test_remark_maps_round_trip():
    rng = random.Random(61)
    pair = VVPair(random_series(rng, 8), random_series(rng, 8))
    fwd = remark_maps(pair, "r3_fwd")
    back = remark_maps(fwd, "r3_inv")
    b0 = min(back.comp0.valid_below, pair.comp0.valid_below)
    assert back.comp0.same_below(pair.comp0, b0)
    b2 = min(back.comp2.valid_below, pair.comp2.valid_below)
    assert back.comp2.same_below(pair.comp2, b2)


def test_remark_r4():
    t0 = theta_component(2, 0, 12)
    t2 = theta_component(2, 2, 12)
    out = remark_maps(VVPair(t2, -t0), "r4")
    t1 = theta_component(2, 1, 12)
    assert out.same_below(t1, min(out.valid_below, 6))
    with pytest.raises(ConstraintFailed):
        remark_maps(VVPair(PuiseuxSeries.one(8), PuiseuxSeries.one(8)), "r4")
