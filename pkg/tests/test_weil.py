import random

import pytest

from jfkernel.cyclotomic import CYC24, from_rational, imag_unit
from jfkernel.sl2 import (
    GroupWord,
    S,
    T,
    random_gamma0_2_word,
    random_gamma0_m_word,
    sl2_word,
)
from jfkernel.weil import (
    NotInX,
    UMatrix,
    block_rows_vanish,
    cusp_entry_values,
    field_order,
    in_X,
    omega_m,
    r_char,
    resolve,
    resolve_scalar,
    rho2,
    submatrix_proportional,
    u_gen,
    u_gen_general,
    word_product,
)

I = imag_unit()
Z8 = CYC24.zeta(3)


def test_displayed_generators():
    t1 = u_gen(1, "T")
    assert t1.entry(0, 0) == 1 and t1.entry(1, 1) == I
    t2 = u_gen(2, "T")
    assert t2.entry(1, 1) == Z8 and t2.entry(2, 2) == -1 and t2.entry(3, 3) == Z8
    s1 = u_gen(1, "S")
    # e^{-pi i/4}/sqrt(2) entries
    assert s1.radicand == 2
    assert s1.rows[0][0] == CYC24.zeta(-3)
    assert s1.rows[1][1] == -CYC24.zeta(-3)


def test_u1_minus_identity_is_s_squared():
    m = u_gen(1, "-I")
    assert m.entry(0, 0) == -I and m.entry(1, 1) == -I and m.entry(0, 1) == 0


def test_u2_s_squared_is_minus_identity_display():
    s = u_gen(2, "S")
    sq = s @ s
    assert sq == u_gen(2, "-I")


def test_general_matches_displayed():
    for g in ("S", "T"):
        assert u_gen_general(1, g) == u_gen(1, g)
        assert u_gen_general(2, g) == u_gen(2, g)


def test_general_m3_T_entries():
    t = u_gen_general(3, "T")
    f = t.field
    # diag entries e^{2 pi i r^2 / 12}
    for r in range(6):
        assert t.rows[r][r] == f.zeta((f.n // 12) * (r * r % 12))


def test_unitarity_of_word_products():
    rng = random.Random(3)
    for m in (1, 2, 3):
        for _ in range(5):
            if m == 2:
                w = random_gamma0_2_word(rng, 6)
            else:
                w, _ = random_gamma0_m_word(rng, m)
            W = word_product(m, w)
            assert W @ W.conj_transpose() == UMatrix.identity(W.field, 2 * m)


def test_word_product_ss_m1():
    w = GroupWord.of(("S", 1), ("S", 1))
    W = word_product(1, w)
    assert W == u_gen(1, "-I")
    assert W.entry(0, 0) == -I


def test_empty_word_is_identity():
    W = word_product(2, GroupWord.of())
    assert W == UMatrix.identity(W.field, 4)


def test_word_st_cubed_is_scalar_times_minus_identity():
    w = GroupWord.of(("S", 1), ("T", 1), ("S", 1), ("T", 1), ("S", 1), ("T", 1))
    W = word_product(1, w)
    target = u_gen(1, "-I")
    ratios = set()
    Wc, tc = W.canonical(), target.canonical()
    for i in range(2):
        for j in range(2):
            if not tc.rows[i][j].is_zero():
                ratios.add(str(Wc.rows[i][j] / tc.rows[i][j]))
    assert len(ratios) == 1
    sigma = Wc.rows[0][0] / tc.rows[0][0]
    assert (sigma ** 8) == 1


def test_resolve_generators_scalar_one():
    for m, name in [(1, "S"), (1, "T"), (2, "S"), (2, "T"), (2, "ST2S"), (2, "-I")]:
        _, sigma = resolve_scalar(m, GroupWord.of((name, 1)))
        assert sigma == 1, (m, name)


def test_resolve_ss_m1():
    w = GroupWord.of(("S", 1), ("S", 1))
    R, sigma = resolve_scalar(1, w)
    assert sigma == 1
    assert R == u_gen(1, "-I")


def test_snap_failure_on_corrupted_matrix():
    from jfkernel.weil import SnapFailed

    w = GroupWord.of(("T", 1))
    bad = u_gen(1, "T").scale(from_rational(2))
    with pytest.raises(SnapFailed):
        resolve_scalar(1, w, bad)


def test_s_squared_matches_st_cubed_up_to_scalar():
    s = u_gen(1, "S")
    t = u_gen(1, "T")
    a = s @ s
    b = (s @ t) ** 3
    ac, bc = a.canonical(), b.canonical()
    ratios = set()
    for i in range(2):
        for j in range(2):
            if ac.rows[i][j].is_zero():
                assert bc.rows[i][j].is_zero()
            else:
                ratios.add(str(bc.rows[i][j] / ac.rows[i][j]))
    assert len(ratios) == 1
    sigma = bc.rows[0][0] / ac.rows[0][0]
    assert sigma ** 8 == 1


def test_resolve_sample_point_independence():
    rng = random.Random(11)
    for _ in range(10):
        w = random_gamma0_2_word(rng, 8)
        _, s1 = resolve_scalar(2, w, tau=0.11 + 1.21j, z=0.07 + 0.13j)
        _, s2 = resolve_scalar(2, w, tau=-0.23 + 0.87j, z=0.11 - 0.05j)
        assert s1 == s2


def test_resolved_scalars_are_signs_for_true_generator_words():
    # products of true multiplier matrices differ from the true product
    # matrix by the square-root branch cocycle, a sign
    rng = random.Random(13)
    for _ in range(20):
        w = random_gamma0_2_word(rng, 10)
        _, sigma = resolve_scalar(2, w)
        assert sigma == 1 or sigma == -1


def test_in_X_examples():
    assert in_X(u_gen(2, "T"))
    assert in_X(u_gen(2, "ST2S"))
    assert in_X(u_gen(2, "-I"))
    f = CYC24
    bad = UMatrix(f, [[f.one] * 4 for _ in range(4)], 1)
    assert not in_X(bad)
    assert not in_X(u_gen(1, "T"))


def test_r_char_values():
    assert r_char(u_gen(2, "T")) == Z8
    assert r_char(u_gen(2, "ST2S")) == -I
    assert r_char(u_gen(2, "-I")) == -I
    assert r_char(UMatrix.identity(CYC24, 4)) == 1
    with pytest.raises(NotInX):
        r_char(u_gen(1, "T"))


def test_r_char_is_character_on_X():
    rng = random.Random(17)
    for _ in range(30):
        V = resolve(2, random_gamma0_2_word(rng, 8))
        W = resolve(2, random_gamma0_2_word(rng, 8))
        assert in_X(V) and in_X(W)
        assert r_char(V @ W) == r_char(V) * r_char(W)


def test_rho2_minus_identity():
    w = GroupWord.of(("-I", 1))
    R = rho2(w)
    assert R.size == 2
    assert R.entry(0, 0) == -1 and R.entry(1, 1) == -1 and R.entry(0, 1) == 0


def test_rho2_identity():
    R = rho2(GroupWord.of(("T", 1), ("T", -1)))
    assert R == UMatrix.identity(CYC24, 2)


def test_rho2_multiplicative():
    rng = random.Random(19)
    for _ in range(25):
        w1 = random_gamma0_2_word(rng, 6)
        w2 = random_gamma0_2_word(rng, 6)
        lhs = rho2(w1 + w2)
        rhs = rho2(w1) @ rho2(w2)
        assert lhs == UMatrix(rhs.field, rhs.rows, rhs.radicand, True, 2)


def test_omega_values():
    assert omega_m(T, 1) == I
    assert omega_m(S, 1) == I
    # omega_2(T) = det U_1(T^2) = det diag(1, -1) = -1
    assert omega_m(T, 2) == -1


def test_omega_multiplicative():
    rng = random.Random(23)
    for m in (1, 2):
        for _ in range(25):
            if m == 1:
                g1 = sl2_word(random_gamma0_2_word(rng, 6).to_matrix()).to_matrix()
                g2 = random_gamma0_2_word(rng, 6).to_matrix()
            else:
                g1 = random_gamma0_2_word(rng, 6).to_matrix()
                g2 = random_gamma0_2_word(rng, 6).to_matrix()
            assert omega_m(g1 @ g2, m) == omega_m(g1, m) * omega_m(g2, m)


def test_cusp_entries_proportional_to_closed_form():
    # entries proportional to 1 + (-1)^c +- 2 i^{-c/2}, with i^{-c/2} read as
    # e^{-pi i c/4}
    for c in range(1, 13):
        e00, e20 = cusp_entry_values(c)
        sign = from_rational((-1) ** c)
        base = CYC24.zeta((-3 * c) % 24)
        f0 = 1 + sign + 2 * base
        f2 = 1 + sign - 2 * base
        assert e00 * f2 == e20 * f0, c


def test_cusp_entries_nonvanishing():
    for c in range(1, 21):
        e00, e20 = cusp_entry_values(c)
        if c % 2 == 1 or c % 4 == 2:
            assert not e00.is_zero() and not e20.is_zero(), c


def test_cusp_entry_c4_vanishes():
    e00, _ = cusp_entry_values(4)
    assert e00.is_zero()


def test_block_structure_exact():
    rng = random.Random(29)
    for m in (2, 3, 5, 6):
        for _ in range(6):
            w, wm = random_gamma0_m_word(rng, m)
            W = word_product(m, w)
            assert block_rows_vanish(m, W), (m, str(w))
            W1 = word_product(1, wm)
            assert submatrix_proportional(m, W, W1), (m, str(w))


def test_field_orders():
    assert field_order(1) == 24
    assert field_order(2) == 24
    assert field_order(3) == 24
    assert field_order(5) == 120
    assert field_order(6) == 24


def test_umatrix_json():
    U = u_gen(2, "S")
    obj = U.to_json()
    assert obj["size"] == 4 and obj["order"] == 24
    s1 = u_gen(1, "S")
    assert s1.to_json()["sqrt_radicand"] == 2
