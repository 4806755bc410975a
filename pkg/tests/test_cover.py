from fractions import Fraction

import pytest

from metaplectic.cover import (
    compute_cover,
    dual_root_datum,
    distinguished_torsor_size,
    exceptional_character,
    is_saturated,
    lemma_long_root_check,
    preset_cover,
    preset_form,
    saturation_of,
    QuadraticForm,
)
from metaplectic.lattices import Lattice
from metaplectic.rootdata import build_root_datum


def test_sl2_cubic_cover():
    c = preset_cover("SL", 1, 3)
    assert c.n_alpha == [3]
    # B_Q(a-vee, a-vee) = 2, so Y_{Q,3} = 3Z a-vee and the quotient is Z/3
    assert c.Y_Qn == Lattice([[3]])
    assert c.quotient.cardinality == 3


def test_sp_odd_cover_has_B_dual():
    for r in (2, 3):
        c = preset_cover("Sp", r, 3)
        assert all(nt == na for nt, na in zip(c.ntilde_alpha, c.n_alpha))
        dual = dual_root_datum(c)
        assert [str(t) for t in dual.components] == (["B%d" % r] if r >= 3 else ["C2"])


def test_sp_even_cover_dual_and_saturation_lattice():
    # n = 2 mod 4: i_{alpha_r} = 1/2 and the saturation strictly contains
    # the rescaled simple-coroot lattice
    c = preset_cover("Sp", 2, 6)
    assert c.i_alpha[-1] == Fraction(1, 2)
    assert c.Ytilde_Qn_sc != c.Y_Qn_sc
    assert c.Ytilde_Qn_sc.contains_lattice(c.Y_Qn_sc)
    dual = dual_root_datum(c)
    assert [str(t) for t in dual.components] == ["C2"]
    assert lemma_long_root_check(c)


def test_dual_at_n1_is_langlands_dual():
    c = preset_cover("SpinOdd", 3, 1)
    dual = dual_root_datum(c)
    assert [str(t) for t in dual.components] == ["C3"]


def test_saturation_table_sl():
    import math

    for r in range(2, 6):
        for n in range(1, 9):
            c = preset_cover("SL", r, n)
            assert is_saturated(c) == (math.gcd(n, r + 1) == 1), (r, n)


def test_saturation_table_sp():
    for r in (2, 3):
        for n in range(1, 9):
            c = preset_cover("Sp", r, n)
            assert is_saturated(c) == (n % 2 == 1), (r, n)


def test_so_cover_lattices_at_4():
    r = 3
    c = preset_cover("SO", r, 4)
    twoY = Lattice([[2 if j == i else 0 for j in range(r)] for i in range(r)])
    assert c.Y_Qn == twoY
    assert c.Y_Qn_sc == twoY
    assert is_saturated(c)
    nu = exceptional_character(c)
    # nu = omega_r + sum omega_i/2
    ws = c.datum.fundamental_weights()
    expect = tuple(sum((w[j] * (Fraction(1) if i == r - 1 else Fraction(1, 2))
                        for i, w in enumerate(ws)), Fraction(0)) for j in range(r))
    assert nu == expect


def test_exceptional_character_values():
    c = preset_cover("Sp", 3, 4)
    nutilde = saturation_of(c)
    # all ntilde equal n/2 = 2, so nu~ = rho/2 on the coroot span
    assert all(nt == 2 for nt in c.ntilde_alpha)
    for cv in c.datum.simple_coroots:
        assert sum(a * b for a, b in zip(nutilde, cv)) == Fraction(1, 2)
    # simply-laced with constant n_alpha: nu = rho / n
    c = preset_cover("SL", 3, 5)
    nu = exceptional_character(c)
    assert nu == tuple(x / 5 for x in c.datum.rho)


def test_torsor_sizes():
    assert distinguished_torsor_size(preset_cover("SL", 1, 2)) == 2
    assert distinguished_torsor_size(preset_cover("Sp", 2, 3)) == 1
    # simply-connected with Y_{Q,n} = Y^{sc}_{Q,n}: trivial
    c = preset_cover("Sp", 2, 3)
    assert c.Y_Qn == c.Y_Qn_sc


def test_weyl_invariance_required():
    d = build_root_datum("SL", 2)
    bad = QuadraticForm([[2, 0], [0, 4]])
    with pytest.raises(ValueError):
        compute_cover(d, bad, 2)


def test_gl_cover_is_saturated():
    for r in (2, 3, 4):
        for n in (2, 3, 4):
            c = preset_cover("GL", r, n)
            assert is_saturated(c)
            assert all(na == n for na in c.n_alpha)  # Q(alpha-vee) = -1


def test_gspin_cover_builds():
    c = preset_cover("GSpin", 3, 2)
    assert lemma_long_root_check(c)
    assert c.quotient.cardinality > 0


def test_spin_odd_lattices():
    # Spin_{2r+1}, n in 4Z+2: Y^{sc}_{Q,n} = n Z^r inside the even-coordinate-sum lattice
    c = preset_cover("SpinOdd", 4, 6)
    assert c.n_alpha == [6, 6, 6, 3]
    assert not is_saturated(c)
