import pytest

from metaplectic.cover import preset_cover
from metaplectic.lattices import BudgetExceeded
from metaplectic.rootdata import build_root_datum
from metaplectic.weylgrp import (
    TwistedAction,
    b_invariants_from_coinvariants,
    count_free_orbits_by_character,
    count_orbits_by_character,
    is_persistent,
    orbit_enumerate,
    permutation_character,
    translation_part,
    weyl_group,
    _persistent_by_orbits,
)


def closure_order(datum):
    wg = weyl_group(datum)
    return len(wg.subgroup_closure(datum.simple_reflections()))


def test_group_orders_by_closure():
    assert closure_order(build_root_datum("Sp", 4)) == 384
    assert closure_order(build_root_datum("SL", 3)) == 24
    assert closure_order(build_root_datum("SpinEven", 4)) == 192
    assert closure_order(build_root_datum("GL", 4)) == 24


def test_codec_roundtrip_and_det():
    for preset, rank in [("Sp", 3), ("SL", 3), ("SpinEven", 4), ("GL", 3), ("SO", 3)]:
        d = build_root_datum(preset, rank)
        wg = weyl_group(d)
        codec = wg.codec()
        for m in d.simple_reflections():
            e = codec.encode(m)
            assert codec.det(e) == -1
            assert codec.matrix_of(e) == tuple(tuple(r) for r in m)
            assert codec.compose(e, codec.inverse(e)) == codec.identity()


def test_class_reps_round_trip():
    for preset, rank in [("Sp", 3), ("SL", 3), ("SpinEven", 4), ("GL", 4)]:
        d = build_root_datum(preset, rank)
        wg = weyl_group(d)
        codec = wg.codec()
        for cls, size, mat in wg.class_representatives():
            assert codec.class_label(codec.encode(mat)) == cls


def test_class_labels_constant_on_conjugacy_classes_d4():
    d = build_root_datum("SpinEven", 4)
    wg = weyl_group(d)
    codec = wg.codec()
    elements = wg.subgroup_closure(d.simple_reflections())
    # brute conjugation classes
    labels = {}
    for e in elements:
        lab = codec.class_label(e)
        labels.setdefault(lab, set()).add(e)
    # each label class must be closed under conjugation
    for lab, elems in labels.items():
        e0 = next(iter(elems))
        for g in elements:
            c = codec.compose(codec.compose(codec.inverse(g), e0), g)
            assert codec.class_label(c) == lab
    # sizes must match the table
    table = wg.table()
    table_sizes = dict(table.classes())
    assert sum(table_sizes.values()) == wg.order
    for lab, elems in labels.items():
        assert table_sizes[lab] == len(elems), lab


def test_cocycle_identity():
    d = build_root_datum("Sp", 3)
    gens = d.simple_reflections()
    from metaplectic.intmat import mat_mul, vec_mat

    for m1 in gens:
        for m2 in gens:
            # composite acts as y -> y @ m2 @ m1 when w = w1 w2 acts y -> w1[w2[y]]
            m12 = tuple(tuple(r) for r in mat_mul([list(r) for r in m2], [list(r) for r in m1]))
            t1 = translation_part(d, m1)
            t2 = translation_part(d, m2)
            t12 = translation_part(d, m12)
            assert t12 == tuple(a + b for a, b in zip(vec_mat(t2, m1), t1))


def test_sl2_cubic_fixed_points_and_orbits():
    c = preset_cover("SL", 1, 3)
    act = TwistedAction(c.datum, c.quotient)
    ident = tuple(tuple(1 if i == j else 0 for j in range(1)) for i in range(1))
    assert act.fixed_count(ident) == 3
    refl = c.datum.simple_reflections()[0]
    assert act.fixed_count(refl) == 1
    orbits, free = orbit_enumerate(c)
    assert sorted(sz for sz, _ in orbits) == [1, 2]
    assert free == 1


def test_sl2_even_cover_trivial_quotient():
    c = preset_cover("SL", 1, 2)
    assert c.quotient.cardinality == 1
    sigma = permutation_character(c)
    assert all(v == 1 for v in sigma.values())


def test_burnside_consistency():
    # Burnside holds unconditionally; the sign inner product counts free orbits
    # only when stabilizers are reflection subgroups, i.e. for persistent covers
    for preset, rank, n in [("SL", 1, 3), ("Sp", 2, 3), ("Sp", 2, 4), ("SO", 2, 4),
                            ("SL", 3, 3), ("SL", 2, 2)]:
        c = preset_cover(preset, rank, n)
        orbits, free = orbit_enumerate(c)
        assert count_orbits_by_character(c) == len(orbits), (preset, rank, n)
        assert is_persistent(c) is True
        assert count_free_orbits_by_character(c) == free, (preset, rank, n)


def test_even_stabilizer_breaks_sign_count_on_non_persistent_cover():
    # SL_3 cubic cover: one twisted orbit has stabilizer A_3 (even elements
    # only), so <eps, sigma^X> = 1 while no orbit is free; the cover is not
    # persistent, which is exactly the hypothesis the free-orbit identity needs
    c = preset_cover("SL", 2, 3)
    assert is_persistent(c) is False
    orbits, free = orbit_enumerate(c)
    assert free == 0
    assert count_orbits_by_character(c) == len(orbits) == 2
    assert count_free_orbits_by_character(c) == 1


def test_sigma_x_identity_value():
    c = preset_cover("Sp", 3, 3)
    sigma = permutation_character(c)
    wg = weyl_group(c.datum)
    ident_cls = wg.codec().class_label(wg.codec().identity())
    assert sigma[ident_cls] == c.quotient.cardinality


def test_persistence_tables_for_sp():
    # odd: saturated hence persistent; 2 mod 4: not persistent; 0 mod 4: persistent
    assert is_persistent(preset_cover("Sp", 2, 3)) is True
    assert is_persistent(preset_cover("Sp", 2, 4)) is True
    assert is_persistent(preset_cover("Sp", 2, 6)) is False
    assert is_persistent(preset_cover("Sp", 3, 8)) is True
    assert is_persistent(preset_cover("Sp", 3, 10)) is False


def test_persistence_spin_odd():
    # r even, n = 2 mod 4: not persistent; r odd: saturated
    assert is_persistent(preset_cover("SpinOdd", 4, 2)) is False
    assert is_persistent(preset_cover("SpinOdd", 3, 2)) is True
    assert is_persistent(preset_cover("SpinOdd", 4, 6)) is False


def test_persistence_sl_double_covers():
    assert is_persistent(preset_cover("SL", 2, 2)) is True  # r even: saturated
    assert is_persistent(preset_cover("SL", 3, 2)) is False  # r odd
    assert is_persistent(preset_cover("SL", 5, 2)) is False


def test_persistence_gl_undetermined_unless_saturated():
    c = preset_cover("GL", 3, 4)
    # GL covers are saturated, so always persistent
    assert is_persistent(c) is True


def test_persistence_class_vs_orbit_methods():
    for preset, rank, n in [("Sp", 2, 4), ("Sp", 2, 6), ("SpinOdd", 4, 2),
                            ("SL", 3, 2), ("Sp", 3, 4), ("SpinEven", 4, 2)]:
        c = preset_cover(preset, rank, n)
        got_class = is_persistent(c)
        got_orbit = _persistent_by_orbits(c, budget=500_000)
        from metaplectic.cover import is_saturated

        if not is_saturated(c):
            assert got_class == got_orbit, (preset, rank, n)


def test_b_invariants_match_coinvariant_degrees():
    for preset, rank in [("Sp", 2), ("Sp", 3), ("SL", 3), ("SpinEven", 4), ("GL", 3)]:
        d = build_root_datum(preset, rank)
        wg = weyl_group(d)
        table = wg.table()
        reps = wg.class_representatives()
        bs = b_invariants_from_coinvariants(d, table, reps)
        for lab in table.labels():
            assert bs[lab] == table.b_invariant(lab), (preset, rank, lab)


def test_orbit_budget():
    c = preset_cover("Sp", 3, 5)
    with pytest.raises(BudgetExceeded):
        orbit_enumerate(c, budget=10)
