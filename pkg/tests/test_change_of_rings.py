import random

import pytest

from sdcm import (Curvature, HomomorphismDescriptor, LaurentSeries,
                  MapNotOrderPreserving, SdcClass, SdcModel, base_change,
                  check_mixed_distance, check_specialization,
                  cobase_change_model, cobase_ids, distance_table, injcurv_phi,
                  iterated_model, load_phi, localization_cases, parse_series,
                  phi_from_dict, phi_to_dict, square_zero_fiber_phi,
                  square_zero_model, validate)

from helpers import random_valid_model

ONE = LaurentSeries.from_int(1)


def test_injcurv_examples():
    gor = HomomorphismDescriptor("g", LaurentSeries.monomial(3), "R", "S")
    assert injcurv_phi(gor) == Curvature.exact(0)
    fiber = square_zero_fiber_phi(4)
    assert injcurv_phi(fiber) == Curvature.exact(4)
    poly = HomomorphismDescriptor("p", parse_series("1+2*t+t^3"), "R", "S")
    assert injcurv_phi(poly) == Curvature.exact(0)


def test_phi_json_round_trip(tmp_path):
    phi = square_zero_fiber_phi(3, source="square_zero_2")
    doc = phi_to_dict(phi)
    again = phi_from_dict(doc)
    assert again == phi
    path = tmp_path / "phi.json"
    import json
    path.write_text(json.dumps(doc))
    assert load_phi(path) == phi


def test_base_change_identity_map_renames_only():
    m = square_zero_model(2)
    ident = HomomorphismDescriptor("id", ONE, m.name, "S")
    out = base_change(m, ident)
    assert out.class_ids() == ["DtensorS", "S"]
    assert out.top == "S"
    assert out.poincare("DtensorS") == m.poincare("D")
    assert out.ring_bass == m.ring_bass
    assert out.dualizing == "DtensorS"  # the identity map is Gorenstein
    assert validate(out).valid


def test_base_change_preserves_every_distance():
    rng = random.Random(51)
    phi = square_zero_fiber_phi(3)
    for i in range(25):
        m = random_valid_model(rng, name=f"bc{i}")
        out = base_change(m, phi)
        assert validate(out).valid, str(validate(out))
        t_in = distance_table(m)
        t_out = distance_table(out)
        names = {cid: ("S" if cid == m.top else f"{cid}tensorS") for cid in m.classes}
        for (a, b), d in t_in.items():
            assert t_out[(names[a], names[b])] == d


def test_base_change_drops_dualizing_for_non_gorenstein_map():
    m = square_zero_model(2)
    out = base_change(m, square_zero_fiber_phi(3))
    assert out.dualizing is None
    assert out.ring_bass == m.ring_bass * square_zero_fiber_phi(3).bass_phi


def test_cobase_gorenstein_map_merges_families():
    m = square_zero_model(2)
    gor = HomomorphismDescriptor("g", LaurentSeries.monomial(2), m.name, "S")
    out = cobase_change_model(m, gor)
    assert out.class_ids() == ["DtensorS", "S"]
    ids = cobase_ids(m, gor)
    assert ids["D"] == ("DtensorS", "DtensorS")
    assert ids["R"] == ("S", "S")
    table = distance_table(out)
    for cid in m.classes:
        t, c = ids[cid]
        assert table[(c, t)] == Curvature.exact(0)
    assert out.dualizing == "DtensorS"
    # isomorphic to the base-change output
    bc = base_change(m, gor)
    assert {c: out.poincare(c) for c in out.classes} == \
        {c: bc.poincare(c) for c in bc.classes}
    assert out.order == bc.order


def test_cobase_square_zero_yields_four_class_model():
    m = square_zero_model(2)
    out = cobase_change_model(m, square_zero_fiber_phi(3, source=m.name))
    assert out.class_ids() == ["DtensorS", "S", "cbcD", "cbcR"]
    assert out.top == "S"
    assert out.dualizing == "cbcD"
    assert validate(out).valid
    table = distance_table(out)
    assert table[("cbcR", "DtensorS")] == Curvature.exact(5)


def test_cobase_distance_to_own_tensor_image_is_injcurv():
    phi = square_zero_fiber_phi(3)
    for m in (square_zero_model(2), square_zero_model(4), iterated_model(2, 2)):
        out = cobase_change_model(m, phi)
        ids = cobase_ids(m, phi)
        table = distance_table(out)
        for cid in m.classes:
            t, c = ids[cid]
            assert table[(c, t)] == Curvature.exact(3)


def test_cobase_tensor_and_top_dagger_noncomparable():
    # images of non-top classes never compare with the cobase image of the top
    m = square_zero_model(2)
    phi = square_zero_fiber_phi(3)
    out = cobase_change_model(m, phi)
    assert ("DtensorS", "cbcR") not in out.order
    assert ("cbcR", "DtensorS") not in out.order


def test_cobase_dagger_family_preserves_distances():
    # within the dagger family every distance matches the source, not only
    # on comparable pairs: cross edges cost at least the source edges, so no
    # detour through the tensor family can undercut
    rng = random.Random(61)
    phi = square_zero_fiber_phi(2)
    for i in range(15):
        m = random_valid_model(rng, name=f"df{i}")
        out = cobase_change_model(m, phi)
        ids = cobase_ids(m, phi)
        t_src = distance_table(m)
        t_out = distance_table(out)
        for (a, b), d in t_src.items():
            assert t_out[(ids[a][1], ids[b][1])] == d


def test_check_mixed_distance_on_examples():
    phi = square_zero_fiber_phi(3)
    for src in (square_zero_model(2), square_zero_model(5), iterated_model(2, 2)):
        out = cobase_change_model(src, phi)
        rep = check_mixed_distance(out, phi, src)
        assert rep.passed, str(rep)


def test_check_mixed_distance_specific_values():
    src = square_zero_model(2)
    phi = square_zero_fiber_phi(3)
    out = cobase_change_model(src, phi)
    table = distance_table(out)
    # comparable pair D below R: max(dist, injcurv) = max(2, 3)
    assert table[("cbcD", "S")] == Curvature.exact(3)
    # noncomparable direction R, D: bound holds with equality 3 + 2
    assert table[("cbcR", "DtensorS")] == Curvature.exact(5)


def test_specialization_cases_strict_and_equal():
    cases = localization_cases()
    (big1, small1, map1), (big2, small2, map2) = cases
    assert validate(big1).valid and validate(small1).valid
    assert validate(big2).valid and validate(small2).valid
    rep1 = check_specialization(big1, small1, map1)
    assert rep1.passed
    assert any(w.startswith("strict") for w in rep1.witnesses)
    rep2 = check_specialization(big2, small2, map2)
    assert rep2.passed
    assert not any(w.startswith("strict") for w in rep2.witnesses)
    assert any(w.startswith("equal") for w in rep2.witnesses)


def test_specialization_identity_map_is_equality():
    m = iterated_model(2, 3)
    rep = check_specialization(m, m, {c: c for c in m.classes})
    assert rep.passed
    assert all(not w.startswith("strict") for w in rep.witnesses)


def test_specialization_rejects_bad_maps():
    (big1, small1, _), _ = localization_cases()
    with pytest.raises(MapNotOrderPreserving):
        check_specialization(big1, small1, {"R": "Rp"})  # not total
    big2, small2 = square_zero_model(2), square_zero_model(2)
    with pytest.raises(MapNotOrderPreserving):
        check_specialization(big2, small2, {"R": "D", "D": "R"})
