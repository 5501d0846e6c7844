import itertools

import pytest

from grobmod import (FieldSpec, RingError, GroebnerCertificate,
                     verify_buchberger, buchberger_complete, ideal_member,
                     JordanType, EigenvalueData, classify_banal_local_ring,
                     run_paper_suite)
from grobmod.papermodels import (ModelSpec, build_model_ideal, paper_points,
                                 certificate_matches_expected,
                                 expected_orbit_dimensions, dimension_chain,
                                 R22_CHAIN, R121_CHAIN, n_tilde_det)

QQ = FieldSpec.rationals()


def compositions(n):
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            prev, parts = 0, []
            for c in list(cuts) + [n]:
                parts.append(c - prev)
                prev = c
            yield tuple(parts)


def test_points_lie_on_the_models():
    for model, expected_count in (("R22", 13), ("R121", 12)):
        ideal = build_model_ideal(ModelSpec(model, QQ))
        points = paper_points(model)
        assert len(points) == expected_count
        labels = [label for label, _ in points]
        assert len(set(labels)) == expected_count
        assert set(labels) == set(expected_orbit_dimensions(model))
        for label, pt in points:
            for g in ideal.generators:
                assert g.evaluate(pt) == 0, (model, label, str(g))


def test_witness_tables():
    for name in ("R22", "S22", "R121", "S121"):
        ideal = build_model_ideal(ModelSpec(name, QQ))
        cert = verify_buchberger(ideal.generators)
        assert isinstance(cert, GroebnerCertificate)
        assert certificate_matches_expected(cert, ideal.ctx, name)
    # a tampered certificate is rejected
    ideal = build_model_ideal(ModelSpec("S22", QQ))
    cert = verify_buchberger(ideal.generators)
    bad = GroebnerCertificate(cert.generators,
                              {k: v for k, v in cert.entries.items()
                               if v != "coprime"})
    assert not certificate_matches_expected(bad, ideal.ctx, "S22")


def test_dimension_chains():
    r22 = build_model_ideal(ModelSpec("R22", QQ))
    assert dimension_chain(r22, R22_CHAIN) == [7, 6, 5, 4, 3, 2, 1, 0]
    r121 = build_model_ideal(ModelSpec("R121", QQ))
    assert dimension_chain(r121, R121_CHAIN) == [5, 4, 3, 2, 1, 0]


def test_n_tilde_det_is_a_unit_modulo_nothing():
    f7 = FieldSpec.prime_field(7)
    ideal = build_model_ideal(ModelSpec("N_tilde", f7, n=2, q=3))
    det = n_tilde_det(ideal, 2)
    gb = buchberger_complete(ideal.generators)
    assert not ideal_member(det, gb)


def test_eigenvalue_data_validation():
    EigenvalueData(7, 3, [("a", (2, 2))])
    EigenvalueData(7, 3, [(1, (1,)), (2, (1,))])
    with pytest.raises(RingError):
        EigenvalueData(7, 3, [])
    with pytest.raises(RingError):
        EigenvalueData(7, 2, [("a", (2, 2))])         # 2^3 = 1 mod 7
    with pytest.raises(RingError):
        EigenvalueData(7, 3, [("a", (1,)), ("a", (1,))])
    with pytest.raises(RingError):
        EigenvalueData(7, 3, [(1, (1,)), (3, (1,))])  # 3 = 1 * q
    with pytest.raises(RingError):
        EigenvalueData(7, 3, [("a", (0, 2))])


def test_classifier_table():
    trivial = JordanType((1, 1, 1, 1))
    two_two = JordanType((2, 2))

    def single(shape, sigma, inertial):
        return classify_banal_local_ring(
            EigenvalueData(7, 3, [("l", shape)]), [sigma], inertial)

    r = single((2, 2), trivial, two_two)
    assert (r.case, r.power_series_vars) == ("R22_hat", 9)
    r = single((1, 2, 1), trivial, two_two)
    assert (r.case, r.power_series_vars) == ("R121_hat", 11)
    r = single((2, 2), JordanType((2, 1, 1)), two_two)
    assert (r.case, r.power_series_vars) == ("formally_smooth", 16)
    r = single((1, 1, 1, 1), trivial, trivial)
    assert (r.case, r.power_series_vars) == ("formally_smooth", 16)
    r = single((1, 1, 1, 1), JordanType((2, 1, 1)), trivial)
    assert (r.case, r.power_series_vars) == ("zero", 0)
    r = single((2, 2), trivial, JordanType((4,)))
    assert (r.case, r.power_series_vars) == ("zero", 0)
    r = single((1, 1, 1, 1), trivial, JordanType((4,)))
    assert (r.case, r.power_series_vars) == ("formally_smooth", 16)
    r = single((2, 1, 1), trivial, two_two)
    assert (r.case, r.power_series_vars) == ("zero", 0)
    # multi-chain: (3,1) split across chains of sizes 3 and 1
    r = classify_banal_local_ring(
        EigenvalueData(7, 3, [("a", (1, 1, 1)), ("b", (1,))]),
        [JordanType((1, 1, 1)), JordanType((1,))], JordanType((3, 1)))
    assert (r.case, r.power_series_vars) == ("formally_smooth", 16)
    r = classify_banal_local_ring(
        EigenvalueData(7, 3, [("a", (3,)), ("b", (1,))]),
        [JordanType((1, 1, 1)), JordanType((1,))], JordanType((2, 2)))
    assert (r.case, r.power_series_vars) == ("zero", 0)


def test_classifier_base_count_all_shapes():
    trivial = JordanType((1, 1, 1, 1))
    for shape in compositions(4):
        r = classify_banal_local_ring(
            EigenvalueData(7, 3, [("l", shape)]), [trivial],
            JordanType((2, 2)))
        base = 16 - sum(v * v for v in shape)
        if r.case in ("R22_hat", "R121_hat"):
            assert r.power_series_vars == base + 1
        elif r.case == "formally_smooth":
            assert r.power_series_vars == 16
        else:
            assert r.power_series_vars == 0


def test_classifier_other_n():
    r = classify_banal_local_ring(
        EigenvalueData(7, 3, [("a", (1, 1))]), [JordanType((1, 1))],
        JordanType((2,)))
    assert r.case is None and r.power_series_vars == 2


def test_classifier_argument_errors():
    data = EigenvalueData(7, 3, [("l", (2, 2))])
    with pytest.raises(RingError):
        classify_banal_local_ring(data, [], JordanType((2, 2)))
    with pytest.raises(RingError):
        classify_banal_local_ring(data, [JordanType((2, 1))],
                                  JordanType((2, 2)))
    with pytest.raises(RingError):
        classify_banal_local_ring(data, [JordanType((1, 1, 1, 1))],
                                  JordanType((3,)))


def test_suite_all_pass_and_field_independent():
    reports = [run_paper_suite(field)
               for field in (QQ, FieldSpec.prime_field(5))]
    for rep in reports:
        assert rep["all_pass"]
        for item in rep["items"]:
            assert item["status"] == "pass", item
    # coefficient rendering differs per field (-1 prints as 4 over F5), so
    # only numeric/boolean outcomes are compared across fields
    def comparable(rep):
        out = []
        for i in rep["items"]:
            v = i["value"]
            if isinstance(v, (bool, int)) or (
                    isinstance(v, list) and all(isinstance(x, int)
                                                for x in v)):
                out.append((i["name"], i["status"], v))
            else:
                out.append((i["name"], i["status"]))
        return out

    assert comparable(reports[0]) == comparable(reports[1])
