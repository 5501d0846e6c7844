"""Acceptance gate: one pass/fail line per criterion."""

import itertools
import json
import random

from fractions import Fraction

import pytest

from grobmod import (FieldSpec, RingContext, Ideal, GroebnerCertificate,
                     verify_buchberger, buchberger_complete, initial_ideal,
                     krull_dimension, artinian_analysis,
                     minimal_generator_count, intersect_ideals, ideal_member,
                     localized_dimension, jacobian_rank_at,
                     orbit_dimension_at, is_banal, matrix_log, matrix_exp,
                     ExactMatrix, enumerate_strata, stratum_type, count_type,
                     delta_invariant, eta_jordan_type, orbit_census,
                     JordanType, run_paper_suite, classify_banal_local_ring,
                     EigenvalueData, char_poly)
from grobmod.strata import representative_point, eta_matrix
from grobmod.papermodels import (ModelSpec, build_model_ideal, paper_points,
                                 certificate_matches_expected, r22_action,
                                 r121_action, expected_orbit_dimensions,
                                 dimension_chain, R22_CHAIN, R121_CHAIN,
                                 n_tilde_det)

FIELDS = [FieldSpec.rationals(), FieldSpec.prime_field(5),
          FieldSpec.prime_field(7), FieldSpec.prime_field(101)]


def report(num, label, ok):
    print("\n[criterion %02d] %s: %s" % (num, label, "PASS" if ok else "FAIL"))
    assert ok, "criterion %d (%s) failed" % (num, label)


def compositions(n):
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            prev, parts = 0, []
            for c in list(cuts) + [n]:
                parts.append(c - prev)
                prev = c
            yield tuple(parts)


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def test_criterion_01_buchberger_certificates():
    ok = True
    for field in FIELDS:
        for name in ("R22", "S22", "R121", "S121"):
            ideal = build_model_ideal(ModelSpec(name, field))
            cert = verify_buchberger(ideal.generators)
            ok &= isinstance(cert, GroebnerCertificate)
            ok &= ok and certificate_matches_expected(cert, ideal.ctx, name)
    report(1, "printed bases verified with exact witness quotients", ok)


def test_criterion_02_dimension_chains():
    ok = True
    for field in (FieldSpec.rationals(), FieldSpec.prime_field(7)):
        r22 = build_model_ideal(ModelSpec("R22", field))
        r121 = build_model_ideal(ModelSpec("R121", field))
        ok &= dimension_chain(r22, R22_CHAIN) == [7, 6, 5, 4, 3, 2, 1, 0]
        ok &= dimension_chain(r121, R121_CHAIN) == [5, 4, 3, 2, 1, 0]
    report(2, "regular-sequence chains drop dimension in unit steps", ok)


def test_criterion_03_artinian_endpoints():
    field = FieldSpec.rationals()
    final22 = build_model_ideal(ModelSpec("R22_final", field))
    rep22 = artinian_analysis(buchberger_complete(final22.generators))
    ok = rep22.vector_space_dimension == 5 and rep22.socle_dimension == 1
    ok &= rep22.is_gorenstein()
    final121 = build_model_ideal(ModelSpec("R121_final", field))
    rep121 = artinian_analysis(buchberger_complete(final121.generators))
    ok &= rep121.vector_space_dimension == 4
    ok &= rep121.socle_dimension == 3
    degrees = sorted(m.degree for m in rep121.standard_monomials)
    ok &= degrees == [0, 1, 1, 1]
    count = minimal_generator_count(final22.generators)
    ok &= count == 5 and count > 3
    report(3, "Artinian endpoints: dims 5/4, socles 1/3, 5 generators", ok)


def test_criterion_04_intersection_lemma():
    ok = True
    for field in (FieldSpec.rationals(), FieldSpec.prime_field(7)):
        r121 = build_model_ideal(ModelSpec("R121", field))
        ctx = r121.ctx
        g = r121.generators
        I = Ideal(ctx, g[2:5] + [ctx.var("A"), ctx.var("B")])
        J = Ideal(ctx, g[:2] + [g[4], ctx.var("C"), ctx.var("D")])
        inter = intersect_ideals(I, J)
        target = buchberger_complete(
            g[:5] + [ctx.parse(s) for s in ("A*C", "A*D", "B*C", "B*D")])
        ok &= [str(e) for e in inter.elements] == \
              [str(e) for e in target.elements]
    report(4, "intersection equals the product-augmented ideal", ok)


def test_criterion_05_jacobian_ranks():
    ok = True
    for model in ("R22", "R121"):
        ideal = build_model_ideal(ModelSpec(model, FieldSpec.rationals()))
        for label, pt in paper_points(model):
            rank = jacobian_rank_at(ideal.generators, pt)
            ok &= rank == (0 if label == "z_00" else 3)
    report(5, "Jacobian rank 3 at all non-origin points, 0 at origins", ok)


def test_criterion_06_orbit_dimensions():
    ok = True
    for model, action in (("R22", r22_action()), ("R121", r121_action())):
        expected = expected_orbit_dimensions(model)
        for label, pt in paper_points(model):
            ok &= orbit_dimension_at(action, pt) == expected[label]
    report(6, "orbit-dimension tables reproduced over the rationals", ok)


def test_criterion_07_strata_suite():
    ok = len(enumerate_strata((1, 2, 1))) == 5
    ok &= sorted(str(P) for P in enumerate_strata((2, 2))
                 if stratum_type(P) == JordanType((2, 2))) == ["(2)"]
    ok &= sorted(str(P) for P in enumerate_strata((1, 2, 1))
                 if stratum_type(P) == JordanType((2, 2))) == ["(1,1;0)"]
    ok &= count_type((1, 1, 2), (2, 2)) == 0
    ok &= count_type((2, 1, 1), (2, 2)) == 0
    for n in range(1, 7):
        ones = (1,) * n
        ok &= len(enumerate_strata(ones)) == 2 ** (n - 1)
        # count_type internally asserts the multinomial closed form
        total = sum(count_type(ones, m) for m in partitions(n))
        ok &= total == 2 ** (n - 1)
    for n in range(1, 6):
        for shape in compositions(n):
            count = count_type(shape, (n,))
            ok &= count == (1 if shape == (1,) * n else 0)
    report(7, "stratum index sets, counts and closed forms", ok)


def test_criterion_08_orbit_census():
    f7 = FieldSpec.prime_field(7)
    t_to_n = {}
    ok = True
    for q in (2, 3):
        for n in range(1, 6):
            for shape in compositions(n):
                cells = sum(shape[i] * shape[i + 1]
                            for i in range(len(shape) - 1))
                if q ** cells > 10 ** 4:
                    continue
                census = orbit_census(shape, q)
                ok &= census["matches_delta"]
                ok &= census["orbit_count"] == len(enumerate_strata(shape))
                # every assembled eta is strongly nilpotent alongside the
                # banal grading matrix Phi = diag(q^{k-i} I_{n_i}), q=3, l=7
                if cells and q == 3 and n <= 4:
                    k = len(shape)
                    for code in range(q ** cells):
                        mats = _decode(code, shape, q)
                        eta = eta_matrix(mats, shape, f7)
                        key = (n, str(char_poly(eta)))
                        if key not in t_to_n:
                            t_to_n[key] = True
                            ok &= str(char_poly(eta)) == "t^%d" % n
                        phi = _grading_phi(shape, 3, f7)
                        ok &= phi * eta == (eta * phi) * 3
    ok &= is_banal(3, 7, 5)
    report(8, "orbit censuses match rank-invariant fibers; eta nilpotent", ok)


def _decode(code, shape, q):
    mats = []
    for i in range(len(shape) - 1):
        rows = []
        for _ in range(shape[i]):
            row = []
            for _ in range(shape[i + 1]):
                row.append(code % q)
                code //= q
            rows.append(row)
        mats.append(rows)
    return mats


def _grading_phi(shape, q, field):
    n = sum(shape)
    k = len(shape)
    diag = []
    for i, ni in enumerate(shape):
        diag += [pow(q, k - 1 - i)] * ni
    return ExactMatrix(field, [[diag[i] if i == j else 0 for j in range(n)]
                               for i in range(n)])


def test_criterion_09_log_exp_suite():
    fields = [FieldSpec.rationals(), FieldSpec.prime_field(5),
              FieldSpec.prime_field(7), FieldSpec.prime_field(11)]
    rng = random.Random(11)
    ok = True
    for trial in range(300):
        field = fields[trial % 4]
        n = 2 + trial % 3
        entries = [[field.coerce(rng.randrange(-3, 4)) if j > i
                    else (field.one() if i == j else field.zero())
                    for j in range(n)] for i in range(n)]
        U = ExactMatrix(field, entries)
        L = matrix_log(U)
        ok &= matrix_exp(L) == U
        ok &= matrix_log(matrix_exp(L)) == L
        m = 1 + trial % 4
        ok &= matrix_log(U.power(m)) == L * m
    report(9, "exp/log inverse pair and log(U^m) = m log(U), 300 trials", ok)


def test_criterion_10_localized_dimensions():
    f7 = FieldSpec.prime_field(7)
    r121 = build_model_ideal(ModelSpec("R121", FieldSpec.rationals()))
    ctx = r121.ctx
    ok = localized_dimension(r121, ctx.var("A")) == 5
    gb = buchberger_complete(r121.generators)
    for text in ("A*X - A*R + B*Z", "A*Y - B*R - B*X", "A*C + B*D"):
        ok &= ideal_member(ctx.parse(text), gb)
    ntilde = build_model_ideal(ModelSpec("N_tilde", f7, n=2, q=3))
    ok &= localized_dimension(ntilde, n_tilde_det(ntilde, 2)) == 4
    report(10, "localized dimensions 5 and 4 with membership witnesses", ok)


def test_criterion_11_classifier():
    trivial = JordanType((1, 1, 1, 1))
    r = classify_banal_local_ring(
        EigenvalueData(7, 3, [("l", (2, 2))]), [trivial], JordanType((2, 2)))
    ok = (r.case, r.power_series_vars) == ("R22_hat", 9)
    r = classify_banal_local_ring(
        EigenvalueData(7, 3, [("l", (1, 2, 1))]), [trivial],
        JordanType((2, 2)))
    ok &= (r.case, r.power_series_vars) == ("R121_hat", 11)
    r = classify_banal_local_ring(
        EigenvalueData(7, 3, [("l", (1, 1, 1, 1))]), [trivial], trivial)
    ok &= (r.case, r.power_series_vars) == ("formally_smooth", 16)
    ok &= not is_banal(2, 7, 4)
    ok &= is_banal(3, 7, 4)
    report(11, "classifier counts 16/9/11 and banality checks", ok)


def test_criterion_12_determinism():
    rng = random.Random(3)
    ok = True
    for name in ("R22", "S22", "R121", "S121"):
        ideal = build_model_ideal(ModelSpec(name, FieldSpec.rationals()))
        base = [str(g) for g in
                buchberger_complete(ideal.generators).elements]
        for _ in range(20):
            gens = list(ideal.generators)
            rng.shuffle(gens)
            ok &= [str(g) for g in
                   buchberger_complete(gens).elements] == base
    rep1 = run_paper_suite(FieldSpec.prime_field(7))
    rep2 = run_paper_suite(FieldSpec.prime_field(7))
    rep1.pop("timing")
    rep2.pop("timing")
    ok &= json.dumps(rep1, default=str) == json.dumps(rep2, default=str)
    report(12, "shuffle-invariant completion and byte-stable reports", ok)
