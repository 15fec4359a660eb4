"""Satellite Alexander polynomials, coefficient admissibility, and the
winding-number obstruction, cross-checked against dense-list oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotpoly.laurent import LaurentPoly
from knotpoly.satellite import (
    PredictionMismatch,
    SatelliteSpec,
    lspace_admissible,
    satellite_alexander,
    satellite_genus,
    torus_satellite_obstruction,
    winding_violation,
)
from knotpoly.torusknot import TorusKnotSpec, alexander, genus

import oracles

TREFOIL = alexander(TorusKnotSpec(3, 2))


def torus_poly(p, q):
    return alexander(TorusKnotSpec(p, q))


class TestSatelliteSpec:
    def test_defaults_genus_from_top_exponent(self):
        s = SatelliteSpec(torus_poly(7, 2), TREFOIL, winding=3)
        assert s.pattern_genus == 3 and s.companion_genus == 1

    def test_rejects_genus_mismatch(self):
        with pytest.raises(ValueError):
            SatelliteSpec(TREFOIL, TREFOIL, winding=1, pattern_genus=2)

    def test_rejects_zero_winding(self):
        with pytest.raises(ValueError):
            SatelliteSpec(TREFOIL, TREFOIL, winding=0)

    def test_rejects_unsymmetrized_pattern(self):
        with pytest.raises(ValueError):
            SatelliteSpec(LaurentPoly({2: 1, 0: -1}), TREFOIL, winding=1)

    def test_rejects_negative_normalization(self):
        with pytest.raises(ValueError):
            SatelliteSpec(-TREFOIL, TREFOIL, winding=1)

    def test_unknot_companion_allowed(self):
        s = SatelliteSpec(TREFOIL, LaurentPoly({0: 1}), winding=5)
        assert s.companion_genus == 0


class TestSatelliteAlexander:
    def test_square_of_trefoil(self):
        s = SatelliteSpec(TREFOIL, TREFOIL, winding=1)
        assert satellite_alexander(s).as_dict() == {2: 1, 1: -2, 0: 3, -1: -2, -2: 1}

    def test_unknot_companion_is_identity(self):
        s = SatelliteSpec(TREFOIL, LaurentPoly({0: 1}), winding=2)
        assert satellite_alexander(s) == TREFOIL

    def test_winding_three_golden(self):
        s = SatelliteSpec(torus_poly(7, 2), TREFOIL, winding=3)
        assert satellite_alexander(s).coefficient(3) == -2

    def test_genus_additivity(self):
        for (p, q), (cp, cq), w in [
            ((3, 2), (3, 2), 2),
            ((5, 2), (4, 3), 3),
            ((7, 3), (5, 2), 1),
        ]:
            s = SatelliteSpec(torus_poly(p, q), torus_poly(cp, cq), winding=w)
            f = satellite_alexander(s)
            g = satellite_genus(s)
            assert g == genus(TorusKnotSpec(p, q)) + w * genus(TorusKnotSpec(cp, cq))
            assert f.span() == (-g, g)

    def test_value_at_one_multiplicative(self):
        s = SatelliteSpec(torus_poly(5, 3), torus_poly(5, 2), winding=4)
        f = satellite_alexander(s)
        assert sum(c for _, c in f.items()) == 1

    @given(
        st.sampled_from([(3, 2), (5, 2), (4, 3), (7, 2), (5, 3)]),
        st.sampled_from([(3, 2), (5, 2), (4, 3)]),
        st.integers(min_value=1, max_value=5),
    )
    @settings(max_examples=40)
    def test_matches_dense_oracle(self, pat, comp, w):
        s = SatelliteSpec(torus_poly(*pat), torus_poly(*comp), winding=w)
        expected = oracles.mul_dicts(
            oracles.torus_alexander_oracle(*pat),
            oracles.dilate_dict(oracles.torus_alexander_oracle(*comp), w),
        )
        assert satellite_alexander(s).as_dict() == expected


class TestAdmissibility:
    def test_trefoil_admissible(self):
        rep = lspace_admissible(TREFOIL)
        assert rep.ok and rep.verdict == "admissible"
        assert rep.witness_exponent is None

    def test_all_torus_knots_admissible(self):
        from math import gcd

        for p in range(3, 16):
            for q in range(2, p):
                if gcd(p, q) == 1:
                    assert lspace_admissible(torus_poly(p, q)).ok, (p, q)

    def test_square_fails_magnitude(self):
        rep = lspace_admissible(TREFOIL * TREFOIL)
        assert rep.verdict == "fails_magnitude"
        assert rep.witness_exponent == 1
        assert rep.witness_coefficients == ((1, -2),)

    def test_positional_scan_order(self):
        # same-sign pair at (5,4) sits above the magnitude hit at 3, so the
        # scan must report alternation first
        f = torus_poly(5, 3) * TREFOIL.dilate(2)
        rep = lspace_admissible(f)
        assert rep.verdict == "fails_alternation"
        assert rep.witness_exponent == 5
        assert rep.witness_coefficients == ((5, -1), (4, -1))

    def test_fails_top_two(self):
        f = LaurentPoly({2: 1, 0: -1, -2: 1})
        rep = lspace_admissible(f)
        assert rep.verdict == "fails_top_two"
        assert rep.witness_coefficients == ((2, 1), (1, 0))

    def test_same_sign_top_pair(self):
        f = LaurentPoly({1: 1, 0: 1, -1: 1})
        assert lspace_admissible(f).verdict == "fails_alternation"

    def test_constant_one_admissible(self):
        assert lspace_admissible(LaurentPoly({0: 1})).ok

    def test_rejects_unsymmetrized(self):
        with pytest.raises(ValueError):
            lspace_admissible(LaurentPoly({1: 1}))
        with pytest.raises(ValueError):
            lspace_admissible(LaurentPoly({}))

    @given(
        st.dictionaries(
            st.integers(min_value=0, max_value=6),
            st.integers(min_value=-3, max_value=3),
            max_size=7,
        )
    )
    @settings(max_examples=300)
    def test_verdict_matches_boolean_oracle(self, half):
        # build a symmetric polynomial from a random positive half
        coeffs = dict(half)
        for e, c in half.items():
            if e > 0:
                coeffs[-e] = c
        coeffs = {e: c for e, c in coeffs.items() if c}
        if not coeffs or sum(coeffs.values()) <= 0:
            return
        f = LaurentPoly(coeffs)
        assert lspace_admissible(f).ok == oracles.admissible_bool(coeffs)


class TestWindingViolation:
    def test_magnitude_case_golden(self):
        v = winding_violation(7, 2, 3, TREFOIL)
        assert v.kind == "magnitude_violation"
        assert v.exponent == 3
        assert v.coefficient == -2

    def test_same_sign_case_golden(self):
        v = winding_violation(5, 3, 2, TREFOIL)
        assert v.kind == "same_sign_violation"
        assert v.exponent_pair == (5, 4)
        assert v.coefficients == (-1, -1)

    def test_multiple_of_b_no_violation(self):
        assert winding_violation(7, 2, 2, TREFOIL).kind == "no_violation"
        assert winding_violation(5, 2, 4, TREFOIL).kind == "no_violation"
        assert winding_violation(7, 3, 3, TREFOIL).kind == "no_violation"

    def test_w_equals_one(self):
        v = winding_violation(3, 2, 1, TREFOIL)
        assert v.kind == "magnitude_violation"
        assert v.exponent == genus(TorusKnotSpec(3, 2)) + 1 - 1

    def test_witness_against_dense_product(self):
        # witness values must be actual coefficients of the product
        for a, b, w, comp in [
            (7, 2, 3, (3, 2)),
            (5, 3, 2, (3, 2)),
            (9, 2, 5, (5, 2)),
            (8, 3, 4, (4, 3)),
            (11, 4, 2, (3, 2)),
        ]:
            v = winding_violation(a, b, w, torus_poly(*comp))
            product = oracles.mul_dicts(
                oracles.torus_alexander_oracle(a, b),
                oracles.dilate_dict(oracles.torus_alexander_oracle(*comp), w),
            )
            if v.kind == "magnitude_violation":
                assert product[v.exponent] == v.coefficient
                assert abs(v.coefficient) == 2
            else:
                e1, e2 = v.exponent_pair
                c1, c2 = v.coefficients
                assert product[e1] == c1 and product[e2] == c2
                assert c1 * c2 > 0
                assert all(product.get(e, 0) == 0 for e in range(e2 + 1, e1))

    @pytest.mark.parametrize(
        "a,b,w",
        [(2, 2, 1), (6, 3, 1), (3, 5, 1), (5, 2, 5), (5, 2, 0), (5, 2, -1)],
    )
    def test_rejects_bad_parameters(self, a, b, w):
        with pytest.raises(ValueError):
            winding_violation(a, b, w, TREFOIL)

    def test_rejects_inadmissible_companion(self):
        with pytest.raises(ValueError):
            winding_violation(5, 2, 2, TREFOIL * TREFOIL)

    def test_rejects_genus_zero_companion(self):
        with pytest.raises(ValueError):
            winding_violation(5, 2, 2, LaurentPoly({0: 1}))


class TestObstruction:
    def test_obstructed_goldens(self):
        r = torus_satellite_obstruction(3, 2, 1, TREFOIL)
        assert r.verdict == "obstructed"
        assert r.violation.kind == "magnitude_violation"

        r = torus_satellite_obstruction(8, 3, 2, TREFOIL)
        assert r.verdict == "obstructed"
        assert r.violation.kind == "same_sign_violation"

        r = torus_satellite_obstruction(9, 2, 3, TREFOIL)
        assert r.verdict == "obstructed"
        assert r.violation.kind == "magnitude_violation"

    def test_precondition_rejects(self):
        with pytest.raises(ValueError):
            torus_satellite_obstruction(7, 2, 3, TREFOIL)
        with pytest.raises(ValueError):
            torus_satellite_obstruction(5, 2, 2, TREFOIL)

    def test_full_sweep_never_not_obstructed(self):
        from math import gcd

        seen = 0
        for a in range(3, 16):
            for b in range(2, a):
                if gcd(a, b) != 1:
                    continue
                for w in range(1, a):
                    if (a * b) % (w * w):
                        continue
                    r = torus_satellite_obstruction(a, b, w, TREFOIL)
                    assert r.verdict == "obstructed", (a, b, w, r.verdict)
                    seen += 1
        assert seen > 20


class TestScanAgreement:
    def test_violation_class_matches_admissibility_scan(self):
        # the winding prediction and a cold admissibility scan of the
        # product must name the same failure
        from math import gcd

        for a in range(3, 12):
            for b in range(2, a):
                if gcd(a, b) != 1:
                    continue
                for w in range(1, a):
                    v = winding_violation(a, b, w, TREFOIL)
                    s = SatelliteSpec(torus_poly(a, b), TREFOIL, winding=w)
                    rep = lspace_admissible(satellite_alexander(s))
                    if v.kind == "no_violation":
                        assert rep.ok, (a, b, w)
                    elif v.kind == "magnitude_violation":
                        assert rep.verdict == "fails_magnitude", (a, b, w)
                        assert rep.witness_exponent == v.exponent
                    else:
                        assert rep.verdict == "fails_alternation", (a, b, w)
                        assert rep.witness_exponent == v.exponent_pair[0]

    def test_prediction_mismatch_is_exported(self):
        assert issubclass(PredictionMismatch, RuntimeError)
