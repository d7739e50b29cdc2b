"""Catalog invariants: registry shape, cross-case algebra, quadrature
error honesty, and the negative controls.

The full grid battery lives in test_acceptance; here each check touches
the fewest points that can falsify the property.
"""

import math

import pytest

from lapcyl import InvalidParams
from lapcyl.catalog import (
    IdentityCase,
    ParamPoint,
    eval_lhs,
    eval_rhs,
    evaluate_point,
    get_case,
    list_cases,
    reduction_suite,
    verify,
)
from lapcyl.catalog.cases import REGISTRY
from lapcyl.catalog.engine import _rhs_detail

EXPECTED_IDS = [
    "ILT-PCF-BLOCK", "ILT-PCF-BLOCK2", "ILT-KUM-BLOCK", "ILT-KUM-BLOCK-32",
    "ILT-KUM-BLOCK-12", "T31-DIFF-HALF", "T31-KUMMER", "T32-DIFF",
    "C321-ERF-MIX", "C321-REP", "T33-SUM-HALF", "T33-KUMMER",
    "T34-NEG-HALF", "C341-SINGLE", "T35-POS-HALF", "T36-POS",
    "C361-ERFC2", "C361-REP", "C361-ERFC-SINGLE", "C361-ONE-MINUS",
    "C361-NG69", "T41-CORRECTED", "NEG-T41", "T42-CORRECTED", "NEG-T42",
    "S51-INT", "S52-INT", "RED-SUM-DIFF", "RED-SUM-ADD", "RED-RECURRENCE",
    "RED-2F1-EULER", "RED-2F1-PFAFF", "RED-2F1-CONNECT", "RED-2F1-QUAD22",
    "RED-2F1-CONTIG", "RED-APPELL", "RED-GAUSS-SUM", "RED-ERFC-REFLECT",
]


class TestRegistry:
    def test_listing_is_complete_and_ordered(self):
        rows = list_cases()
        assert [r[0] for r in rows] == EXPECTED_IDS
        assert len(rows) >= 20

    def test_listing_is_stable(self):
        assert list_cases() == list_cases()

    def test_rows_are_full_tuples(self):
        for cid, kind, label, tol in list_cases():
            assert kind in ("laplace_pair", "direct_integral", "reduction")
            assert isinstance(label, str) and label
            assert 0.0 < tol <= 1e-8

    def test_default_tols_by_kind(self):
        for cid, kind, _, tol in list_cases():
            if cid.startswith("ILT-"):
                assert tol == 1e-9
            elif cid == "C361-NG69":
                assert tol == 1e-10
            elif kind == "reduction":
                assert tol == 1e-10

    def test_unknown_id_rejected(self):
        with pytest.raises(InvalidParams):
            get_case("NO-SUCH-CASE")
        with pytest.raises(InvalidParams):
            verify("NO-SUCH-CASE")

    def test_grids_satisfy_their_own_validity(self):
        for case in REGISTRY.values():
            for pt in case.default_grid:
                assert case.validity(pt) is None, (case.id, pt)

    def test_pinned_grid_size(self):
        # the difference-product case documents a 108-point default grid
        assert len(get_case("T31-DIFF-HALF").default_grid) == 108

    def test_every_laplace_case_min_points(self):
        for case in REGISTRY.values():
            if case.kind == "laplace_pair":
                assert len(case.default_grid) >= 24, case.id


class TestValidity:
    def test_out_of_range_order_rejected(self):
        pt = ParamPoint(orders=(0.5, 1.5), x=1.0, y=1.0, p=1.0)
        with pytest.raises(InvalidParams, match="T31-DIFF-HALF"):
            eval_lhs("T31-DIFF-HALF", pt)

    def test_half_kind_kummer_window(self):
        pt = ParamPoint(orders=(0.5,), x=1.0, y=1.0, p=1.0)
        with pytest.raises(InvalidParams, match="-1 < nu < 0"):
            eval_rhs("ILT-KUM-BLOCK-12", pt)

    def test_empty_grid_is_skipped(self):
        rep = verify("RED-ERFC-REFLECT", grid=())
        assert rep.verdict == "skipped"
        assert math.isnan(rep.max_rel_error)
        assert rep.evaluations == 0


class TestModelValidation:
    def _mk(self, **kw):
        base = dict(
            id="X", kind="laplace_pair", label="x",
            image=lambda pt, p: 1.0, validity=lambda pt: None,
            default_grid=(), tol=1e-8,
            original=lambda pt: (),
        )
        base.update(kw)
        return IdentityCase(**base)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            self._mk(kind="bogus")

    def test_exactly_one_rhs_required(self):
        with pytest.raises(ValueError):
            self._mk(original=None)
        with pytest.raises(ValueError):
            self._mk(closed_rhs=lambda pt, p: 1.0)


class TestImageAlgebra:
    """Cross-case identities among the closed forms, no quadrature."""

    def test_difference_sum_single_chain(self):
        # the single-product image is the mean of the difference image
        # and the sum image, point by point
        case34 = get_case("T34-NEG-HALF")
        for pt in case34.default_grid:
            v31 = eval_lhs("T31-DIFF-HALF", pt)
            v33 = eval_lhs("T33-SUM-HALF", pt)
            v34 = eval_lhs("T34-NEG-HALF", pt)
            scale = max(abs(v31), abs(v33), abs(v34), 1e-300)
            assert abs(v34 - 0.5 * (v31 + v33)) <= 1e-12 * scale

    @pytest.mark.parametrize("cid", ["T35-POS-HALF", "T36-POS"])
    def test_positive_product_images_are_symmetric(self, cid):
        case = get_case(cid)
        for pt in case.default_grid:
            swapped = ParamPoint(orders=(pt.nu, pt.mu), x=pt.y, y=pt.x, p=pt.p)
            v = eval_lhs(cid, pt)
            w = eval_lhs(cid, swapped)
            assert abs(v - w) <= 1e-12 * max(abs(v), abs(w), 1e-300)


class TestQuadratureHonesty:
    """Tightening rel_tol by two decades moves the answer by less than
    the error estimate reported at the base tolerance."""

    @pytest.mark.parametrize(
        "cid",
        [r[0] for r in list_cases() if r[1] == "laplace_pair"],
    )
    def test_doubling_precision_within_estimate(self, cid):
        case = get_case(cid)
        pt = case.default_grid[len(case.default_grid) // 2]
        v1, _, conv1, est1 = _rhs_detail(case, pt)
        v2, _, conv2, _ = _rhs_detail(case, pt, rel_tol=1e-13)
        assert conv1 and conv2
        assert est1 > 0.0
        assert abs(v1 - v2) <= est1


class TestNegativeControls:
    @pytest.mark.parametrize("neg, pos", [
        ("NEG-T41", "T41-CORRECTED"),
        ("NEG-T42", "T42-CORRECTED"),
    ])
    def test_wrong_forms_fail_loudly(self, neg, pos):
        bad = verify(neg)
        good = verify(pos)
        assert good.verdict == "pass"
        assert bad.verdict == "fail"
        assert bad.max_rel_error >= 1e-2
        # discrimination: at least three orders between the two worlds
        assert bad.max_rel_error >= 1e3 * good.max_rel_error

    def test_controls_are_flagged(self):
        for case in REGISTRY.values():
            assert case.negative_control == case.id.startswith("NEG-")


class TestSpotChecks:
    @pytest.mark.parametrize("cid", [
        "ILT-PCF-BLOCK", "ILT-KUM-BLOCK-12", "C321-REP", "C361-NG69",
    ])
    def test_light_cases_pass(self, cid):
        rep = verify(cid)
        assert rep.verdict == "pass"
        assert rep.max_rel_error <= rep.tol

    def test_reduction_suite_all_pass(self):
        reports = reduction_suite()
        assert [r.id for r in reports] == [
            cid for cid, kind, _, _ in list_cases() if kind == "reduction"
        ]
        assert all(r.verdict == "pass" for r in reports)

    def test_point_record_fields(self):
        pt = get_case("C361-ERFC-SINGLE").default_grid[0]
        rec = evaluate_point("C361-ERFC-SINGLE", pt)
        assert rec.converged
        expect = abs(rec.lhs - rec.rhs) / max(abs(rec.lhs), abs(rec.rhs), 1e-300)
        assert rec.rel_error == expect
        assert rec.evaluations > 0

    def test_eval_sides_agree(self):
        pt = get_case("C361-ERFC-SINGLE").default_grid[1]
        lhs = eval_lhs("C361-ERFC-SINGLE", pt)
        rhs = eval_rhs("C361-ERFC-SINGLE", pt)
        assert abs(lhs - rhs) <= 1e-9 * abs(lhs)
