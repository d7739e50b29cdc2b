"""Verification engine: evaluate either side of a case and compare.

The engine owns the e^{-pt} kernel for Laplace pairs: case integrands
never include it, so the same closure serves every p on a grid.  For
semi-infinite supports the kernel's decay is added to the piece's own
decay rate so the marching quadrature knows where the mass dies.
"""

from __future__ import annotations

import math
import time
from dataclasses import replace

import numpy as np

from .._exceptions import InvalidParams, NonConvergence
from ..quad import integrate_finite, integrate_semi_infinite
from .cases import REGISTRY, registry_order
from .model import IdentityCase, ParamPoint, PointRecord, VerificationReport

__all__ = [
    "get_case",
    "list_cases",
    "eval_lhs",
    "eval_rhs",
    "evaluate_point",
    "verify",
    "build_report",
    "reduction_suite",
]

_FLOOR = 1e-300


def get_case(case_id: str) -> IdentityCase:
    try:
        return REGISTRY[case_id]
    except KeyError:
        raise InvalidParams(f"unknown case id: {case_id!r}") from None


def list_cases():
    """All cases as (id, kind, label, default_tol), stable order."""
    return [(c.id, c.kind, c.label, c.tol) for c in REGISTRY.values()]


def _check(case: IdentityCase, params: ParamPoint):
    reason = case.validity(params)
    if reason is not None:
        raise InvalidParams(f"{case.id}: {reason}")


def eval_lhs(case_id: str, params: ParamPoint) -> complex:
    """Closed-form side of the identity at one parameter point."""
    case = get_case(case_id)
    _check(case, params)
    return complex(case.image(params, params.p))


def _rhs_detail(case: IdentityCase, params: ParamPoint, rel_tol=None):
    """Integral side with bookkeeping.

    Returns (value, evaluations, converged, error_estimate); the
    estimate is the sum of the per-piece quadrature estimates.
    """
    if case.closed_rhs is not None:
        return complex(case.closed_rhs(params, params.p)), 0, True, 0.0

    p = params.p
    total = 0.0 + 0.0j
    evaluations = 0
    converged = True
    err_est = 0.0
    for piece in case.original(params):
        spec = piece.spec
        if rel_tol is not None:
            spec = replace(spec, rel_tol=float(rel_tol))
        f = piece.integrand
        if case.kind == "laplace_pair":
            def g(t, d_lo, d_hi, _f=f):
                return np.exp(-p * t) * _f(t, d_lo, d_hi)
            if math.isinf(spec.upper):
                spec = replace(spec, decay_rate=spec.decay_rate + p)
        else:
            g = f
        try:
            if math.isinf(spec.upper):
                res = integrate_semi_infinite(g, spec, distance_form=True)
            else:
                res = integrate_finite(g, spec, distance_form=True)
        except NonConvergence as exc:
            res = exc.result
            converged = False
        total += res.value
        evaluations += res.evaluations
        err_est += res.error_estimate
    return complex(total), evaluations, converged, err_est


def eval_rhs(case_id: str, params: ParamPoint, rel_tol=None) -> complex:
    """Integral side of the identity at one parameter point."""
    case = get_case(case_id)
    _check(case, params)
    return _rhs_detail(case, params, rel_tol=rel_tol)[0]


def _rel_error(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _FLOOR)


def evaluate_point(case_id: str, params: ParamPoint) -> PointRecord:
    """One grid point end to end.

    Module-level on purpose: worker processes receive (case_id, params)
    and re-resolve the case from their own import-time registry, since
    the integrand closures themselves do not pickle.
    """
    case = get_case(case_id)
    _check(case, params)
    lhs = complex(case.image(params, params.p))
    rhs, evaluations, converged, _ = _rhs_detail(case, params)
    return PointRecord(
        params=params,
        lhs=lhs,
        rhs=rhs,
        rel_error=_rel_error(lhs, rhs),
        evaluations=evaluations,
        converged=converged,
    )


def build_report(case_id: str, records, tol=None, wall_time=0.0) -> VerificationReport:
    """Assemble a report from already-computed point records."""
    case = get_case(case_id)
    tol = case.tol if tol is None else float(tol)
    records = tuple(records)
    if not records:
        return VerificationReport(
            id=case.id, kind=case.kind, records=records,
            max_rel_error=math.nan, tol=tol, verdict="skipped",
            evaluations=0, wall_time=wall_time,
        )
    max_rel = max(r.rel_error for r in records)
    ok = max_rel <= tol and all(r.converged for r in records)
    return VerificationReport(
        id=case.id, kind=case.kind, records=records,
        max_rel_error=max_rel, tol=tol,
        verdict="pass" if ok else "fail",
        evaluations=sum(r.evaluations for r in records),
        wall_time=wall_time,
    )


def verify(case_id: str, grid=None, tol=None) -> VerificationReport:
    """Run a case over a grid (its default when grid is None)."""
    case = get_case(case_id)
    points = case.default_grid if grid is None else tuple(grid)
    start = time.perf_counter()
    records = [evaluate_point(case.id, pt) for pt in points]
    wall = time.perf_counter() - start
    return build_report(case.id, records, tol=tol, wall_time=wall)


def reduction_suite():
    """Verify every reduction case; the closed-vs-closed sanity layer."""
    return [verify(cid) for cid in registry_order()
            if REGISTRY[cid].kind == "reduction"]
