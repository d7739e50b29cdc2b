"""Catalog of certified identities and the engine that checks them."""

from .engine import (
    build_report,
    eval_lhs,
    eval_rhs,
    evaluate_point,
    get_case,
    list_cases,
    reduction_suite,
    verify,
)
from .model import IdentityCase, ParamPoint, Piece, PointRecord, VerificationReport

__all__ = [
    "IdentityCase",
    "ParamPoint",
    "Piece",
    "PointRecord",
    "VerificationReport",
    "build_report",
    "eval_lhs",
    "eval_rhs",
    "evaluate_point",
    "get_case",
    "list_cases",
    "reduction_suite",
    "verify",
]
