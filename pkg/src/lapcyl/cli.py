"""Command line front end: list the catalog, verify cases, evaluate
special functions at a point.

Exit codes: 0 when every selected positive case passes and every
selected control fails as designed, 1 when verification disagrees with
that expectation, 2 for configuration errors (unknown ids, bad flags,
malformed grid files).  Reports are deterministic byte for byte across
runs; wall-clock timings go to a sidecar file, never into the report.
"""

from __future__ import annotations

import argparse
import csv
import fnmatch
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ._exceptions import InvalidParams
from .catalog import build_report, evaluate_point, get_case, list_cases, verify
from .catalog.cases import REGISTRY
from .catalog.model import ParamPoint
from .special import (
    appell_f1,
    erf,
    erfc,
    gamma,
    gauss_2f1,
    hyp_2f2,
    kummer_phi,
    pcf_d,
    reciprocal_gamma,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2

_FORMATS = ("json", "csv", "text")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Everything one `verify` invocation depends on."""

    patterns: tuple = ()
    select_all: bool = False
    tol: float | None = None
    grid_path: str | None = None
    fmt: str = "json"
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if not self.patterns and not self.select_all:
            raise ConfigError("select cases with --case or pass --all")
        if self.tol is not None and not self.tol > 0.0:
            raise ConfigError(f"--tol must be positive, got {self.tol}")
        if self.fmt not in _FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {self.jobs}")


def _select_cases(cfg: RunConfig):
    """Resolve patterns against the registry, keeping registry order."""
    ids = [row[0] for row in list_cases()]
    if cfg.select_all:
        return ids
    chosen = []
    for pat in cfg.patterns:
        hits = [cid for cid in ids if fnmatch.fnmatchcase(cid, pat)]
        if not hits:
            raise ConfigError(f"no case matches {pat!r}")
        for cid in hits:
            if cid not in chosen:
                chosen.append(cid)
    return sorted(chosen, key=ids.index)


def _load_grid(path):
    """Parse a grid override file: whitespace rows `id mu nu x y p`.

    Blank lines and # comments are skipped.  All rows for an id replace
    that case's default grid; cases not mentioned keep their defaults.
    """
    table: dict = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read grid file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 6:
            raise ConfigError(
                f"{path}:{lineno}: expected `id mu nu x y p`, got {len(tokens)} fields")
        cid = tokens[0]
        if cid not in REGISTRY:
            raise ConfigError(f"{path}:{lineno}: unknown case id {cid!r}")
        try:
            mu, nu, x, y, p = (float(tok) for tok in tokens[1:])
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: non-numeric parameter") from None
        table.setdefault(cid, []).append(
            ParamPoint(orders=(mu, nu), x=x, y=y, p=p))
    return {cid: tuple(pts) for cid, pts in table.items()}


def _check_points(case_ids, grids):
    """Reject invalid parameter points before any integral runs."""
    for cid in case_ids:
        case = get_case(cid)
        for pt in grids.get(cid, case.default_grid):
            reason = case.validity(pt)
            if reason is not None:
                raise ConfigError(f"invalid grid point for {cid}: {reason}")


def _eval_task(task):
    cid, pt = task
    return evaluate_point(cid, pt)


def _run_verify(cfg: RunConfig):
    """Returns (reports in registry order, total wall seconds)."""
    case_ids = _select_cases(cfg)
    grids = _load_grid(cfg.grid_path) if cfg.grid_path else {}
    _check_points(case_ids, grids)

    start = time.perf_counter()
    reports = []
    if cfg.jobs == 1:
        for cid in case_ids:
            reports.append(verify(cid, grid=grids.get(cid), tol=cfg.tol))
    else:
        tasks = []
        counts = []
        for cid in case_ids:
            pts = grids.get(cid, get_case(cid).default_grid)
            counts.append((cid, len(pts)))
            tasks.extend((cid, pt) for pt in pts)
        chunk = max(1, len(tasks) // (4 * cfg.jobs))
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_eval_task, tasks, chunksize=chunk))
        offset = 0
        for cid, n in counts:
            reports.append(build_report(cid, results[offset:offset + n], tol=cfg.tol))
            offset += n
    return reports, time.perf_counter() - start


def _point_rows(reports):
    for rep in reports:
        case = get_case(rep.id)
        for rec in rep.records:
            ok = rec.rel_error <= rep.tol and rec.converged
            yield case, rep, rec, "pass" if ok else "fail"


def _render_json(reports):
    rows = []
    for case, rep, rec, verdict in _point_rows(reports):
        rows.append({
            "id": case.id,
            "kind": case.kind,
            "params": {"mu": rec.params.mu, "nu": rec.params.nu,
                       "x": rec.params.x, "y": rec.params.y, "p": rec.params.p},
            "lhs": [rec.lhs.real, rec.lhs.imag],
            "rhs": [rec.rhs.real, rec.rhs.imag],
            "rel_error": rec.rel_error,
            "verdict": verdict,
            "evaluations": rec.evaluations,
            "wall_time_ms": None,
        })
    return json.dumps(rows, indent=2) + "\n"


def _render_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "kind", "mu", "nu", "x", "y", "p",
                     "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                     "rel_error", "verdict", "evaluations"])
    for case, rep, rec, verdict in _point_rows(reports):
        writer.writerow([case.id, case.kind,
                         rec.params.mu, rec.params.nu, rec.params.x,
                         rec.params.y, rec.params.p,
                         rec.lhs.real, rec.lhs.imag,
                         rec.rhs.real, rec.rhs.imag,
                         rec.rel_error, verdict, rec.evaluations])
    return buf.getvalue()


def _render_text(reports):
    lines = []
    for rep in reports:
        shown = "n/a" if rep.verdict == "skipped" else f"{rep.max_rel_error:.3e}"
        lines.append(f"{rep.id:18s} {rep.kind:15s} {rep.verdict:7s} "
                     f"max_rel {shown:>9s}  tol {rep.tol:.1e}  points {len(rep.records)}")
    npass = sum(1 for r in reports if r.verdict == "pass")
    nfail = sum(1 for r in reports if r.verdict == "fail")
    controls = [r for r in reports if get_case(r.id).negative_control]
    behaving = sum(1 for r in controls if r.verdict == "fail")
    lines.append(f"summary: cases={len(reports)} pass={npass} fail={nfail} "
                 f"controls_failing_as_designed={behaving}/{len(controls)}")
    return "\n".join(lines) + "\n"


_RENDER = {"json": _render_json, "csv": _render_csv, "text": _render_text}


def _exit_status(reports):
    for rep in reports:
        expected = "fail" if get_case(rep.id).negative_control else "pass"
        if rep.verdict != expected:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args):
    cfg = RunConfig(
        patterns=tuple(args.case or ()),
        select_all=args.all,
        tol=args.tol,
        grid_path=args.grid,
        fmt=args.format,
        out=args.out,
        jobs=args.jobs,
    )
    reports, wall = _run_verify(cfg)
    payload = _RENDER[cfg.fmt](reports)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
        timing = {
            "jobs": cfg.jobs,
            "total_ms": wall * 1e3,
            "cases": {rep.id: (rep.wall_time * 1e3 if cfg.jobs == 1 else None)
                      for rep in reports},
        }
        with open(cfg.out + ".timing.json", "w", encoding="utf-8") as fh:
            json.dump(timing, fh, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(payload)
    return _exit_status(reports)


def cmd_list(args):
    rows = list_cases()
    if args.kind:
        rows = [row for row in rows if row[1] == args.kind]
    for cid, kind, label, tol in rows:
        sys.stdout.write(f"{cid:18s} {kind:15s} tol {tol:.1e}  {label}\n")
    return EXIT_OK


# function name -> (argument names in order, callable)
_EVAL_FNS = {
    "D": (("nu", "z"), pcf_d),
    "erf": (("x",), erf),
    "erfc": (("x",), erfc),
    "gamma": (("z",), gamma),
    "rgamma": (("z",), reciprocal_gamma),
    "phi": (("a", "b", "z"), kummer_phi),
    "2f1": (("a", "b", "c", "z"), gauss_2f1),
    "2f2": (("a1", "a2", "b1", "b2", "z"), hyp_2f2),
    "f1": (("a", "b1", "b2", "c", "z1", "z2"), appell_f1),
}

_EVAL_FLAGS = ("nu", "z", "x", "a", "b", "c", "a1", "a2", "b1", "b2", "z1", "z2")


def _format_value(value):
    value = complex(value)
    if value.imag == 0.0:
        real = value.real
        if real == int(real) and abs(real) <= 1e15:
            return str(int(real))
        return repr(real)
    return repr(value)


def cmd_eval(args):
    try:
        names, fn = _EVAL_FNS[args.fn]
    except KeyError:
        raise ConfigError(
            f"unknown function {args.fn!r}; choose from {', '.join(sorted(_EVAL_FNS))}"
        ) from None
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ConfigError(f"eval {args.fn} needs --{name}")
        values.append(value)
    for flag in _EVAL_FLAGS:
        if flag not in names and getattr(args, flag) is not None:
            raise ConfigError(f"eval {args.fn} does not take --{flag}")
    result = fn(*values)
    sys.stdout.write(_format_value(result) + "\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lapcyl",
        description="Certify the identity catalog or evaluate one special function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the catalog")
    p_list.add_argument("--kind", choices=("laplace_pair", "direct_integral", "reduction"))
    p_list.set_defaults(func=cmd_list)

    p_verify = sub.add_parser("verify", help="run the verification harness")
    p_verify.add_argument("--case", action="append", metavar="GLOB",
                          help="case id or glob; repeatable")
    p_verify.add_argument("--all", action="store_true", help="select every case")
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the per-case tolerance")
    p_verify.add_argument("--grid", metavar="PATH", default=None,
                          help="grid override file with rows `id mu nu x y p`")
    p_verify.add_argument("--format", choices=_FORMATS, default="json")
    p_verify.add_argument("--out", metavar="PATH", default=None,
                          help="write the report here plus timings to PATH.timing.json")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="worker processes for grid evaluation")
    p_verify.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate one function at a point")
    p_eval.add_argument("fn", metavar="FN",
                        help="one of " + ", ".join(sorted(_EVAL_FNS)))
    for flag in _EVAL_FLAGS:
        p_eval.add_argument("--" + flag, type=float, default=None)
    p_eval.set_defaults(func=cmd_eval)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
