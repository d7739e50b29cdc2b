#!/usr/bin/env python3
"""Walk the full identity catalog and certify every case.

Each catalog entry pins a closed form against an independent numerical
route: Laplace pairs integrate the original with the e^{-pt} kernel,
direct integrals run their quadrature, reductions compare two closed
forms.  Two entries are negative controls wired to published-but-wrong
right-hand sides; the run is healthy exactly when those two fail and
everything else passes.

Run:
    python3 demos/certify_catalog.py
"""

import time

from lapcyl.catalog import get_case, list_cases, verify


def main():
    print(f"{'case':18s} {'kind':16s} {'points':>6s} {'max rel err':>12s} "
          f"{'tol':>8s} verdict")
    print("-" * 76)
    t0 = time.perf_counter()
    healthy = True
    for cid, kind, label, tol in list_cases():
        rep = verify(cid)
        control = get_case(cid).negative_control
        expected = "fail" if control else "pass"
        mark = "" if rep.verdict == expected else "  <-- UNEXPECTED"
        if mark:
            healthy = False
        note = "  (control, must fail)" if control else ""
        print(f"{cid:18s} {kind:16s} {len(rep.records):6d} "
              f"{rep.max_rel_error:12.3e} {tol:8.0e} {rep.verdict}{note}{mark}")
    dt = time.perf_counter() - t0
    print("-" * 76)
    print(f"catalog {'HEALTHY' if healthy else 'BROKEN'} in {dt:.1f}s")
    return 0 if healthy else 1


if __name__ == "__main__":
    raise SystemExit(main())
