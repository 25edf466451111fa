#!/usr/bin/env python3
"""Smoke test for the wlp_py extension module.

Builds nothing itself: run `cargo build -p wlp-py` first, then
`python3 python/smoke_test.py`. The script copies the cdylib next to a
temporary directory under the import name `wlp_py.so`, imports it, and
checks a handful of exactly-known values end to end.
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
CDYLIB = REPO / "target" / "debug" / "libwlp_py.so"


def load_module():
    if not CDYLIB.exists():
        sys.exit(f"missing {CDYLIB}; run `cargo build -p wlp-py` first")
    tmp = tempfile.mkdtemp(prefix="wlp_py_")
    shutil.copy2(CDYLIB, Path(tmp) / "wlp_py.so")
    sys.path.insert(0, tmp)
    import wlp_py

    return wlp_py


wlp = load_module()
PASSED = 0


def check(name, fn):
    global PASSED
    fn()
    PASSED += 1
    print(f"SMOKE {name}: PASS")


def counting():
    simplex = wlp.Polytope.simplex(2)
    assert simplex.dilate(3).count() == 10
    assert wlp.Polytope.cube(2).count() == 4
    assert simplex.n == 3 and simplex.rows == 1
    pts = sorted(tuple(p) for p in wlp.Polytope.simplex(1).points())
    assert pts == [(0, 1), (1, 0)]
    # Counts beyond machine integers come back as exact Python ints: the
    # cube splits into independent per-coordinate blocks, so this is cheap.
    assert wlp.Polytope.cube(70).count() == 2**70
    assert wlp.Polytope.simplex(1).dilate(10**5).count() == 10**5 + 1


def parsing():
    latte = "3 3\n3 -1 -1\n0 1 0\n0 0 1\n"
    assert wlp.Polytope.parse(latte).count() == 10
    assert wlp.Polytope.parse('{"A": [[1, 1]], "b": [2]}').count() == 3
    try:
        wlp.Polytope.parse("not a polytope")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed input must raise ValueError")


def lifting():
    # P = 2 * simplex(1); weight w(x) = x1 + 1 via the fiber y1 + y2 = x1.
    p = wlp.Polytope.simplex(1).dilate(2)
    fam = wlp.Family([[1, 1]], [[1, 0]], [0])
    assert fam.weight([4, 0]) == 5
    lifted, n_vars, m_vars = wlp.lift(p, fam)
    assert (n_vars, m_vars) == (2, 2)
    assert lifted.count() == 6  # 1 + 2 + 3
    assert wlp.weighted_sum(p, fam) == 6
    assert wlp.weighted_sum(wlp.Polytope.simplex(1), fam, 2) == 6


def ehrhart():
    qp = wlp.ehrhart(wlp.Polytope.simplex(2))
    assert qp["degree"] == 2 and qp["period"] == 1
    assert qp["coeffs"] == [["1"], ["3/2"], ["1/2"]]
    f = wlp.Poly(2, [("1", [1, 0])])
    wqp = wlp.weighted_ehrhart(wlp.Polytope.simplex(1), f)
    assert wqp["coeffs"] == [["0"], ["1/2"], ["1/2"]]


def calculus():
    f = wlp.Poly(3, [("1", [1, 1, 0])])
    assert Fraction(wlp.integrate(wlp.Polytope.simplex(2), f)) == Fraction(1, 24)
    p = wlp.Polytope.simplex(1).dilate(2)
    fam = wlp.Family([[1, 1]], [[1, 0]], [0])
    cert = wlp.maximize(p, fam)
    assert cert["maximum"] == 3 and cert["n_points"] == 3
    last = cert["steps"][-1]
    assert last["lower"] == last["upper"] == 3
    assert wlp.Poly(2, [("3/2", [1, 0])]).eval([2, 7]) == "3"


def applications():
    stats = wlp.core_statistics(3, 4)
    assert stats["count"] == 5 and stats["average"] == "2"
    assert stats["average_dec"] == "2.0000000000"
    assert wlp.kostka([2, 1], [1, 1, 1]) == 2
    rep = wlp.rsk_check([1, 1], [1, 1])
    assert rep["lhs"] == rep["rhs"] == rep["lifted"] == 2 and rep["ok"]
    assert wlp.lr_coefficient([2, 1], [1], [1, 1]) == 1
    assert wlp.newell_littlewood([1], [1], [1, 1]) == 1
    rows = wlp.semigroup_series(3, 8)
    assert len(rows) == 8
    g4 = rows[3]
    assert g4["count"] == 2 and g4["total_weight"] == 6
    assert g4["average"] == "3" and g4["average_over_g2"] == "3/16"
    try:
        wlp.kostka([1, 2], [1, 1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("increasing parts must raise ValueError")


def main():
    check("counting", counting)
    check("parsing", parsing)
    check("lifting", lifting)
    check("ehrhart", ehrhart)
    check("calculus", calculus)
    check("applications", applications)
    print(f"smoke test: {PASSED}/6 groups passed")


if __name__ == "__main__":
    main()
