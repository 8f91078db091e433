"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""
import time

import pytest

from neronlab.localred import tate_reduce
from neronlab.paperlab import properties
from neronlab.paperlab.registry import CHAR2_ROOT, _tree_roots, verify

RUN_START = time.perf_counter()


def _tables(*ids, need=()):
    reports = [verify(t) for t in ids]
    seen = {f"{r.table_id}:{c.id}" for r in reports for c in r.results}
    missing = [n for n in need if n not in seen]
    bad = [f"{r.table_id}:{f.id}" for r in reports for f in r.failures()]
    ok = not bad and not missing
    detail = ", ".join(f"{r.table_id} {r.passed}/{r.total}" for r in reports)
    if missing:
        detail += f"; missing {missing}"
    if bad:
        detail += f"; failing {bad}"
    return ok, detail


def criterion_1():
    # every row checks both its stated equation and the base-change route
    rep = verify("igusa3")
    rows = [r for r in rep.results if r.id.startswith("row")]
    routed = all(any(k.startswith("route_") for k in r.expected) for r in rows)
    ok = rep.ok and len(rows) == 18 and routed
    return ok, f"char 3 rows {sum(r.passed for r in rows)}/{len(rows)}, routes checked: {routed}", rep.seconds < 5


def criterion_2():
    t0 = time.perf_counter()
    ok, detail = _tables("char2-tree", need=[f"char2-tree:row{i:02d}" for i in range(1, 25)])
    chain = [str(tate_reduce(E).kodaira) for E in _tree_roots(2, CHAR2_ROOT)]
    ok = ok and chain == ["II*", "III*", "I1*"]
    return ok, f"{detail}; Frobenius chain {'->'.join(chain)}", time.perf_counter() - t0 < 10


def criterion_3():
    need = [f"qtwist:p{p}-{k}" for p in (5, 7) for k in ("I0", "I1", "II", "III", "IV", "IV*", "III*", "II*", "I0*")]
    need += [f"hightwist:{kind}-p5-{k}" for kind in ("cubic", "sextic") for k in ("I0", "II", "IV", "I0*", "IV*", "II*")]
    need += [f"hightwist:quartic-p7-{k}" for k in ("I0", "III", "I0*", "III*")]
    return _tables("qtwist", "hightwist", need=need) + (True,)


def criterion_4():
    need = [f"frob:p{p}-{k}" for p in (13, 5, 7, 11)
            for k in ("I0", "I1", "I0*", "I1*", "II", "III", "IV", "IV*", "III*", "II*")]
    return _tables("frob", need=need) + (True,)


def criterion_5():
    need = ["mainthm:p5-j0", "mainthm:p5-generic", "mainthm:p7-j1728", "mainthm:p7-generic",
            "mainthm:p11-j0", "mainthm:p11-j1728", "mainthm:p11-generic"]
    return _tables("mainthm", need=need) + (True,)


def criterion_6():
    return _tables("family3", need=[f"family3:n{n}" for n in range(1, 7)]) + (True,)


def criterion_7():
    need = [f"char2-taut:f={f}-d={d}-at-{v}" for f in ("1", "1+t") for d in (-1, 0, 1, 2) for v in ("0", "inf")]
    need += [f"semistable2:f={f}-d={d}-jinv={j}" for f in ("1", "1+t") for d in (0, 1) for j in ("t", "t^2")]
    return _tables("char2-taut", "semistable2", need=need) + (True,)


def criterion_8():
    need = [f"swan:{n}" for n in ("SL2F3", "C6", "Q", "C4", "C3", "C2", "1")]
    need += [f"ramification:delta2-s{s}" for s in (1, 2, 3)]
    need += [f"ramification:delta3-g{g}" for g in (6, 12, 24)]
    ok, detail = _tables("swan", "ramification", need=need)
    hh = properties.hasse_herbrand_shape(0, 100)
    return ok and hh.ok and hh.trials == 100, f"{detail}; phi shape {hh.trials} filtrations ok={hh.ok}", True


def criterion_9():
    need = [f"oorttate:F{p}-tau1" for p in (2, 3, 5)] + ["oorttate:F3-tau2", "oorttate:F5-tau2", "oorttate:F4-tau2"]
    rep = verify("oorttate")
    exp_ok = all(r.computed.get("exp_homomorphism") for r in rep.results if r.id.endswith("tau1"))
    ok, detail = _tables("oorttate", need=need)
    return ok and exp_ok, f"{detail}; exponential identity at tau=1: {exp_ok}", True


def criterion_10():
    names = ["discriminant_law", "ogg_consistency", "reduction_one", "reduction_two", "valuation_bound",
             "associativity"]
    results = [properties.SUITES[n](0, 50) for n in names]
    ok, detail = _tables("valbound")
    ok = ok and all(r.ok and r.trials == 50 for r in results)
    detail += "; " + ", ".join(f"{r.name} {r.trials}{'' if r.ok else ' FAIL'}" for r in results)
    return ok, detail, time.perf_counter() - RUN_START < 120


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _report(n, fn):
    t0 = time.perf_counter()
    ok, detail, timely = fn()
    ok = ok and timely
    secs = time.perf_counter() - t0
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} ({secs:.2f}s{'' if timely else ', too slow'})"
    return ok, line


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, line = _report(n, CRITERIA[n - 1])
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys
    outcomes = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, line = _report(i, fn)
        outcomes.append(ok)
        print(line)
    print(f"{sum(outcomes)}/{len(outcomes)} criteria pass in {time.perf_counter() - RUN_START:.1f}s")
    sys.exit(0 if all(outcomes) else 1)
