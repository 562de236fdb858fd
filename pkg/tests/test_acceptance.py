"""Acceptance criteria 1-8; each test prints one PASS/FAIL line."""

import functools
import time

import pytest

from qfk.datum import preset, with_field
from qfk.dualdouble import build_double, verify_double
from qfk.hopf import build_H, check_properties, verify_hopf_axioms
from qfk.repn import all_simples, ambient, schur_dimension, simple_quotient, trace_radical_oracle

# private caches so that measured times include every build step this module needs


@functools.lru_cache(maxsize=None)
def hopf(name, p=None):
    d = preset(name)
    return build_H(with_field(d, {"backend": "prime", "p": p}) if p else d)


@functools.lru_cache(maxsize=None)
def double(name, p=None):
    return build_double(hopf(name, p))


@functools.lru_cache(maxsize=None)
def amb(name, target, p=None):
    return ambient(hopf(name, p) if target == "H" else double(name, p))


@functools.lru_cache(maxsize=None)
def simples(name, target, p=None):
    return all_simples(amb(name, target, p))


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail, elapsed, limit):
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {n}: {status}  {detail}  [{elapsed:.1f}s, limit {limit:g}s]")
        assert ok, detail
        assert within, f"runtime {elapsed:.1f}s exceeds {limit:g}s"

    return emit


def test_criterion_1_dimensions(report):
    t0 = time.perf_counter()
    want = {"min-z4": 16, "frobenius-sl2-l3": 54, "prenichols-char3": 72}
    got = {}
    for name in want:
        d, H = preset(name), hopf(name)
        got[name] = (d.dim_L * d.group.order * d.dim_R, H.dim, double(name).dim)
    ok = all(a == b == want[n] and c == want[n] ** 2 for n, (a, b, c) in got.items())
    report(1, ok, f"dim H, dim D(H) = {[(b, c) for _, b, c in got.values()]}", time.perf_counter() - t0, 1)


def test_criterion_2_hopf_axioms(report):
    t0 = time.perf_counter()
    parts = []
    ok = True
    for name, mode in (("min-z4", "exhaustive"), ("prenichols-char3", "exhaustive"), ("frobenius-sl2-l3", ("sampled", 2000))):
        rep = verify_hopf_axioms(hopf(name), mode, seed=0)
        ok = ok and rep.ok
        parts.append(f"{name}: {rep.checked['associativity']} triples, {len(rep.failures)} failures")
    report(2, ok, "; ".join(parts), time.perf_counter() - t0, 30)


@pytest.mark.parametrize("name,limit", [("min-z4", 10), ("prenichols-char3", 600), ("frobenius-sl2-l3", 600)])
def test_criterion_3_double_structure(report, name, limit):
    t0 = time.perf_counter()
    D = double(name)
    P = D.pbw()
    rep = verify_double(D, ("sampled", 500), seed=0)
    ok = rep.ok and rep.checked["associativity"] >= 500 and rep.checked["formula1_formula2"] >= 500
    detail = (
        f"{name}: {rep.checked['formula1_formula2']} formula pairs, {rep.checked['associativity']} triples, "
        f"PBW {len(P.block_sizes)} blocks invertible, {len(rep.failures)} failures"
    )
    report(3, ok, detail, time.perf_counter() - t0, limit)


def _diagonal(table):
    return all((d > 0) == (j == k) for k, r in enumerate(table.rows) for j, d in enumerate(r.distinguish))


def test_criterion_4_simples_over_h(report):
    t0 = time.perf_counter()
    parts, ok = [], True
    for name, count in (("min-z4", 4), ("frobenius-sl2-l3", 6), ("prenichols-char3", 2)):
        t = simples(name, "H")
        good = t.ok and len(t.rows) == count and all(r.certificate for r in t.rows) and _diagonal(t)
        if name == "frobenius-sl2-l3":
            good = good and all(1 <= r.dim_L <= 3 for r in t.rows)
        ok = ok and good
        parts.append(f"{name}: {len(t.rows)} simples dims {[r.dim_L for r in t.rows]}")
    report(4, ok, "; ".join(parts), time.perf_counter() - t0, 60)


def test_criterion_5_simples_over_double(report):
    t0 = time.perf_counter()
    parts, ok = [], True
    for name, count, dim_m in (("min-z4", 16, 4), ("frobenius-sl2-l3", 36, 9), ("prenichols-char3", 4, 36)):
        t = simples(name, "double")
        good = t.ok and len(t.rows) == count and all(r.certificate and r.dim_M == dim_m for r in t.rows) and _diagonal(t)
        ok = ok and good
        parts.append(f"{name}: {len(t.rows)} simples, dim M = {dim_m}, sum dim^2 = {t.sum_squares()}")
    report(5, ok, "; ".join(parts), time.perf_counter() - t0, 900)


def test_criterion_6_trace_oracle(report):
    t0 = time.perf_counter()
    parts, ok = [], True
    for target in ("H", "double"):
        A = amb("min-z4", target, 257)
        J = trace_radical_oracle(A)
        t = simples("min-z4", target, 257)
        schur = [schur_dimension(A, simple_quotient(A, r.weight)[0]) for r in t.rows]
        good = A.dim - J == t.sum_squares() and set(schur) == {1}
        ok = ok and good
        parts.append(f"{target}: dim {A.dim} - dim J {J} = {A.dim - J}, sum dim^2 = {t.sum_squares()}")
    report(6, ok, "; ".join(parts), time.perf_counter() - t0, 120)


def test_criterion_7_dual_generators(report):
    t0 = time.perf_counter()
    degs = {name: [d for _, d in double(name).dual_generators("R")] for name in ("min-z4", "frobenius-sl2-l3", "prenichols-char3")}
    ok = degs["min-z4"] == [1] and degs["frobenius-sl2-l3"] == [1] and max(degs["prenichols-char3"]) > 1
    report(7, ok, f"R* generator degrees {degs}", time.perf_counter() - t0, 60)


def test_criterion_8_property_regressions(report):
    t0 = time.perf_counter()
    parts, ok = [], True
    for name in ("min-z4", "frobenius-sl2-l3", "prenichols-char3"):
        mode = "exhaustive" if name == "min-z4" else ("sampled", 500)
        props = check_properties(hopf(name), mode, seed=0)
        dv = verify_double(double(name), mode, seed=0, nilpotency="exact")
        info = dv.checked["borel_info"]
        ok = ok and props.ok and dv.ok and all(info[s]["nilpotency_index"] for s in "AB")
        laws = sorted(set(props.checked) | {k for k in dv.checked if k != "borel_info"})
        nil = [info[s]["nilpotency_index"] for s in "AB"]
        parts.append(f"{name}: {len(laws)} laws, nilpotency {nil}, failures {len(props.failures) + len(dv.failures)}")
    report(8, ok, "; ".join(parts), time.perf_counter() - t0, 600)
