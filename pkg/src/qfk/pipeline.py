"""End-to-end runs: build, verify, classify, cross-check; JSON-ready reports."""

from __future__ import annotations

import time

from .datum import QLSDatum, validate
from .dualdouble import DoubleAlgebra, verify_double
from .hopf import HopfAlgebraH, check_properties, verify_hopf_axioms
from .repn import OraclePrecondition, all_simples, ambient, trace_radical_oracle


def build(d: QLSDatum, factors: dict | None = None) -> HopfAlgebraH:
    factors = factors or {}
    return HopfAlgebraH(d, factors.get("L"), factors.get("R"))


def info(d: QLSDatum, factors: dict | None = None) -> dict:
    H = build(d, factors)
    D = DoubleAlgebra(H)
    gens = {side: [deg for _, deg in D.dual_generators(side)] for side in ("L", "R")}
    return {
        "datum": d.describe(),
        "validation": validate(d).as_dict(),
        "dimensions": {"L": H.dimL, "R": H.dimR, "G": H.nG, "H": H.dim, "double": H.dim ** 2},
        "dual_generator_degrees": {"L*": gens["L"], "R*": gens["R"]},
    }


def run_simples(
    d: QLSDatum,
    target: str = "H",
    oracle: bool = False,
    exhaustive_axioms: bool = False,
    threads: int | None = None,
    seed: int = 0,
    factors: dict | None = None,
    samples: int = 2000,
) -> tuple[dict, bool]:
    """Full pipeline; returns (report, ok) where ok covers every theorem-level check."""
    timings: dict = {}
    t0 = time.perf_counter()
    H = build(d, factors)
    timings["build_H"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    mode = "exhaustive" if exhaustive_axioms and H.dim <= 128 else ("sampled", samples)
    ax = verify_hopf_axioms(H, mode, seed=seed)
    props = check_properties(H, mode, seed=seed)
    timings["hopf_axioms"] = time.perf_counter() - t0
    ok = ax.ok and props.ok
    notes = []
    if exhaustive_axioms and H.dim > 128:
        notes.append(f"exhaustive axioms skipped: dim H = {H.dim} > 128; sampled {samples} tuples instead")

    report = {
        "datum": d.describe(),
        "validation": validate(d).as_dict(),
        "dimensions": {"L": H.dimL, "R": H.dimR, "H": H.dim, "double": H.dim ** 2},
        "axioms": {"mode": mode if isinstance(mode, str) else f"sampled({samples})", **ax.as_dict()},
        "properties": props.as_dict(),
    }

    if target == "double":
        t0 = time.perf_counter()
        alg = DoubleAlgebra(H)
        P = alg.pbw()
        timings["pbw_basis"] = time.perf_counter() - t0
        t0 = time.perf_counter()
        dv = verify_double(alg, ("sampled", 500), seed=seed)
        timings["double_checks"] = time.perf_counter() - t0
        ok = ok and dv.ok
        rgens = [deg for _, deg in alg.dual_generators("R")]
        if any(deg > 1 for deg in rgens):
            notes.append("R* requires a generator in degree > 1")
        report["double"] = {
            "pbw_blocks": len(P.block_sizes),
            "pbw_largest_block": max(P.block_sizes.values()),
            "R*_generator_degrees": rgens,
            "L*_generator_degrees": [deg for _, deg in alg.dual_generators("L")],
            **dv.as_dict(),
        }
    elif target == "H":
        alg = H
    else:
        raise ValueError(f"target must be H or double, got {target!r}")

    t0 = time.perf_counter()
    amb = ambient(alg)
    table = all_simples(amb, threads=threads)
    timings["simples"] = time.perf_counter() - t0
    ok = ok and table.ok
    report["simples"] = table.as_dict()

    if oracle:
        t0 = time.perf_counter()
        try:
            J = trace_radical_oracle(amb)
        except OraclePrecondition as exc:
            report["oracle"] = {"status": "skipped (precondition)", "reason": str(exc)}
        else:
            semisimple_part = amb.dim - J
            agree = semisimple_part == table.sum_squares()
            report["oracle"] = {
                "status": "pass" if agree else "fail",
                "dim_radical": J,
                "dim_minus_radical": semisimple_part,
                "sum_dim_squared": table.sum_squares(),
            }
            ok = ok and agree
        timings["oracle"] = time.perf_counter() - t0
    else:
        report["oracle"] = {"status": "not requested"}

    report["notes"] = notes
    report["ok"] = ok
    report["timings"] = {k: round(v, 4) for k, v in timings.items()}
    return report, ok


def export_bundle(d: QLSDatum, what: str, side: str = "L", factors: dict | None = None) -> dict:
    H = build(d, factors)
    F = H.field
    if what == "prenichols":
        return (H.L if side == "L" else H.R).to_bundle()
    if what == "H":
        return H.to_bundle()
    D = DoubleAlgebra(H)
    dual = {
        "kind": "dual",
        "dim": H.dim,
        "mult": [[s, t, z, F.to_json(c)] for (s, t), out in sorted(D.Hd.mul_table.items()) for z, c in sorted(out.items())],
        "unit": sorted(D.Hd.unit),
    }
    if what == "dual":
        return dual
    if what == "double":
        n = H.dim
        straddle = []
        for x in range(n):
            for t, row in enumerate(D.straddle_row(x)):
                for k, c in sorted(row.items()):
                    y, h2 = divmod(k, n)
                    straddle.append([x, t, y, h2, F.to_json(c)])
        return {"kind": "double", "dim": n * n, "H": H.to_bundle(), "dual": dual, "straddle": straddle}
    raise ValueError(f"unknown export {what!r}")
