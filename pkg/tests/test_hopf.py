import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import hopf
from qfk.abgroup import AbelianGroup
from qfk.datum import DatumError, QLSDatum, datum_from_cartan, preset
from qfk.hopf import HopfAlgebraH, build_H, check_properties, elem_add, span_of_products_dim, verify_hopf_axioms
from qfk.scalars import PrimeField


def add(F, *terms):
    out = {}
    for t in terms:
        out = elem_add(F, out, t)
    return out


def neg(F, x):
    return {k: F.neg(c) for k, c in x.items()}


def test_minimal_straddle():
    H = hopf("min-z4")
    F = H.field
    v, w = H.v(0), H.w(0)
    expected = add(F, H.multiply(v, w), neg(F, H.grp((1,))), H.grp((3,)))
    assert H.multiply(w, v) == expected


def test_group_conjugation():
    H = hopf("min-z4")
    F = H.field
    g, v, w = H.grp((1,)), H.v(0), H.w(0)
    assert H.multiply(g, v) == neg(F, H.multiply(v, g))
    # w g = chi(g) g w
    assert H.multiply(w, g) == neg(F, H.multiply(g, w))


def test_coproduct_and_antipode_of_v():
    H = hopf("min-z4")
    F = H.field
    one, v, g = H.unit, H.v(0), H.grp((1,))
    (u,), (vi,), (gi,) = one, v, g
    assert H.coproduct(v) == {(vi, u): F.one, (gi, vi): F.one}
    assert H.counit(v) == F.zero
    assert H.antipode(v) == neg(F, H.multiply(H.grp((3,)), v))
    assert H.antipode(H.w(0)) == neg(F, H.multiply(H.w(0), H.grp((1,))))


def _qbinom_by_subsets(k, j, q_exp, F):
    # [k;j]_q = sum over j-subsets of q^(number of inversions)
    total = F.zero
    for S in itertools.combinations(range(k), j):
        inv = sum(1 for s in S for t in range(k) if t not in S and t < s)
        total = F.add(total, F.root(q_exp * inv))
    return total


@pytest.mark.parametrize("name", ["frobenius-sl2-l3", "prenichols-char3"])
def test_coproduct_of_powers(name):
    H = hopf(name)
    F, G, d = H.field, H.group, H.datum
    q = d.q_exp(0)
    f = d.f[0]
    for k in range(H.dimL):
        vk = {H.flat(k, G.identity, 0): F.one}
        expected = {}
        for j in range(k + 1):
            c = _qbinom_by_subsets(k, j, q, F)
            if not F.is_zero(c):
                expected[(H.flat(j, G.pow(f, k - j), 0), H.flat(k - j, G.identity, 0))] = c
        assert H.coproduct(vk) == expected


def test_minimal_axioms_exhaustive():
    rep = verify_hopf_axioms(hopf("min-z4"), "exhaustive")
    assert rep.ok, rep.failures
    assert rep.checked["associativity"] == 16 ** 3
    assert check_properties(hopf("min-z4"), "exhaustive").ok


@pytest.mark.parametrize("name", ["frobenius-sl2-l3", "prenichols-char3"])
def test_axioms_sampled(name):
    H = hopf(name)
    assert verify_hopf_axioms(H, ("sampled", 300), seed=3).ok
    assert check_properties(H, ("sampled", 300), seed=3).ok


def test_exhaustive_limit():
    with pytest.raises(ValueError):
        verify_hopf_axioms(build_H(datum_from_cartan(5, [[2]])), "exhaustive")


def test_twisted_straddle_is_caught():
    H = HopfAlgebraH(preset("min-z4"), _twist=2)
    rep = verify_hopf_axioms(H, "exhaustive")
    laws = {f["law"] for f in rep.failures}
    assert laws == {"coproduct_multiplicative", "counit_multiplicative"}


def test_dimension_and_generation(preset_name):
    H = hopf(preset_name)
    assert H.dim == preset(preset_name).dim_H
    assert span_of_products_dim(H) == H.dim


def test_invalid_datum_refused():
    d = QLSDatum(AbelianGroup((4,)), PrimeField(13, 4), f=[(1,)], g=[(3,)], chi=[(2,)], c=[1], m=[3])
    with pytest.raises(DatumError):
        build_H(d)


def test_rank_zero_is_group_algebra():
    G = AbelianGroup((2, 3))
    d = QLSDatum(G, PrimeField(7, 6), f=[], g=[], chi=[], c=[], m=[])
    H = build_H(d)
    assert H.dim == 6
    assert verify_hopf_axioms(H, "exhaustive").ok
    x, y = (1, 2), (1, 1)
    assert H.multiply(H.grp(x), H.grp(y)) == H.grp(G.mul(x, y))
    (gx,) = H.grp(x)
    assert H.coproduct(H.grp(x)) == {(gx, gx): H.field.one}


def test_triangular_decomposition(preset_name):
    H = hopf(preset_name)
    F = H.field
    X = {x: F(x + 1).raw for x in range(0, H.dim, 7)}
    X = {k: c for k, c in X.items() if not F.is_zero(c)}
    assert H.from_components(H.triangular_components(X)) == X


elems = st.dictionaries(st.integers(0, 53), st.integers(1, 6), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(elems, elems)
def test_antipode_reverses_products(X, Y):
    H = hopf("frobenius-sl2-l3")
    F = H.field
    X = {k: F(c).raw for k, c in X.items()}
    Y = {k: F(c).raw for k, c in Y.items()}
    assert H.antipode(H.multiply(X, Y)) == H.multiply(H.antipode(Y), H.antipode(X))
    assert H.coproduct(H.multiply(X, Y)) == H.tensor_multiply(H.coproduct(X), H.coproduct(Y))
