import itertools

import pytest
from hypothesis import given, strategies as st

from qfk.abgroup import AbelianGroup, GroupError, char_eval, enumerate_dual, enumerate_product_weights, group_ops
from qfk.linalg import dense_to_sparse, rank
from qfk.scalars import PrimeField, field_create


def test_group_ops_examples():
    Z4 = AbelianGroup((4,))
    assert group_ops(Z4, (1,), (3,)) == (0,)
    G = AbelianGroup((2, 3))
    assert group_ops(G, (1, 2), (1, 2)) == (0, 1)
    assert group_ops(G, (1, 2), op="inv") == (1, 1)
    with pytest.raises(GroupError):
        group_ops(G, (1,), (1, 2))


def test_char_eval_examples():
    Z4, F = AbelianGroup((4,)), PrimeField(13, 4)
    assert char_eval(Z4, (2,), (1,), F).raw == 12
    assert char_eval(Z4, (0,), (3,), F).raw == 1
    assert char_eval(Z4, (3,), (0,), F).raw == 1


def test_char_eval_needs_root():
    with pytest.raises(GroupError):
        char_eval(AbelianGroup((4,)), (1,), (1,), PrimeField(7, 2))


def test_enumerations():
    assert len(enumerate_dual(AbelianGroup((2,)))) == 2
    Z4, F = AbelianGroup((4,)), PrimeField(13, 4)
    for a, chi in enumerate(enumerate_dual(Z4)):
        assert char_eval(Z4, chi, (1,), F) == F.zeta() ** a
    assert len(enumerate_dual(AbelianGroup((2, 3)))) == 6
    assert len(enumerate_product_weights(AbelianGroup((2,)))) == 4
    assert len(enumerate_product_weights(Z4)) == 16


groups = st.lists(st.integers(1, 6), min_size=1, max_size=3).map(tuple)


@given(groups, st.data())
def test_characters_are_homomorphisms(moduli, data):
    G = AbelianGroup(moduli)
    F = field_create({"backend": "prime"}, G.exponent)
    elem = st.tuples(*[st.integers(0, m - 1) for m in moduli])
    chi, x, y = data.draw(elem), data.draw(elem), data.draw(elem)
    assert char_eval(G, chi, G.mul(x, y), F) == char_eval(G, chi, x, F) * char_eval(G, chi, y, F)
    assert char_eval(G, chi, G.identity, F) == F(1)
    assert G.mul(x, G.inv(x)) == G.identity


@pytest.mark.parametrize("moduli", [(2,), (4,), (2, 2), (2, 3), (4, 4), (3, 5)])
def test_evaluation_pairing_nondegenerate(moduli):
    G = AbelianGroup(moduli)
    F = field_create({"backend": "prime"}, G.exponent)
    mat = [[char_eval(G, chi, g, F).raw for g in G.elements()] for chi in enumerate_dual(G)]
    assert rank(F, [dense_to_sparse(F, r) for r in mat]) == G.order
    # injectivity of characters, checked directly
    rows = {tuple(r) for r in mat}
    assert len(rows) == G.order


def test_product_weight_is_a_character():
    G = AbelianGroup((2, 3))
    N = G.exponent
    for w in enumerate_product_weights(G):
        for (c1, g1), (c2, g2) in itertools.product(itertools.product(G.elements(), repeat=2), repeat=2):
            lhs = w.exponent(G, G.mul(c1, c2), G.mul(g1, g2), N)
            assert lhs == (w.exponent(G, c1, g1, N) + w.exponent(G, c2, g2, N)) % N
