import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcong.finite import (ClosureLimitExceeded, ModMatrix, Packing, closure, equals,
                              from_int_matrices, group_query, is_subgroup, level_kernel_order,
                              subgroup_index)
from braidcong.suite import artin_images, sigma_images, transvection_squares
from braidcong.symplectic import generating_sets, mumford_gens


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 7), st.sampled_from((2, 4, 8)), st.integers(1, 5), st.data())
def test_packing_roundtrip(dim, m, count, data):
    mats = np.array(data.draw(st.lists(st.integers(0, m - 1), min_size=count * dim * dim,
                                       max_size=count * dim * dim)), dtype=np.uint8).reshape(count, dim, dim)
    pk = Packing(dim, m)
    keys = pk.pack(mats)
    assert keys.shape == (count,)
    assert np.array_equal(pk.unpack(keys), mats)


def test_packing_is_canonical():
    pk = Packing(6, 8)
    assert pk.nwords == 2
    a = np.arange(36, dtype=np.uint8).reshape(1, 6, 6) % 8
    b = a.copy()
    b[0, 5, 5] ^= 1
    assert pk.pack(a) != pk.pack(b)
    assert pk.pack(a) == pk.pack(a.copy())


def test_mod_matrix():
    A = ModMatrix([[3, -1], [1, 0]], 4)
    assert A.entries.tolist() == [[3, 3], [1, 0]]
    assert A * ModMatrix.identity(2, 4) == A
    assert hash(A) == hash(ModMatrix([[-1, 3], [5, 4]], 4))
    assert not ModMatrix([[2, 0], [0, 1]], 4).is_invertible()
    with pytest.raises(ValueError):
        ModMatrix([[1, 2]], 4)
    with pytest.raises(ValueError):
        ModMatrix([[1]], 6)
    with pytest.raises(ValueError):
        A * ModMatrix.identity(2, 8)


def test_trivial_and_small_closures():
    I = ModMatrix.identity(3, 4)
    G = closure([I])
    assert G.order == 1 and I in G and equals(G, G)
    swap = closure([ModMatrix([[0, 1], [1, 0]], 2)])
    assert swap.order == 2
    assert subgroup_index(swap, swap) == 1
    assert subgroup_index(swap, closure([ModMatrix.identity(2, 2)])) == 2


def test_closure_rejects():
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(ValueError):
        closure([ModMatrix([[2, 0], [0, 1]], 4)])
    with pytest.raises(ValueError):
        closure([ModMatrix.identity(2, 4), ModMatrix.identity(3, 4)])


def test_limit():
    with pytest.raises(ClosureLimitExceeded) as err:
        closure(artin_images(5, 4), limit=100)
    assert err.value.partial > 100 and err.value.limit == 100


def test_pure_braid_closure_n3():
    G = closure(artin_images(3, 4))
    assert G.order == 8
    assert ModMatrix.identity(2, 4) in G
    H = closure(artin_images(3, 4)[:1])
    assert H.order == 2 and is_subgroup(H, G) and subgroup_index(G, H) == 4
    assert not is_subgroup(G, H)
    with pytest.raises(ValueError):
        subgroup_index(H, G)


@pytest.mark.parametrize("n, order", [(3, 6), (4, 24), (5, 120)])
def test_symmetric_images_mod2(n, order):
    assert closure(sigma_images(n, 2)).order == order


def test_independent_of_generator_order_and_workers():
    gens = transvection_squares(generating_sets(2, "odd"), 4)
    a = closure(gens)
    b = closure(gens[::-1], workers=3, chunk=64)
    assert equals(a, b) and a.order == 1024
    assert np.array_equal(a.keys, b.keys)


def test_generating_set_matches_mumford():
    a = closure(transvection_squares(generating_sets(2, "odd"), 4))
    b = closure(transvection_squares(mumford_gens(2), 4))
    assert equals(a, b)


def test_elements_and_queries():
    G = closure(artin_images(4, 4))
    els = G.elements()
    assert els.shape == (64, 4, 4)
    assert all(group_query(G, ModMatrix(e, 4)) for e in els[:10])
    assert not group_query(G, ModMatrix(3 * np.eye(4, dtype=np.int64), 4))
    with pytest.raises(ValueError):
        group_query(G, ModMatrix.identity(4, 8))
    with pytest.raises(ValueError):
        equals(G, closure([ModMatrix.identity(4, 8)]))


def test_level_kernel_order():
    assert level_kernel_order(1, "odd") == 8
    assert level_kernel_order(2, "odd") == 1024
    assert level_kernel_order(2, "even") == 32768
    with pytest.raises(ValueError):
        level_kernel_order(2, "neither")


def test_from_int_matrices():
    mats = from_int_matrices([np.eye(2, dtype=object) * 5], 4)
    assert mats[0].is_identity()
