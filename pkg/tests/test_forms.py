from fractions import Fraction

import pytest

from tworoots.diagram import path_diagram, y_diagram
from tworoots.forms import (action_kernel_order, affine_radical_witness,
                            bprime, btilde, c_apply, decompose_s2v, gram,
                            kernel_intersection, norm2_witness, norm_search,
                            radical_basis, virasoro)
from tworoots.orbits import orbit_tables
from tworoots.roots import simple_root
from tworoots.symsquare import canonical_basis, m_functional, vee


def test_btilde_symmetric_and_even():
    d = path_diagram(4)
    b = canonical_basis(d)
    for e in b.elements[:3]:
        for f in b.elements[:3]:
            v = btilde(d, e.matrix, f.matrix)
            assert v == btilde(d, f.matrix, e.matrix)
            assert v % 2 == 0


def test_bprime_is_half_of_btilde():
    d = y_diagram(1, 1, 1)
    b = canonical_basis(d)
    s, t = b.elements[0].matrix, b.elements[5].matrix
    assert 2 * bprime(d, s, t) == btilde(d, s, t)


def test_basis_two_roots_have_norm_four():
    d = y_diagram(1, 1, 2)
    for e in canonical_basis(d).elements:
        assert bprime(d, e.matrix, e.matrix) == 4


def test_c_apply_is_reflection_minus_identity():
    d = path_diagram(3)
    a = (1, 1, 0)
    s = vee((0, 0, 1), (1, 0, 0))
    out = c_apply(d, a, s)
    # applying twice recovers -2 times itself plus nothing new on this input
    assert c_apply(d, a, out) == tuple(tuple(-2 * x for x in row) for row in out)


def test_gram_mod_two_parity():
    a3 = path_diagram(3)
    mats = [e.matrix for e in canonical_basis(a3).elements]
    assert all(x == 0 for row in gram(a3, mats, p=2) for x in row)
    a4 = path_diagram(4)
    mats = [e.matrix for e in canonical_basis(a4).elements]
    assert any(x for row in gram(a4, mats, p=2) for x in row)


def test_radical_basis_of_singular_gram():
    g = ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)))
    rad = radical_basis(g)
    assert len(rad) == 1


def test_virasoro_element():
    d = y_diagram(1, 1, 1)
    om = virasoro(d)
    assert btilde(d, om, om) == 4
    assert m_functional(d, om) == 4


def test_decompose_a3():
    rep = decompose_s2v(path_diagram(3))
    assert rep["dim_sym_square"] == 6
    assert rep["invariant_dim"] == 1
    assert rep["module_dim"] == 2
    assert rep["orbit_summands"] == [{"id": 1, "dim": 2, "radical_dim": 0}]
    assert rep["complement_dim"] == 3


def test_decompose_affine_raises():
    with pytest.raises(ValueError):
        decompose_s2v(y_diagram(1, 2, 5))


def test_decompose_indefinite_reports_radical():
    rep = decompose_s2v(y_diagram(2, 2, 3))
    assert "module_radical_dim" in rep
    assert rep["module_dim"] == 35


def test_affine_radical_witness_shape():
    d = y_diagram(1, 3, 3)
    w = affine_radical_witness(d)
    assert len(w["elements"]) == d.n
    assert len(w["delta"]) == d.n


def test_kernel_state_cap():
    d = y_diagram(1, 1, 1)
    t = orbit_tables(d)[0]
    with pytest.raises(RuntimeError):
        action_kernel_order(d, t, 192, state_cap=3)


def test_kernel_divisibility_guard():
    d = y_diagram(1, 1, 1)
    t = orbit_tables(d)[0]
    with pytest.raises(RuntimeError):
        action_kernel_order(d, t, 7)


def test_norm2_witness_rejects_other_shapes():
    with pytest.raises(ValueError):
        norm2_witness(1, 1, 1)


def test_norm2_witness_values():
    w = norm2_witness(1, 3, 4)
    assert w["norm"] == 2
    assert w["sign_coherent"] and w["sign"] == 1


def test_d4_orbit_kernels_meet_in_the_center():
    rep = kernel_intersection(y_diagram(1, 1, 1))
    assert rep["group_order"] == 192
    assert rep["kernel_orders"] == (8, 8, 8)
    assert rep["intersection_order"] == 2
    assert rep["is_center"]


def test_norm_search_small_boxes():
    d = path_diagram(3)
    hits = norm_search(d, 4, 1)
    assert len(hits) == 6
    pos = {t.coords[p] for t in orbit_tables(d) for p in t.members}
    assert all(c in pos or tuple(-x for x in c) in pos for c in hits)
    assert norm_search(d, 2, 1) == ()


def test_norm_search_d4_box_is_exactly_the_two_roots():
    d = y_diagram(1, 1, 1)
    hits = norm_search(d, 4, 1)
    pos = {t.coords[p] for t in orbit_tables(d) for p in t.members}
    assert len(hits) == 2 * len(pos) == 36
    assert all(c in pos or tuple(-x for x in c) in pos for c in hits)


def test_norm_search_refuses_huge_boxes():
    with pytest.raises(ValueError):
        norm_search(y_diagram(1, 1, 2), 4, 1)
