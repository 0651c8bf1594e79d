import random

import pytest

from tworoots.diagram import path_diagram, y_diagram
from tworoots.roots import simple_root
from tworoots.symsquare import (apply_word, canonical_basis, components,
                                m_functional, root_pair, sign_coherent, vee)


def test_vee_symmetric():
    a, b = (1, 0, 0), (0, 0, 1)
    s = vee(a, b)
    assert s == tuple(tuple(row) for row in zip(*s))
    assert s[0][2] == 1 and s[0][0] == 0


def test_trace_functional_vanishes_on_two_roots():
    # m(a v b) = 2 B(a, b), so it is zero exactly on orthogonal pairs
    d = path_diagram(3)
    assert m_functional(d, vee((1, 1, 0), (0, 1, 1))) == 0
    assert m_functional(d, vee((1, 0, 0), (1, 0, 0))) == 4


def test_root_pair_sorted_by_height():
    a, b = (1, 1, 1), (0, 1, 0)
    assert root_pair(a, b) == (b, a)
    assert root_pair(b, a) == (b, a)


def test_d4_basis_has_nine_elements():
    b = canonical_basis(y_diagram(1, 1, 1))
    assert len(b) == 9
    assert len(b.wrt(0)) == 3
    # a3 v a1 is elementary for both of its vertices
    assert b.elements[3].labels == (((1, (0, 0, 0, 1))), (3, (0, 1, 0, 0)))


def test_basis_sizes():
    assert len(canonical_basis(path_diagram(4))) == 5
    assert len(canonical_basis(y_diagram(1, 2, 2))) == 20


def test_expand_identity_on_basis():
    b = canonical_basis(y_diagram(1, 1, 2))
    for k, e in enumerate(b.elements):
        coords = b.expand(e.matrix)
        assert coords[k] == 1 and sum(map(abs, coords)) == 1


def test_expand_combine_round_trip():
    b = canonical_basis(path_diagram(5))
    rng = random.Random(7)
    for _ in range(20):
        coords = tuple(rng.randint(-3, 3) for _ in range(len(b)))
        assert b.expand(b.combine(coords)) == coords


def test_expand_rejects_wrong_size():
    b = canonical_basis(path_diagram(4))
    with pytest.raises(ValueError):
        b.expand(vee((1, 0, 0), (0, 0, 1)))


def test_expand_rejects_outside_span():
    b = canonical_basis(path_diagram(4))
    with pytest.raises(ValueError):
        b.expand(vee((1, 0, 0, 0), (0, 1, 0, 0)))


def test_expand_fork_trace_error_message():
    b = canonical_basis(y_diagram(1, 1, 1))
    with pytest.raises(ValueError, match="trace"):
        b.expand(vee((1, 0, 0, 0), (1, 0, 0, 0)))


def test_skein_expansion_a3():
    b = canonical_basis(path_diagram(3))
    assert b.expand_pair((1, 1, 0), (0, 1, 1)) == (1, 1)


def test_skein_expansion_d4():
    b = canonical_basis(y_diagram(1, 1, 1))
    coords = b.expand_pair((1, 0, 1, 1), (1, 1, 1, 0))
    assert [k for k, c in enumerate(coords) if c] == [1, 3, 7]
    assert set(coords) == {0, 1}


def test_reflections_are_involutions():
    d = y_diagram(1, 1, 2)
    b = canonical_basis(d)
    k = len(b)
    eye = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    for i in range(d.n):
        assert b.word_matrix([i, i]) == eye


def test_braid_relation_on_basis():
    d = path_diagram(4)
    b = canonical_basis(d)
    k = len(b)
    eye = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    assert b.word_matrix([1, 2] * 3) == eye
    assert b.word_matrix([0, 2] * 2) == eye


def test_word_matrix_is_multiplicative():
    d = y_diagram(1, 2, 2)
    b = canonical_basis(d)
    rng = random.Random(3)
    for _ in range(5):
        u = [rng.randrange(d.n) for _ in range(4)]
        w = [rng.randrange(d.n) for _ in range(5)]
        lhs = b.word_matrix(u + w)
        uw = b.word_matrix(u), b.word_matrix(w)
        prod = tuple(tuple(sum(uw[0][i][t] * uw[1][t][j] for t in range(len(b)))
                           for j in range(len(b))) for i in range(len(b)))
        assert lhs == prod


def test_word_column_matches_word_matrix():
    d = y_diagram(1, 1, 3)
    b = canonical_basis(d)
    rng = random.Random(11)
    word = [rng.randrange(d.n) for _ in range(12)]
    m = b.word_matrix(word)
    for j in [0, 7, len(b) - 1]:
        assert b.word_column(word, j) == tuple(row[j] for row in m)


def test_word_column_refuses_long_words():
    b = canonical_basis(path_diagram(3))
    with pytest.raises(ValueError):
        b.word_column([0] * 61, 0)


def test_star_map_requires_adjacency():
    b = canonical_basis(y_diagram(1, 1, 1))
    with pytest.raises(ValueError):
        b.star_map(1, 2)


def test_components_round_trip_d4():
    d = y_diagram(1, 1, 1)
    b = canonical_basis(d)
    for e in b.elements:
        assert components(d, e.matrix) == e.pair


def test_components_rejects_non_two_root():
    d = path_diagram(3)
    with pytest.raises(ValueError):
        components(d, vee((1, 0, 0), (0, 1, 0)))


def test_sign_coherent():
    assert sign_coherent((0, 2, 1)) == (True, 1)
    assert sign_coherent((0, -2, -1)) == (True, -1)
    assert sign_coherent((0, 0, 0)) == (True, 0)
    assert sign_coherent((1, -1, 0)) == (False, None)


def test_conjugate_by_simple_preserves_two_roots():
    d = y_diagram(1, 1, 2)
    p = (simple_root(d, 1), simple_root(d, 2))
    s = vee(*p)
    out = apply_word(d, [0, 3, 4], s)
    assert components(d, out) is not None
