import random

import pytest

from tworoots.diagram import path_diagram, y_diagram
from tworoots.orbits import (cgw_less, closed_form_highest, highest_pair,
                             ht2_of_pair, is_locally_highest, monoidal_covers,
                             orbit_of, orbit_tables, orthogonal_pairs,
                             pair_action, simple_pair_action)
from tworoots.roots import simple_root, theta


def test_orthogonal_pairs_a3():
    got = orthogonal_pairs(path_diagram(3))
    assert got == (
        ((0, 0, 1), (1, 0, 0)),
        ((0, 1, 0), (1, 1, 1)),
        ((0, 1, 1), (1, 1, 0)),
    )


def test_pair_action_applies_rightmost_first():
    d = path_diagram(4)
    p = (simple_root(d, 0), simple_root(d, 2))
    one = simple_pair_action(d, 1, p)
    two = simple_pair_action(d, 3, one)
    assert pair_action(d, [3, 1], p) == two


def test_d4_orbit_tables():
    tabs = orbit_tables(y_diagram(1, 1, 1))
    assert [t.id for t in tabs] == [1, 2, 3]
    assert [t.size for t in tabs] == [6, 6, 6]
    used = sorted(k for t in tabs for k in t.basis_members)
    assert used == list(range(9))
    for t in tabs:
        assert t.highest in t.coords
        assert sum(t.coords[t.highest]) == t.height


def test_a5_single_orbit():
    (t,) = orbit_tables(path_diagram(5))
    assert t.size == 45
    assert t.height == 10


def test_orbit_tables_need_finite_type():
    with pytest.raises(ValueError):
        orbit_tables(y_diagram(2, 2, 2))


def test_orbit_of_matches_tables():
    d = y_diagram(1, 1, 2)
    tabs = orbit_tables(d)
    small = min(tabs, key=lambda t: t.size)
    got = orbit_of(d, small.members[0], height_bound=20)
    assert set(got) == set(small.members)


def test_cgw_less_orients_towards_the_top():
    d = y_diagram(1, 1, 1)
    t = orbit_tables(d)[0]
    p, top = t.members[0], t.highest
    if p != top:
        assert cgw_less(d, p, top)
        assert not cgw_less(d, top, p)


def test_monoidal_covers_raise_height():
    d = y_diagram(1, 1, 2)
    t = max(orbit_tables(d), key=lambda x: x.size)
    p = t.members[0]
    for _i, q in monoidal_covers(d, p):
        assert ht2_of_pair(d, q) > ht2_of_pair(d, p)


def test_locally_highest_at_the_top_only():
    d = y_diagram(1, 1, 2)
    for t in orbit_tables(d):
        assert is_locally_highest(d, t.highest)
        assert not monoidal_covers(d, t.highest)
        lows = [p for p in t.members
                if ht2_of_pair(d, p) < t.height and is_locally_highest(d, p)]
        assert lows == []


def test_highest_pair_climbs_to_the_table_top():
    d = y_diagram(1, 2, 2)
    (t,) = orbit_tables(d)
    rng = random.Random(1)
    for _ in range(5):
        start = rng.choice(t.members)
        assert highest_pair(d, start, rng=rng) == t.highest


def test_highest_pair_step_budget():
    d = y_diagram(1, 1, 1)
    t = orbit_tables(d)[0]
    low = min(t.members, key=lambda p: ht2_of_pair(d, p))
    with pytest.raises(RuntimeError):
        highest_pair(d, low, max_steps=0)


def test_closed_form_matches_climb_for_d6():
    d = y_diagram(1, 1, 3)
    assert set(closed_form_highest(d)) == {t.highest for t in orbit_tables(d)}


def test_closed_form_needs_finite_type():
    with pytest.raises(ValueError):
        closed_form_highest(y_diagram(2, 2, 2))


def test_d5_strictness_witness():
    """A 2-root below the top in coordinates but minimal for the move order."""
    d = y_diagram(1, 1, 2)
    p = (simple_root(d, 0), theta(d, 4))
    assert ht2_of_pair(d, p) == 3
    downs = [i for i in range(d.n)
             if ht2_of_pair(d, pair_action(d, [i], p)) < 3]
    assert downs == []
    assert sorted(i for i, _q in monoidal_covers(d, p)) == [1, 2, 3]
