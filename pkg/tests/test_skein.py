import pytest

from tworoots.diagram import path_diagram, y_diagram
from tworoots.skein import (ArcDiagram, arc_diagram, eps_label, point_count,
                            render_arcs, render_skein)


def test_point_counts():
    assert point_count(path_diagram(3)) == 4
    assert point_count(y_diagram(1, 1, 2)) == 5


def test_arc_diagram_a3():
    d = path_diagram(3)
    got = arc_diagram(d, ((1, 1, 0), (0, 1, 1)))
    assert got == ArcDiagram(4, ((1, 3, False), (2, 4, False)))


def test_arc_diagram_d4_starred():
    d = y_diagram(1, 1, 1)
    got = arc_diagram(d, ((1, 0, 1, 1), (1, 1, 1, 0)))
    assert got.arcs == ((1, 4, True), (2, 3, True))


def test_eps_label_sorted_by_position():
    d = path_diagram(3)
    assert eps_label(d, ((0, 1, 1), (1, 1, 0))) == "(e1-e3)(e2-e4)"


def test_render_arcs_plain():
    out = render_arcs(ArcDiagram(4, ((1, 3, False),)))
    assert out.splitlines() == [
        "1   2   3   4",
        "+-------+",
    ]


def test_render_arcs_star_in_the_middle():
    out = render_arcs(ArcDiagram(4, ((2, 4, True),)))
    assert out.splitlines()[1] == "    +---*---+"


def test_render_skein_term_count():
    d = y_diagram(1, 1, 1)
    text = render_skein(d, ((1, 0, 1, 1), (1, 1, 1, 0)))
    assert text.count(" * ") == 3
    assert text.startswith("input: (e1+e4)(e2+e3)\n")


def test_render_skein_needs_two_coordinate_type():
    d = y_diagram(1, 2, 2)
    with pytest.raises(ValueError):
        render_skein(d, ((1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)))
