"""Exact arithmetic for 2-roots of simply laced Weyl groups."""

from .diagram import (Diagram, TypeClass, classify, h_graph, component_count,
                      parabolic_restrict, path_diagram, y_diagram)
from .roots import (ElementaryRoot, EpsilonForm, bform, delta, elementary_roots,
                    epsilon_coords, eta, height, positive_roots, reflect,
                    simple_root, theta)
from .symsquare import (CanonicalBasis, canonical_basis, components,
                        m_functional, sign_coherent, vee)

__all__ = [
    "Diagram", "TypeClass", "classify", "h_graph", "component_count",
    "parabolic_restrict", "path_diagram", "y_diagram",
    "ElementaryRoot", "EpsilonForm", "bform", "delta", "elementary_roots",
    "epsilon_coords", "eta", "height", "positive_roots", "reflect",
    "simple_root", "theta",
    "CanonicalBasis", "canonical_basis", "components", "m_functional",
    "sign_coherent", "vee",
]
