"""Roots of a simply laced diagram, stored as integer coefficient tuples
over the simple roots in the diagram's own numbering.

The symmetric bilinear form is normalized so every simple root has norm 2.
Reflection in a norm-2 root alpha sends v to v - B(alpha, v) alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from . import linalg
from .diagram import Diagram, TypeClass, cartan, classify, neighbors

Root = tuple[int, ...]

_POSITIVE_CACHE: dict[tuple[Diagram, int | None], tuple[Root, ...]] = {}


def simple_root(d: Diagram, i: int) -> Root:
    if not 0 <= i < d.n:
        raise ValueError("vertex out of range")
    return tuple(1 if j == i else 0 for j in range(d.n))


def height(v) -> int:
    return sum(v)


def is_positive(v) -> bool:
    return any(x != 0 for x in v) and all(x >= 0 for x in v)


def is_negative(v) -> bool:
    return any(x != 0 for x in v) and all(x <= 0 for x in v)


def negate(v):
    return tuple(-x for x in v)


def bform(d: Diagram, u, v):
    """B(u, v) = u^T A v for the Cartan matrix A."""
    total = 2 * sum(x * y for x, y in zip(u, v))
    for a, b in d.edges:
        total -= u[a] * v[b] + u[b] * v[a]
    return total


def reflect(d: Diagram, alpha, v):
    """Reflection of v in a norm-2 vector alpha."""
    if bform(d, alpha, alpha) != 2:
        raise ValueError("can only reflect in a norm-2 vector")
    c = bform(d, alpha, v)
    return tuple(x - c * a for x, a in zip(v, alpha))


def simple_reflect(d: Diagram, i: int, v):
    c = 2 * v[i] - sum(v[j] for j in neighbors(d)[i])
    if c == 0:
        return tuple(v)
    out = list(v)
    out[i] -= c
    return tuple(out)


def positive_roots(d: Diagram, height_bound: int | None = None) -> tuple[Root, ...]:
    """All positive roots, by closing the simple roots under simple
    reflections.  Infinite types require an explicit height bound."""
    key = (d, height_bound)
    cached = _POSITIVE_CACHE.get(key)
    if cached is not None:
        return cached
    if height_bound is None and classify(d) is not TypeClass.FINITE:
        raise ValueError("infinite root system: pass a height bound")
    seen: set[Root] = set()
    frontier: list[Root] = []
    for i in range(d.n):
        r = simple_root(d, i)
        seen.add(r)
        frontier.append(r)
    while frontier:
        nxt: list[Root] = []
        for r in frontier:
            for i in range(d.n):
                s = simple_reflect(d, i, r)
                if s in seen or not is_positive(s):
                    continue
                if height_bound is not None and height(s) > height_bound:
                    continue
                seen.add(s)
                nxt.append(s)
        frontier = nxt
    result = tuple(sorted(seen, key=lambda r: (height(r), r)))
    _POSITIVE_CACHE[key] = result
    return result


_POSITIVE_SET: dict[tuple[Diagram, int | None], frozenset] = {}


def positive_root_set(d: Diagram, height_bound: int | None = None) -> frozenset:
    key = (d, height_bound)
    cached = _POSITIVE_SET.get(key)
    if cached is None:
        cached = frozenset(positive_roots(d, height_bound))
        _POSITIVE_SET[key] = cached
    return cached


def is_root(d: Diagram, v, height_bound: int | None = None) -> bool:
    if is_positive(v):
        return tuple(v) in positive_root_set(d, height_bound)
    if is_negative(v):
        return negate(v) in positive_root_set(d, height_bound)
    return False


# --- elementary roots ------------------------------------------------------

SIMPLE, SHORT_PATH_TOP, PARABOLIC_TOP = 1, 2, 3


@dataclass(frozen=True)
class ElementaryRoot:
    """A root that is either simple, the top root of a three-vertex path,
    or the top root of a minimal branched parabolic.  `support_for` lists
    the vertices i such that this root pairs with alpha_i in the basis."""
    root: Root
    kind: int
    data: tuple[int, ...]
    support_for: tuple[int, ...]


def eta(d: Diagram, h: int, k: int) -> Root:
    """Top root alpha_h + alpha_mid + alpha_k of the path h - mid - k."""
    common = set(neighbors(d)[h]) & set(neighbors(d)[k])
    if h == k or len(common) != 1:
        raise ValueError("vertices must be the two ends of a three-vertex path")
    mid = common.pop()
    out = [0] * d.n
    out[h] = out[mid] = out[k] = 1
    return tuple(out)


def _path_to_branch(d: Diagram, i: int) -> list[int]:
    # Arms are numbered consecutively outward, so the inward neighbor of
    # any arm vertex is the one with the smaller index.
    path = [i]
    prev = None
    while path[-1] != d.branch:
        inward = min(u for u in neighbors(d)[path[-1]] if u != prev)
        prev = path[-1]
        path.append(inward)
    return path


def _next_to_branch(d: Diagram, i: int) -> bool:
    return d.branch in neighbors(d)[i]


def theta(d: Diagram, i: int) -> Root:
    """Top root of the smallest branched parabolic containing vertex i:
    coefficient 1 at i and at the two branch neighbors off the path from
    i to the branch, coefficient 2 along the rest of that path."""
    if d.kind != "Y":
        raise ValueError("branched parabolics need a Y diagram")
    if i == d.branch:
        raise ValueError("vertex must differ from the branch vertex")
    path = _path_to_branch(d, i)
    out = [0] * d.n
    out[i] = 1
    for v in path[1:]:
        out[v] = 2
    for u in neighbors(d)[d.branch]:
        if u not in path:
            out[u] = 1
    root = tuple(out)
    assert bform(d, root, root) == 2 and bform(d, root, simple_root(d, i)) == 0
    return root


def elementary_roots(d: Diagram, i: int) -> tuple[ElementaryRoot, ...]:
    """The roots beta with alpha_i in their companion vertex set, i.e. the
    partners of alpha_i in the canonical basis.  There are n-1 of them in
    a Y diagram and n-2 in a path."""
    if not 0 <= i < d.n:
        raise ValueError("vertex out of range")
    adj = neighbors(d)
    out: list[ElementaryRoot] = []
    for j in range(d.n):
        if j != i and j not in adj[i]:
            sup = tuple(k for k in range(d.n) if k != j and k not in adj[j])
            out.append(ElementaryRoot(simple_root(d, j), SIMPLE, (j,), sup))
    nbrs = adj[i]
    for x in range(len(nbrs)):
        for y in range(x + 1, len(nbrs)):
            h, k = nbrs[x], nbrs[y]
            out.append(ElementaryRoot(eta(d, h, k), SHORT_PATH_TOP, (h, i, k), (i,)))
    if d.kind == "Y" and i != d.branch:
        root = theta(d, i)
        sup = adj[d.branch] if _next_to_branch(d, i) else (i,)
        out.append(ElementaryRoot(root, PARABOLIC_TOP, (i,), sup))
    out.sort(key=lambda e: (height(e.root), e.root))
    return tuple(out)


def delta(d: Diagram) -> Root:
    """Primitive positive integer vector spanning the kernel of the Cartan
    matrix of an affine diagram."""
    if classify(d) is not TypeClass.AFFINE:
        raise ValueError("only affine diagrams have a null vector")
    basis = linalg.nullspace(cartan(d))
    assert len(basis) == 1
    v = linalg.primitive_integer(basis[0])
    if not is_positive(v):
        v = negate(v)
    return v


# --- classical numbering and epsilon coordinates ---------------------------
#
# Path(n) realizes A_n on coordinates e_1..e_{n+1}: vertex k (0-based) is
# e_{k+1} - e_{k+2}.  Y(1,1,c) realizes D_n on e_1..e_n under the usual
# labels 1..n: a path 1..n-2 with both n-1 and n attached to n-2, where
# label j < n is e_j - e_{j+1} and label n is e_{n-1} + e_n.  Y(1,2,c)
# gets the usual E labels: a path 1..n-1 whose third vertex also carries
# the extra node x.

def paper_labels(d: Diagram, convention: str) -> dict[int, str]:
    """Map from internal vertex numbers to classical labels."""
    n = d.n
    if convention == "a":
        if d.kind != "Path":
            raise ValueError("path labels need a path diagram")
        return {k: str(k + 1) for k in range(n)}
    if convention == "d":
        if d.kind != "Y" or d.arms[0] != 1 or d.arms[1] != 1:
            raise ValueError("D labels need a diagram Y(1,1,c)")
        out = {0: str(n - 2), 1: str(n - 1), 2: str(n)}
        for t in range(1, n - 3 + 1):
            out[2 + t] = str(n - 2 - t)
        return out
    if convention == "e":
        if d.kind != "Y" or d.arms[0] != 1 or d.arms[1] != 2:
            raise ValueError("E labels need a diagram Y(1,2,c)")
        out = {1: "x", 2: "2", 3: "1", 0: "3"}
        for v in range(4, n):
            out[v] = str(v)
        return out
    raise ValueError("unknown labeling convention %r" % (convention,))


def root_from_labels(d: Diagram, convention: str, coeffs: dict[str, int]) -> Root:
    labels = paper_labels(d, convention)
    back = {lab: v for v, lab in labels.items()}
    out = [0] * d.n
    for lab, c in coeffs.items():
        out[back[str(lab)]] = c
    return tuple(out)


@dataclass(frozen=True)
class EpsilonForm:
    """A root written as e_i - e_j or e_i + e_j with i < j, 1-based."""
    sign: str  # "-" or "+"
    i: int
    j: int

    def __str__(self) -> str:
        return "(e%d%se%d)" % (self.i, self.sign, self.j)


def epsilon_coords(d: Diagram, root) -> EpsilonForm:
    """Write a root of Path(n) or Y(1,1,c) in two-coordinate form."""
    if d.kind == "Path":
        m = d.n + 1
        amb = [0] * m
        for k, c in enumerate(root):
            amb[k] += c
            amb[k + 1] -= c
    elif d.kind == "Y" and d.arms[0] == 1 and d.arms[1] == 1:
        n = d.n
        labels = paper_labels(d, "d")
        amb = [0] * n
        for v, c in enumerate(root):
            j = int(labels[v])
            if j < n:
                amb[j - 1] += c
                amb[j] -= c
            else:
                amb[n - 2] += c
                amb[n - 1] += c
    else:
        raise ValueError("two-coordinate form needs Path(n) or Y(1,1,c)")
    support = [(k, v) for k, v in enumerate(amb) if v != 0]
    if len(support) != 2 or {abs(v) for _, v in support} != {1}:
        raise ValueError("not a two-coordinate root: %r" % (root,))
    (ki, vi), (kj, vj) = support
    if vi == 1 and vj == -1:
        return EpsilonForm("-", ki + 1, kj + 1)
    if vi == 1 and vj == 1:
        return EpsilonForm("+", ki + 1, kj + 1)
    raise ValueError("not a positive two-coordinate root: %r" % (root,))
