"""Simply laced diagrams shaped like a path or like a letter Y.

A Y diagram Y(a, b, c) has a branch vertex of degree three and three arms
of a, b and c vertices.  The branch vertex is numbered 0 and the arms are
numbered consecutively outward: 1..a, then a+1..a+b, then a+b+1..n-1,
where n = a + b + c + 1.  A path diagram is numbered 0..n-1 along the path.

Familiar names in this scheme: Y(1,1,1) is D4, Y(1,1,c) is D_{c+3},
Y(1,2,2), Y(1,2,3), Y(1,2,4) are E6, E7, E8, and Path(n) is A_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q

from . import linalg


class TypeClass(Enum):
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Diagram:
    kind: str                          # "Y" or "Path"
    n: int
    arms: tuple[int, ...]              # (a, b, c) for Y diagrams, () for paths
    edges: tuple[tuple[int, int], ...]

    @property
    def branch(self) -> int | None:
        return 0 if self.kind == "Y" else None

    def __repr__(self) -> str:
        if self.kind == "Y":
            return "Y(%d,%d,%d)" % self.arms
        return "Path(%d)" % self.n


def y_diagram(a: int, b: int, c: int) -> Diagram:
    if min(a, b, c) < 1:
        raise ValueError("arm lengths must be at least 1")
    n = a + b + c + 1
    edges = []
    start = 1
    for arm in (a, b, c):
        edges.append((0, start))
        for v in range(start, start + arm - 1):
            edges.append((v, v + 1))
        start += arm
    return Diagram("Y", n, (a, b, c), tuple(sorted(edges)))


def path_diagram(n: int) -> Diagram:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Diagram("Path", n, (), tuple((i, i + 1) for i in range(n - 1)))


_NEIGHBORS: dict[Diagram, tuple[tuple[int, ...], ...]] = {}


def neighbors(d: Diagram) -> tuple[tuple[int, ...], ...]:
    cached = _NEIGHBORS.get(d)
    if cached is None:
        adj: list[list[int]] = [[] for _ in range(d.n)]
        for u, v in d.edges:
            adj[u].append(v)
            adj[v].append(u)
        cached = tuple(tuple(sorted(a)) for a in adj)
        _NEIGHBORS[d] = cached
    return cached


def adjacent(d: Diagram, i: int, j: int) -> bool:
    return j in neighbors(d)[i]


def endpoints(d: Diagram) -> tuple[int, ...]:
    return tuple(i for i in range(d.n) if len(neighbors(d)[i]) <= 1)


def cartan(d: Diagram) -> linalg.Mat:
    adj = neighbors(d)
    return tuple(
        tuple(2 if i == j else (-1 if j in adj[i] else 0) for j in range(d.n))
        for i in range(d.n)
    )


def _positive_definite(m: linalg.Mat) -> bool:
    n = len(m)
    for k in range(1, n + 1):
        sub = tuple(row[:k] for row in m[:k])
        if linalg.det(sub) <= 0:
            return False
    return True


def classify(d: Diagram) -> TypeClass:
    a = cartan(d)
    if _positive_definite(a):
        return TypeClass.FINITE
    if linalg.det(a) == 0:
        idx = range(d.n)
        for drop in idx:
            sub = tuple(
                tuple(a[i][j] for j in idx if j != drop)
                for i in idx if i != drop
            )
            if not _positive_definite(sub):
                return TypeClass.INDEFINITE
        return TypeClass.AFFINE
    return TypeClass.INDEFINITE


def is_finite(d: Diagram) -> bool:
    return classify(d) is TypeClass.FINITE


def parabolic_restrict(d: Diagram, vertices) -> tuple[Diagram, dict[int, int]]:
    """Induced subdiagram on the given vertices, renumbered to the standard
    scheme.  Returns the new diagram and the map old vertex -> new vertex.
    The vertex set must induce a connected path or Y shape."""
    vs = sorted(set(vertices))
    if not vs or any(v < 0 or v >= d.n for v in vs):
        raise ValueError("vertex set out of range")
    vset = set(vs)
    sub_adj = {v: [u for u in neighbors(d)[v] if u in vset] for v in vs}
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        for u in sub_adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if seen != vset:
        raise ValueError("vertex set is not connected")
    degree3 = [v for v in vs if len(sub_adj[v]) == 3]
    if any(len(sub_adj[v]) > 3 for v in vs) or len(degree3) > 1:
        raise ValueError("subdiagram is not a path or a Y shape")

    if not degree3:
        ends = [v for v in vs if len(sub_adj[v]) <= 1]
        start = min(ends)
        order = [start]
        prev = None
        while len(order) < len(vs):
            nxt = next(u for u in sub_adj[order[-1]] if u != prev)
            prev = order[-1]
            order.append(nxt)
        mapping = {v: k for k, v in enumerate(order)}
        return path_diagram(len(vs)), mapping

    br = degree3[0]
    arms = []
    for first in sub_adj[br]:
        arm = [first]
        prev = br
        while True:
            ext = [u for u in sub_adj[arm[-1]] if u != prev]
            if not ext:
                break
            prev = arm[-1]
            arm.append(ext[0])
        arms.append(arm)
    arms.sort(key=lambda arm: (len(arm), arm[0]))
    mapping = {br: 0}
    k = 1
    for arm in arms:
        for v in arm:
            mapping[v] = k
            k += 1
    new = y_diagram(*(len(arm) for arm in arms))
    return new, mapping


# --- hexagonal companion graphs -------------------------------------------

@dataclass(frozen=True)
class HGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def h_graph(a: int, b: int, c: int) -> HGraph:
    """Companion graph of Y(a, b, c): a hexagon 0..5 with a tail of a-2,
    b-2, c-2 extra vertices attached at alternating corners 0, 2, 4.
    A tail of length 0 changes nothing and length -1 deletes the corner."""
    if min(a, b, c) < 1:
        raise ValueError("arm lengths must be at least 1")
    verts = set(range(6))
    edges = {(i, (i + 1) % 6) for i in range(6)}
    nxt = 6
    for corner, t in zip((0, 2, 4), (a - 2, b - 2, c - 2)):
        if t == -1:
            verts.discard(corner)
        else:
            at = corner
            for _ in range(t):
                verts.add(nxt)
                edges.add((at, nxt))
                at = nxt
                nxt += 1
    edges = {e for e in edges if e[0] in verts and e[1] in verts}
    return HGraph(tuple(sorted(verts)),
                  tuple(sorted(tuple(sorted(e)) for e in edges)))


def component_count(g: HGraph) -> int:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = 0
    for v in g.vertices:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return comps


# --- serialization ---------------------------------------------------------

def diagram_to_json(d: Diagram) -> dict:
    if d.kind == "Y":
        a, b, c = d.arms
        return {"kind": "Y", "a": a, "b": b, "c": c}
    return {"kind": "Path", "n": d.n}


def diagram_from_json(obj: dict) -> Diagram:
    if obj.get("kind") == "Y":
        return y_diagram(obj["a"], obj["b"], obj["c"])
    if obj.get("kind") == "Path":
        return path_diagram(obj["n"])
    raise ValueError("unknown diagram kind: %r" % (obj.get("kind"),))
