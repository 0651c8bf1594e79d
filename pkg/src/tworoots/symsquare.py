"""Symmetric squares of root-lattice elements.

An element of the symmetric square it stored as a symmetric n x n matrix S
whose (i, j) entry is the coefficient of alpha_i (x) alpha_j.  The product
a v b of two vectors has matrix a b^T + b a^T, reflections act by congruence
R S R^T, and the distinguished codimension-one submodule is the kernel of
S |-> trace(A S).

The canonical basis pairs each simple root alpha_i with its elementary
partners; expansions over it are computed by one exact rational solve that
is factored once per diagram and reused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from . import linalg
from .diagram import Diagram, TypeClass, adjacent, cartan, classify
from .roots import (Root, bform, elementary_roots, height, is_root,
                    positive_roots, simple_root)

SymMatrix = tuple[tuple, ...]


def vee(a, b) -> SymMatrix:
    """Symmetrized product: matrix of a (x) b + b (x) a."""
    n = len(a)
    return tuple(tuple(a[i] * b[j] + b[i] * a[j] for j in range(n))
                 for i in range(n))


def zero_matrix(n: int) -> SymMatrix:
    return tuple((0,) * n for _ in range(n))


def madd(s: SymMatrix, t: SymMatrix) -> SymMatrix:
    return tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(s, t))


def msub(s: SymMatrix, t: SymMatrix) -> SymMatrix:
    return tuple(tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(s, t))


def mneg(s: SymMatrix) -> SymMatrix:
    return tuple(tuple(-x for x in row) for row in s)


def mscale(c, s: SymMatrix) -> SymMatrix:
    return tuple(tuple(c * x for x in row) for row in s)


def is_zero(s: SymMatrix) -> bool:
    return all(x == 0 for row in s for x in row)


def is_nonnegative(s: SymMatrix) -> bool:
    return all(x >= 0 for row in s for x in row)


def m_functional(d: Diagram, s: SymMatrix):
    """trace(A S): vanishes exactly on the codimension-one submodule.
    Takes the value 2 B(alpha, beta) on alpha v beta."""
    total = 2 * sum(s[i][i] for i in range(d.n))
    for u, v in d.edges:
        total -= 2 * s[u][v]
    return total


def standard_coords(s: SymMatrix) -> tuple:
    """Coordinates over the basis alpha_i v alpha_j (i <= j), ordered
    lexicographically: off-diagonal entries as they stand, half of the
    diagonal."""
    n = len(s)
    out = []
    for i in range(n):
        for j in range(i, n):
            out.append(Q(s[i][i], 2) if i == j else s[i][j])
    return tuple(_as_int(x) for x in out)


def _as_int(x):
    if isinstance(x, Q) and x.denominator == 1:
        return int(x)
    return x


def reflection_matrix(d: Diagram, alpha) -> linalg.Mat:
    """Matrix of reflection in a norm-2 vector, acting on coefficient
    columns."""
    if bform(d, alpha, alpha) != 2:
        raise ValueError("can only reflect in a norm-2 vector")
    a = cartan(d)
    weights = linalg.mat_vec(a, alpha)
    n = d.n
    return tuple(
        tuple((1 if r == c else 0) - alpha[r] * weights[c] for c in range(n))
        for r in range(n)
    )


_SIMPLE_MATRICES: dict[Diagram, tuple[linalg.Mat, ...]] = {}


def simple_matrices(d: Diagram) -> tuple[linalg.Mat, ...]:
    cached = _SIMPLE_MATRICES.get(d)
    if cached is None:
        cached = tuple(reflection_matrix(d, simple_root(d, i))
                       for i in range(d.n))
        _SIMPLE_MATRICES[d] = cached
    return cached


def conjugate(r: linalg.Mat, s: SymMatrix) -> SymMatrix:
    return linalg.mat_mul(linalg.mat_mul(r, s), linalg.transpose(r))


def apply_simple(d: Diagram, i: int, s: SymMatrix) -> SymMatrix:
    return conjugate(simple_matrices(d)[i], s)


def apply_word(d: Diagram, word, s: SymMatrix) -> SymMatrix:
    """Act by s_{w[0]} s_{w[1]} ... s_{w[-1]} (rightmost letter first)."""
    for i in reversed(word):
        s = apply_simple(d, i, s)
    return s


def root_pair(a, b) -> tuple[Root, Root]:
    """Canonically ordered pair of coefficient vectors."""
    u, v = tuple(a), tuple(b)
    return (u, v) if (height(u), u) <= (height(v), v) else (v, u)


# --- canonical basis -------------------------------------------------------

@dataclass(frozen=True)
class BasisElement:
    matrix: SymMatrix
    pair: tuple[Root, Root]
    labels: tuple[tuple[int, Root], ...]  # (vertex i, elementary partner)

    def __repr__(self) -> str:
        i, beta = self.labels[0]
        return "a%d v %s" % (i, "+".join(
            ("a%d" % k) if c == 1 else ("%da%d" % (c, k))
            for k, c in enumerate(beta) if c) or "0")


@dataclass(frozen=True)
class ActionCase:
    kind: str               # "fix" | "negate" | "add"
    partner: int | None = None


class CanonicalBasis:
    """The distinguished basis alpha_i v beta, beta elementary for i,
    together with the exact expansion solver over it."""

    def __init__(self, d: Diagram):
        self.diagram = d
        mats: list[SymMatrix] = []
        pairs: list[tuple[Root, Root]] = []
        labels: list[list[tuple[int, Root]]] = []
        index: dict[SymMatrix, int] = {}
        for i in range(d.n):
            e_i = simple_root(d, i)
            for elem in elementary_roots(d, i):
                m = vee(e_i, elem.root)
                k = index.get(m)
                if k is None:
                    index[m] = len(mats)
                    mats.append(m)
                    pairs.append(root_pair(e_i, elem.root))
                    labels.append([(i, elem.root)])
                else:
                    labels[k].append((i, elem.root))
        self.elements = tuple(
            BasisElement(m, p, tuple(lbl))
            for m, p, lbl in zip(mats, pairs, labels)
        )
        self.index = index
        self.pair_index = {e.pair: k for k, e in enumerate(self.elements)}
        by_vertex: dict[int, list[int]] = {i: [] for i in range(d.n)}
        for k, e in enumerate(self.elements):
            for i, _ in e.labels:
                by_vertex[i].append(k)
        self._by_vertex = {i: tuple(v) for i, v in by_vertex.items()}

        k = len(self.elements)
        if d.kind == "Y":
            assert k == d.n * (d.n + 1) // 2 - 1
        elif d.n >= 3:
            assert k == (d.n - 2) * (d.n + 1) // 2

        self._cols = tuple(standard_coords(m) for m in mats)
        if k:
            rows_t, pivots = linalg.rref(self._cols)  # K x D matrix
            if len(pivots) != k:
                raise RuntimeError("canonical elements are not independent")
            self._pivot_rows = pivots
            square = tuple(tuple(self._cols[c][r] for c in range(k))
                           for r in self._pivot_rows)
            self._solve_inv = linalg.inverse(square)
        else:
            self._pivot_rows = ()
            self._solve_inv = ()
        self._actions: dict[int, tuple[ActionCase, ...]] = {}
        self._action_mats: dict[int, linalg.Mat] = {}
        self._action_np = None

    def __len__(self) -> int:
        return len(self.elements)

    def wrt(self, i: int) -> tuple[int, ...]:
        """Indices of the elements alpha_i v beta for this vertex."""
        return self._by_vertex[i]

    def index_of_pair(self, a, b) -> int:
        return self.pair_index[root_pair(a, b)]

    # -- expansion ---------------------------------------------------------

    def expand(self, s: SymMatrix) -> tuple:
        """Exact coordinates of s over the basis; raises ValueError when s
        is outside the span."""
        if len(s) != self.diagram.n:
            raise ValueError("matrix size %d does not match diagram rank %d"
                             % (len(s), self.diagram.n))
        v = standard_coords(s)
        x = linalg.mat_vec(self._solve_inv,
                           tuple(v[r] for r in self._pivot_rows))
        for dd in range(len(v)):
            if sum(col[dd] * x[c] for c, col in enumerate(self._cols)) != v[dd]:
                if self.diagram.kind == "Y" and m_functional(self.diagram, s) != 0:
                    raise ValueError("element lies outside the codimension-one "
                                     "submodule (nonzero trace functional)")
                raise ValueError("element is not in the span of the canonical basis")
        return tuple(_as_int(Q(c)) for c in x)

    def expand_pair(self, a, b) -> tuple:
        return self.expand(vee(a, b))

    def combine(self, coords) -> SymMatrix:
        s = zero_matrix(self.diagram.n)
        for c, e in zip(coords, self.elements):
            if c:
                s = madd(s, mscale(c, e.matrix))
        return s

    def ht2(self, s: SymMatrix):
        return sum(self.expand(s))

    def leq2(self, s: SymMatrix, t: SymMatrix) -> bool:
        return all(c >= 0 for c in self.expand(msub(t, s)))

    # -- simple reflection action -----------------------------------------

    def simple_action(self, i: int) -> tuple[ActionCase, ...]:
        cached = self._actions.get(i)
        if cached is not None:
            return cached
        out = []
        for e in self.elements:
            image = apply_simple(self.diagram, i, e.matrix)
            if image == e.matrix:
                out.append(ActionCase("fix"))
            elif image == mneg(e.matrix):
                out.append(ActionCase("negate"))
            else:
                diff = msub(image, e.matrix)
                partner = self.index.get(diff)
                if partner is None:
                    raise RuntimeError("reflection image left the basis lattice")
                out.append(ActionCase("add", partner))
        result = tuple(out)
        self._actions[i] = result
        return result

    def action_matrix(self, i: int) -> linalg.Mat:
        cached = self._action_mats.get(i)
        if cached is not None:
            return cached
        k = len(self.elements)
        rows = [[0] * k for _ in range(k)]
        for j, case in enumerate(self.simple_action(i)):
            if case.kind == "fix":
                rows[j][j] = 1
            elif case.kind == "negate":
                rows[j][j] = -1
            else:
                rows[j][j] = 1
                rows[case.partner][j] = 1
        result = linalg.mat(rows)
        self._action_mats[i] = result
        return result

    def word_matrix(self, word) -> linalg.Mat:
        """Exact integer matrix of s_{w[0]} ... s_{w[-1]} over the basis;
        concatenating words multiplies the matrices."""
        k = len(self.elements)
        m = linalg.identity(k)
        for i in reversed(word):
            m = linalg.mat_mul(self.action_matrix(i), m)
        return m

    def action_matrices_np(self):
        if self._action_np is None:
            import numpy as np

            self._action_np = tuple(
                np.array(self.action_matrix(i), dtype=np.int64)
                for i in range(self.diagram.n)
            )
        return self._action_np

    def word_column(self, word, j: int) -> tuple[int, ...]:
        """Column j of word_matrix(word), via fast integer arithmetic.
        Column sums at most double per letter, so values stay below 2**62
        for any word of up to 60 letters; longer words are refused."""
        if len(word) > 60:
            raise ValueError("word too long for the fast path")
        import numpy as np

        mats = self.action_matrices_np()
        v = np.zeros(len(self.elements), dtype=np.int64)
        v[j] = 1
        for i in reversed(word):
            v = mats[i] @ v
        return tuple(int(x) for x in v)

    # -- star maps between vertex classes ----------------------------------

    def star_map(self, i: int, j: int) -> dict[int, int]:
        """For adjacent vertices, the bijection sending alpha_i v beta to
        s_i s_j of it, which lands on an alpha_j element."""
        if not adjacent(self.diagram, i, j):
            raise ValueError("star maps need adjacent vertices")
        out = {}
        for k in self.wrt(i):
            s = self.elements[k].matrix
            t = apply_simple(self.diagram, i, apply_simple(self.diagram, j, s))
            target = self.index.get(t)
            if target is None or target not in self.wrt(j):
                raise RuntimeError("star map left the expected vertex class")
            out[k] = target
        return out


_BASIS_CACHE: dict[Diagram, CanonicalBasis] = {}


def canonical_basis(d: Diagram) -> CanonicalBasis:
    cached = _BASIS_CACHE.get(d)
    if cached is None:
        cached = CanonicalBasis(d)
        _BASIS_CACHE[d] = cached
    return cached


def sign_coherent(coords) -> tuple[bool, int | None]:
    """Whether all nonzero coordinates share one sign; the sign is +1, -1,
    or 0 for the zero vector."""
    pos = any(c > 0 for c in coords)
    neg = any(c < 0 for c in coords)
    if pos and neg:
        return False, None
    if pos:
        return True, 1
    if neg:
        return True, -1
    return True, 0


# --- component recovery ---------------------------------------------------

def components(d: Diagram, s: SymMatrix,
               height_bound: int | None = None) -> tuple[Root, Root]:
    """Recover {alpha, beta} from the matrix of alpha v beta.  Candidate
    first components are enumerated roots; the partner is then forced
    linearly and checked exactly.  The returned pair is canonically
    ordered, preferring the representative with positive components."""
    if is_zero(s):
        raise ValueError("the zero element has no components")
    n = d.n
    maxe = max(abs(x) for row in s for x in row)
    if classify(d) is TypeClass.FINITE:
        bound = None
    else:
        bound = height_bound if height_bound is not None else n * maxe + 2
    for a in positive_roots(d, bound):
        k = next(i for i in range(n) if a[i] != 0)
        bk = Q(s[k][k], 2 * a[k])
        b = tuple((Q(s[k][j]) - bk * a[j]) / a[k] for j in range(n))
        if any(x.denominator != 1 for x in b):
            continue
        b = tuple(int(x) for x in b)
        if all(x == 0 for x in b) or bform(d, b, b) != 2:
            continue
        if bform(d, a, b) != 0 or vee(a, b) != s:
            continue
        if not is_root(d, b, bound):
            continue
        return root_pair(a, b)
    raise ValueError("not a product of two orthogonal roots "
                     "(within the search bound)")
