"""Self-check suites.

Each suite re-derives a family of known facts from scratch and compares
against frozen expected values.  The CLI subcommand ``verify`` and the
acceptance tests both run these; a Check with ok=False means a real
regression, details carry the numbers.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import linalg
from .diagram import (TypeClass, adjacent, classify, component_count, h_graph,
                      path_diagram, y_diagram)
from .forms import (action_kernel_order, affine_radical_witness, bprime,
                    btilde, c_apply, decompose_s2v, gram, norm2_witness,
                    virasoro)
from .orbits import (closed_form_highest, ht2_of_pair, monoidal_covers,
                     orbit_tables, orthogonal_pairs, pair_action,
                     highest_pair)
from .roots import (bform, delta, epsilon_coords, is_root, negate,
                    positive_roots, simple_root, theta)
from .skein import arc_diagram, render_skein
from .symsquare import (apply_simple, canonical_basis, m_functional, madd,
                        mscale, sign_coherent, standard_coords, vee)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _family(tag):
    """Diagram for a short label like A5, D6, E7."""
    kind, n = tag[0], int(tag[1:])
    if kind == "A":
        return path_diagram(n)
    if kind == "D":
        return y_diagram(1, 1, n - 3)
    return y_diagram(1, 2, n - 4)


# --- 1. classification and canonical bases ---------------------------------

CLASSIFICATION = [
    (("path", 2), "FINITE"), (("path", 5), "FINITE"), (("path", 8), "FINITE"),
    (("y", 1, 1, 1), "FINITE"), (("y", 1, 1, 5), "FINITE"),
    (("y", 1, 2, 2), "FINITE"), (("y", 1, 2, 3), "FINITE"),
    (("y", 1, 2, 4), "FINITE"),
    (("y", 2, 2, 2), "AFFINE"), (("y", 1, 3, 3), "AFFINE"),
    (("y", 1, 2, 5), "AFFINE"),
    (("y", 2, 2, 3), "INDEFINITE"), (("y", 1, 3, 4), "INDEFINITE"),
    (("y", 1, 2, 6), "INDEFINITE"), (("y", 3, 3, 3), "INDEFINITE"),
    (("y", 2, 3, 3), "INDEFINITE"),
]

D4_BASIS_PAIRS = (
    ((1, 0, 0, 0), (1, 0, 1, 1)),
    ((1, 0, 0, 0), (1, 1, 0, 1)),
    ((1, 0, 0, 0), (1, 1, 1, 0)),
    ((0, 0, 0, 1), (0, 1, 0, 0)),
    ((0, 0, 1, 0), (0, 1, 0, 0)),
    ((0, 1, 0, 0), (2, 1, 1, 1)),
    ((0, 0, 0, 1), (0, 0, 1, 0)),
    ((0, 0, 1, 0), (2, 1, 1, 1)),
    ((0, 0, 0, 1), (2, 1, 1, 1)),
)


def suite_basis(seed=0):
    out = []
    bad = []
    for spec, want in CLASSIFICATION:
        d = path_diagram(spec[1]) if spec[0] == "path" else y_diagram(*spec[1:])
        if classify(d).name != want:
            bad.append(repr(d))
    out.append(Check("basis: classification of 16 sample diagrams",
                     not bad, "mismatches: %s" % (bad or "none")))

    bad = []
    for a, b, c in itertools.combinations_with_replacement(range(1, 5), 3):
        d = y_diagram(a, b, c)
        want = d.n * (d.n + 1) // 2 - 1
        if len(canonical_basis(d)) != want:
            bad.append(repr(d))
    out.append(Check("basis: size n(n+1)/2 - 1 for all Y(a,b,c), a<=b<=c<=4",
                     not bad, "mismatches: %s" % (bad or "none")))

    bad = []
    for n in range(3, 9):
        d = path_diagram(n)
        if len(canonical_basis(d)) != (n - 2) * (n + 1) // 2:
            bad.append(repr(d))
    out.append(Check("basis: size (n-2)(n+1)/2 for paths n=3..8",
                     not bad, "mismatches: %s" % (bad or "none")))

    got = tuple(e.pair for e in canonical_basis(y_diagram(1, 1, 1)).elements)
    out.append(Check("basis: the nine elements for Y(1,1,1)",
                     got == D4_BASIS_PAIRS, "got %d pairs" % len(got)))
    return out


# --- 2. orbit tables -------------------------------------------------------

ORBIT_SIZES = {
    "A4": [15], "A5": [45], "A6": [105], "A7": [210], "A8": [378],
    "D4": [6, 6, 6], "D5": [10, 60], "D6": [15, 180], "D7": [21, 420],
    "D8": [28, 840], "E6": [270], "E7": [945], "E8": [3780],
}


def suite_orbits(seed=0):
    out = []
    for tag, sizes in sorted(ORBIT_SIZES.items()):
        d = _family(tag)
        tabs = orbit_tables(d)
        got = sorted(t.size for t in tabs)
        out.append(Check("orbits: %s splits as %s" % (tag, sizes),
                         got == sorted(sizes), "got %s" % got))
        brute = len(orthogonal_pairs(d))
        out.append(Check("orbits: %s total matches brute force" % tag,
                         brute == sum(sizes),
                         "%d pairs" % brute))
    bad = []
    for tag in ["D5", "D6", "D7", "D8"]:
        d = _family(tag)
        n = d.n
        small = min(orbit_tables(d), key=lambda t: t.size)
        if small.size != n * (n - 1) // 2 or len(small.basis_members) != n - 1:
            bad.append(tag)
            continue
        # every member is (e_i - e_j) v (e_i + e_j), each index pair once
        index_pairs = set()
        for a, b in small.members:
            ea, eb = epsilon_coords(d, a), epsilon_coords(d, b)
            if (ea.i, ea.j) != (eb.i, eb.j) or {ea.sign, eb.sign} != {"-", "+"}:
                bad.append(tag)
                break
            index_pairs.add((ea.i, ea.j))
        else:
            if len(index_pairs) != small.size:
                bad.append(tag)
    out.append(Check("orbits: D small orbit is the difference-sum arc pairs, "
                     "size C(n,2), n-1 basis members",
                     not bad, "mismatches: %s" % (bad or "none")))

    bad = []
    for spec in [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 1, 5),
                 (1, 2, 2), (1, 2, 3), (1, 2, 4)]:
        got = component_count(h_graph(*spec))
        if got != len(orbit_tables(y_diagram(*spec))):
            bad.append(str(spec))
    out.append(Check("orbits: hexagon graph components count the orbits on "
                     "all finite forks", not bad,
                     "mismatches: %s" % (bad or "none")))
    return out


# --- 3. sign coherence -----------------------------------------------------

def suite_coherence(seed=0):
    out = []
    for tag in ["D4", "D5", "D6", "E6"]:
        d = _family(tag)
        basis = canonical_basis(d)
        bad = 0
        total = 0
        for t in orbit_tables(d):
            for p in t.members:
                total += 1
                coords = basis.expand_pair(*p)
                ok, sign = sign_coherent(coords)
                if not (ok and sign == 1
                        and all(isinstance(c, int) for c in coords)
                        and coords == t.coords[p]):
                    bad += 1
        out.append(Check("coherence: %s all %d positive 2-roots expand with "
                         "nonnegative integers" % (tag, total), bad == 0,
                         "%d failures" % bad))

    for spec in [(1, 2, 4), (2, 2, 2), (3, 3, 3), (1, 2, 6)]:
        d = y_diagram(*spec)
        basis = canonical_basis(d)
        rng = random.Random("%d:%r" % (seed, d))
        k = len(basis)
        bad = 0
        trials = 10000
        for _ in range(trials):
            word = [rng.randrange(d.n) for _ in range(rng.randint(1, 30))]
            col = basis.word_column(word, rng.randrange(k))
            pos = any(x > 0 for x in col)
            neg = any(x < 0 for x in col)
            if (pos and neg) or not (pos or neg):
                bad += 1
        out.append(Check("coherence: %r columns of %d random words stay "
                         "one-signed" % (d, trials), bad == 0,
                         "%d failures" % bad))

        # full matrices for a smaller sample
        import numpy as np

        mats = basis.action_matrices_np()
        eye = np.eye(k, dtype=np.int64)
        bad = 0
        for _ in range(100):
            word = [rng.randrange(d.n) for _ in range(rng.randint(1, 30))]
            m = eye
            for i in reversed(word):
                m = mats[i] @ m
            for j in range(k):
                col = m[:, j]
                if bool((col > 0).any()) == bool((col < 0).any()):
                    bad += 1
        out.append(Check("coherence: %r all columns of 100 random word "
                         "matrices stay one-signed" % (d,), bad == 0,
                         "%d failures" % bad))
    return out


# --- 4. highest 2-roots ----------------------------------------------------

HIGHEST_HEIGHTS = {
    "A4": [5], "A5": [10], "A6": [17], "A7": [26], "A8": [37],
    "D4": [3, 3, 3], "D5": [4, 11], "D6": [5, 27], "D7": [6, 51],
    "D8": [7, 83], "E6": [28], "E7": [85], "E8": [295],
}


def suite_highest(seed=0):
    out = []
    for tag, heights in sorted(HIGHEST_HEIGHTS.items()):
        d = _family(tag)
        tabs = orbit_tables(d)
        closed = set(closed_form_highest(d))
        climbed = {t.highest for t in tabs}
        out.append(Check("highest: %s closed form matches the climb" % tag,
                         closed == climbed, "%d orbits" % len(tabs)))
        got = sorted(t.height for t in tabs)
        out.append(Check("highest: %s heights are %s" % (tag, heights),
                         got == sorted(heights), "got %s" % got))
        dominated = all(
            all(c <= h for c, h in zip(t.coords[p], t.coords[t.highest]))
            for t in tabs for p in t.members)
        out.append(Check("highest: %s top dominates every orbit member "
                         "coordinatewise" % tag, dominated))
        rng = random.Random("%d:%s" % (seed, tag))
        redo = all(
            highest_pair(d, rng.choice(t.members), rng=rng) == t.highest
            for t in tabs for _ in range(5))
        out.append(Check("highest: %s five randomized climbs per orbit reach "
                         "the same top" % tag, redo))

    for tag in ["D4", "D5", "D6", "E6"]:
        d = _family(tag)
        bad = sum(1 for t in orbit_tables(d) for p in t.members
                  if highest_pair(d, p) != t.highest)
        out.append(Check("highest: %s every member climbs to its orbit top"
                         % tag, bad == 0, "%d failures" % bad))

    for tag in ["E7", "E8"]:
        d = _family(tag)
        (t,) = orbit_tables(d)
        rng = random.Random("%d:%s:sample" % (seed, tag))
        bad = sum(1 for _ in range(200)
                  if highest_pair(d, rng.choice(t.members)) != t.highest)
        out.append(Check("highest: %s 200 sampled members climb to the top"
                         % tag, bad == 0, "%d failures" % bad))

    e8 = _family("E8")
    b = canonical_basis(e8)
    (top,) = closed_form_highest(e8)
    coords = b.expand_pair(*top)
    ones = [k for k, c in enumerate(coords) if c == 1]
    want = ((0, 0, 0, 0, 0, 0, 0, 1), (2, 1, 1, 0, 2, 2, 2, 1))
    out.append(Check("highest: E8 has a unique coefficient-1 element, "
                     "a7 v theta", ones == [34] and b.elements[34].pair == want,
                     "indices %s" % ones))
    return out


# --- 5. the two partial orders ---------------------------------------------

def suite_orders(seed=0):
    out = []
    for tag in ["D4", "D5", "D6", "E6"]:
        d = _family(tag)
        bad = 0
        moves = 0
        for t in orbit_tables(d):
            for p in t.members:
                base = t.coords[p]
                for _i, q in monoidal_covers(d, p):
                    moves += 1
                    if any(c > h for c, h in zip(base, t.coords[q])):
                        bad += 1
        out.append(Check("orders: %s all %d monoidal covers increase "
                         "coordinates" % (tag, moves), bad == 0,
                         "%d failures" % bad))

    d = y_diagram(1, 1, 2)
    basis = canonical_basis(d)
    p = (simple_root(d, 0), theta(d, 4))
    coords = basis.expand_pair(*p)
    ok_coords = coords == (1, 1, 1) + (0,) * 11
    ht = ht2_of_pair(d, p)
    no_down = all(ht2_of_pair(d, pair_action(d, [i], p)) >= ht
                  for i in range(d.n))
    covers = sorted(i for i, _q in monoidal_covers(d, p))
    b0 = basis.elements[0].pair
    strict = b0 != p and all(c >= e for c, e in zip(
        coords, (1,) + (0,) * 13))
    out.append(Check("orders: D5 witness a0 v theta expands as three "
                     "coefficient-1 terms", ok_coords, "coords %s" % (coords,)))
    out.append(Check("orders: D5 witness is monoidally minimal with covers "
                     "at 1,2,3", no_down and covers == [1, 2, 3],
                     "covers %s" % covers))
    out.append(Check("orders: D5 witness dominates a basis element it does "
                     "not cover monoidally", strict))
    return out


# --- 6. invariant forms and decompositions ---------------------------------

def suite_forms(seed=0):
    out = []
    bad = []
    for tag in ["A4", "D4", "D5", "D6", "E6"]:
        d = _family(tag)
        basis = canonical_basis(d)
        if any(bprime(d, e.matrix, e.matrix) != 4 for e in basis.elements):
            bad.append(tag)
    out.append(Check("forms: B'(t,t) = 4 on every basis 2-root",
                     not bad, "mismatches: %s" % (bad or "none")))

    d = path_diagram(4)
    basis = canonical_basis(d)
    vals = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            v = bprime(d, basis.elements[i].matrix, basis.elements[j].matrix)
            vals[v] = vals.get(v, 0) + 1
    out.append(Check("forms: A4 off-diagonal B' values are {-2: 6, 1: 4}",
                     vals == {-2: 6, 1: 4}, "got %s" % vals))

    a3 = path_diagram(3)
    mats3 = [e.matrix for e in canonical_basis(a3).elements]
    g3 = gram(a3, mats3, p=2)
    mats4 = [e.matrix for e in canonical_basis(d).elements]
    g4 = gram(d, mats4, p=2)
    even3 = all(x == 0 for row in g3 for x in row)
    odd4 = any(x for row in g4 for x in row)
    out.append(Check("forms: half-form Gram vanishes mod 2 for A3 "
                     "but not for A4", even3 and odd4))

    bad = []
    for tag in ["A3", "A4", "A5", "A6", "A7", "A8",
                "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"]:
        d = _family(tag)
        rep = decompose_s2v(d)
        rads = [s["radical_dim"] for s in rep["orbit_summands"]]
        comp = rep["complement_dim"]
        want_comp = d.n if d.kind == "Path" else 0
        if any(rads) or comp != want_comp:
            bad.append("%s %s comp=%d" % (tag, rads, comp))
    out.append(Check("forms: per-orbit radicals 0, complement n for paths "
                     "and 0 for forks", not bad, "mismatches: %s" % (bad or "none")))

    patterns = {"D4": [3, 3, 3], "D5": [4, 10], "E6": [20]}
    bad = []
    for tag, dims in patterns.items():
        d = _family(tag)
        rep = decompose_s2v(d)
        got = sorted(s["dim"] for s in rep["orbit_summands"])
        if got != sorted(dims) or 1 + sum(got) != d.n * (d.n + 1) // 2:
            bad.append("%s %s" % (tag, got))
    out.append(Check("forms: summand dimensions 1+3+3+3, 1+4+10, 1+20 fill "
                     "the symmetric square", not bad,
                     "mismatches: %s" % (bad or "none")))

    bad = []
    for tag in ["A4", "D4", "D5", "E6"]:
        d = _family(tag)
        om = virasoro(d)
        from .symsquare import conjugate, simple_matrices
        fixed = all(conjugate(simple_matrices(d)[i], om) == om
                    for i in range(d.n))
        rows = tuple(standard_coords(e.matrix)
                     for e in canonical_basis(d).elements)
        outside = (linalg.rank(rows + (standard_coords(om),))
                   == linalg.rank(rows) + 1)
        if not (btilde(d, om, om) == d.n == m_functional(d, om)
                and fixed and outside):
            bad.append(tag)
    out.append(Check("forms: inverse Cartan element has norm n, trace "
                     "functional n, is group-fixed, and lies outside the "
                     "basis span", not bad, "mismatches: %s" % (bad or "none")))

    bad = []
    for tag in ["A3", "A4", "A5", "A6", "A7", "A8",
                "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"]:
        d = _family(tag)
        basis = canonical_basis(d)
        for e1 in basis.elements:
            a, b = e1.pair
            for e2 in basis.elements:
                c, dd = e2.pair
                want = (bform(d, a, c) * bform(d, b, dd)
                        + bform(d, a, dd) * bform(d, b, c))
                if bprime(d, e1.matrix, e2.matrix) != want:
                    bad.append(tag)
                    break
            if tag in bad:
                break
    out.append(Check("forms: trace formula matches the two-term pairing "
                     "product on every basis pair through rank 8",
                     not bad, "mismatches: %s" % (bad or "none")))

    bad = []
    for fam in [("A4",), ("D5",), ("E6",), ("y", 2, 2, 3)]:
        d = _family(fam[0]) if len(fam) == 1 else y_diagram(*fam[1:])
        basis = canonical_basis(d)
        from .symsquare import apply_word, simple_matrices
        rng = random.Random("%d:invariance:%r" % (seed, d))
        mats = simple_matrices(d)
        for _ in range(1000):
            t1 = apply_word(d, [rng.randrange(d.n) for _ in range(rng.randrange(9))],
                            rng.choice(basis.elements).matrix)
            t2 = apply_word(d, [rng.randrange(d.n) for _ in range(rng.randrange(9))],
                            rng.choice(basis.elements).matrix)
            i = rng.randrange(d.n)
            if bprime(d, conjugate(mats[i], t1), conjugate(mats[i], t2)) \
                    != bprime(d, t1, t2):
                bad.append(repr(d))
                break
    out.append(Check("forms: the half form is reflection-invariant on 1000 "
                     "random pairs per type", not bad,
                     "mismatches: %s" % (bad or "none")))

    bad = []
    for tag in ["A3", "D4"]:
        d = _family(tag)
        roots = [simple_root(d, i) for i in range(d.n)]
        for i, j, k, l in itertools.product(range(d.n), repeat=4):
            v = (bform(d, roots[i], roots[k]) * bform(d, roots[j], roots[l])
                 - bform(d, roots[i], roots[l]) * bform(d, roots[j], roots[k])
                 + bform(d, roots[j], roots[k]) * bform(d, roots[i], roots[l])
                 - bform(d, roots[j], roots[l]) * bform(d, roots[i], roots[k]))
            if v != 0:
                bad.append(tag)
                break
    out.append(Check("forms: symmetrized tensors pair to zero with "
                     "antisymmetrized ones", not bad,
                     "mismatches: %s" % (bad or "none")))

    def s2_gram_rank(d):
        units = []
        for i in range(d.n):
            for j in range(i, d.n):
                m = [[0] * d.n for _ in range(d.n)]
                m[i][j] = 1
                m[j][i] = 1
                units.append(tuple(tuple(r) for r in m))
        g = tuple(tuple(btilde(d, a, b) for b in units) for a in units)
        return linalg.rank(g), len(units)

    bad = []
    for tag in ["D4", "D5", "E6"]:
        d = _family(tag)
        rk, full = s2_gram_rank(d)
        if rk != full:
            bad.append("%s rank %d of %d" % (tag, rk, full))
    rk, full = s2_gram_rank(y_diagram(2, 2, 2))
    if rk >= full:
        bad.append("Y(2,2,2) unexpectedly nonsingular")
    out.append(Check("forms: product form is nonsingular on the full "
                     "symmetric square exactly when the Cartan matrix is",
                     not bad, "mismatches: %s; Y(2,2,2) rank %d of %d"
                     % (bad or "none", rk, full)))

    d = y_diagram(2, 2, 2)
    try:
        decompose_s2v(d)
        raised = False
    except ValueError:
        raised = True
    w = affine_radical_witness(d)
    rows = [standard_coords(m) for m in w["elements"]]
    rk = linalg.rank(tuple(rows))
    rk2 = linalg.rank(tuple(rows + [standard_coords(w["delta_squared"])]))
    ortho = all(btilde(d, m, vee(simple_root(d, i), simple_root(d, j))) == 0
                for m in w["elements"]
                for i in range(d.n) for j in range(i, d.n))
    out.append(Check("forms: Y(2,2,2) is degenerate with radical delta v a_i "
                     "of dimension 7",
                     raised and rk == 7 == d.n and rk2 == 7 and ortho,
                     "rank %d" % rk))

    rep = decompose_s2v(y_diagram(1, 2, 6))
    out.append(Check("forms: Y(1,2,6) module of dimension 54 is "
                     "nondegenerate",
                     (rep["dim_sym_square"], rep["module_dim"],
                      rep["module_radical_dim"]) == (55, 54, 0),
                     "radical %d" % rep["module_radical_dim"]))
    return out


# --- 7. kernels of the orbit actions ---------------------------------------

def suite_kernels(seed=0, max_order=None):
    out = []

    def within(order):
        return max_order is None or order <= max_order

    if within(192):
        d = y_diagram(1, 1, 1)
        ks = [action_kernel_order(d, t, 192) for t in orbit_tables(d)]
        out.append(Check("kernels: D4 all three orbits have kernel of order 8",
                         ks == [8, 8, 8], "got %s" % ks))

    if within(1920):
        d = y_diagram(1, 1, 2)
        tabs = {t.size: t for t in orbit_tables(d)}
        k_small = action_kernel_order(d, tabs[10], 1920)
        k_large = action_kernel_order(d, tabs[60], 1920)
        out.append(Check("kernels: D5 small orbit 16, large orbit 1",
                         (k_small, k_large) == (16, 1),
                         "got %d, %d" % (k_small, k_large)))

    if within(23040):
        d = y_diagram(1, 1, 3)
        large = max(orbit_tables(d), key=lambda t: t.size)
        k = action_kernel_order(d, large, 23040)
        out.append(Check("kernels: D6 large orbit has kernel of order 2",
                         k == 2, "got %d" % k))

    if within(51840):
        d = y_diagram(1, 2, 2)
        (t,) = orbit_tables(d)
        k = action_kernel_order(d, t, 51840)
        out.append(Check("kernels: E6 action is faithful", k == 1,
                         "got %d" % k))
    return out


# --- 8. algebraic identities -----------------------------------------------

def suite_identities(seed=0):
    out = []
    for tag in ["D5", "E6"]:
        d = _family(tag)
        basis = canonical_basis(d)
        pairs = [p for t in orbit_tables(d) for p in t.members]

        bad = 0
        for (al, be) in pairs:
            t = vee(al, be)
            for e in basis.elements:
                lhs = c_apply(d, al, c_apply(d, be, e.matrix))
                if lhs != mscale(bprime(d, t, e.matrix), t):
                    bad += 1
        out.append(Check("identities: %s composite projection equals B' "
                         "coefficient on all %d cases"
                         % (tag, len(pairs) * len(basis)), bad == 0,
                         "%d failures" % bad))

        from .symsquare import conjugate, simple_matrices
        sm = simple_matrices(d)
        bad = 0
        crit_bad = 0
        for (al, be) in pairs:
            s = vee(al, be)
            for g in range(d.n):
                gam = simple_root(d, g)
                x = bform(d, al, gam)
                y = bform(d, be, gam)
                v = tuple(x * y * gam[k] - x * be[k] - y * al[k]
                          for k in range(d.n))
                if conjugate(sm[g], s) != madd(s, vee(gam, v)):
                    bad += 1
                if any(v):
                    isroot = is_root(d, v) or is_root(d, negate(v))
                    if isroot != (abs(x) == 1 or abs(y) == 1):
                        crit_bad += 1
        out.append(Check("identities: %s reflection formula "
                         "s(a v b) = a v b + g v (xy g - x b - y a)" % tag,
                         bad == 0, "%d failures" % bad))
        out.append(Check("identities: %s correction root test |x|=1 or |y|=1"
                         % tag, crit_bad == 0, "%d failures" % crit_bad))

        bad = 0
        for e in basis.elements:
            i, beta = e.labels[0]
            for g in range(d.n):
                v = bform(d, beta, simple_root(d, g))
                if g == i:
                    ok = v == 0
                elif beta == simple_root(d, g):
                    ok = v == 2
                else:
                    ok = v in (-1, 0, 1)
                if not ok:
                    bad += 1
        out.append(Check("identities: %s elementary roots pair with simples "
                         "in {-1,0,1} away from their vertex" % tag,
                         bad == 0, "%d failures" % bad))

        bad = 0
        for g in range(d.n):
            cases = basis.simple_action(g)
            for k, e in enumerate(basis.elements):
                got = basis.expand(apply_simple(d, g, e.matrix))
                want = [0] * len(basis)
                if cases[k].kind == "fix":
                    want[k] = 1
                elif cases[k].kind == "negate":
                    want[k] = -1
                else:
                    want[k] = 1
                    want[cases[k].partner] += 1
                if list(got) != want:
                    bad += 1
        out.append(Check("identities: %s reflection action is fix, negate, "
                         "or add a single partner" % tag, bad == 0,
                         "%d failures" % bad))

        bad = 0
        for i in range(d.n):
            for j in range(d.n):
                if i == j or not adjacent(d, i, j):
                    continue
                f = basis.star_map(i, j)
                g = basis.star_map(j, i)
                img = [f[k] for k in basis.wrt(i)]
                if (sorted(img) != sorted(set(img))
                        or not set(img) <= set(basis.wrt(j))
                        or any(g[f[k]] != k for k in basis.wrt(i))):
                    bad += 1
        out.append(Check("identities: %s star maps are inverse bijections "
                         "between adjacent classes" % tag, bad == 0,
                         "%d failures" % bad))

    d6 = y_diagram(1, 1, 3)
    word = [4, 5, 3, 4, 0, 3, 1, 0]
    got = pair_action(d6, word, (simple_root(d6, 1), simple_root(d6, 2)))
    top = positive_roots(d6)[-1]
    out.append(Check("identities: D6 braid word carries the leaf pair to "
                     "(leaf, highest root)",
                     got == (simple_root(d6, 5), top), "got %s" % (got,)))

    reports = []
    all_found = True
    for tag in ["D4", "D5", "E6"]:
        d = _family(tag)
        basis = canonical_basis(d)
        total = found = 0
        for g in range(d.n):
            gam = simple_root(d, g)
            for k, case in enumerate(basis.simple_action(g)):
                if case.kind != "add":
                    continue
                total += 1
                i, beta = basis.elements[k].labels[0]
                gens = [simple_root(d, i), beta, gam]
                if _rank3_orbit_reaches(d, basis.elements[k].matrix,
                                        basis.elements[case.partner].matrix,
                                        gens):
                    found += 1
        reports.append("%s %d/%d" % (tag, found, total))
        all_found = all_found and found == total
    note = "open question probe: " + ", ".join(reports)
    out.append(Check("identities: add-case partner 2-roots conjugate under "
                     "the rank-3 reflection subgroup (informational)",
                     True, note + ("" if all_found else " (not all found)")))
    return out


def _rank3_orbit_reaches(d, src, dst, gens, cap=100000):
    """Whether dst lies in the orbit of the 2-root src under the subgroup
    generated by reflections in the three given roots."""
    from .symsquare import conjugate, reflection_matrix

    mats = [reflection_matrix(d, g) for g in gens]
    seen = {src}
    frontier = [src]
    while frontier:
        if dst in seen:
            return True
        nxt = []
        for s in frontier:
            for m in mats:
                t = conjugate(m, s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
                    if len(seen) > cap:
                        return False
        frontier = nxt
    return dst in seen


# --- 9. arc pictures -------------------------------------------------------

A3_SKEIN = """\
input: (e1-e3)(e2-e4)
1   2   3   4
+-------+
    +-------+

expansion:

1 * (e1-e2)(e3-e4)
1   2   3   4
+---+
        +---+

1 * (e1-e4)(e2-e3)
1   2   3   4
+-----------+
    +---+
"""

D4_SKEIN = """\
input: (e1+e4)(e2+e3)
1   2   3   4
+-----*-----+
    +-*-+

expansion:

1 * (e1-e4)(e2-e3)
1   2   3   4
+-----------+
    +---+

1 * (e1-e2)(e3-e4)
1   2   3   4
+---+
        +---+

1 * (e1+e2)(e3+e4)
1   2   3   4
+-*-+
        +-*-+
"""


def suite_skein(seed=0):
    out = []
    a3 = path_diagram(3)
    pair = ((1, 1, 0), (0, 1, 1))
    got = render_skein(a3, pair)
    out.append(Check("skein: A3 crossing resolves into two plain terms",
                     got == A3_SKEIN))
    arcs = arc_diagram(a3, pair).arcs
    out.append(Check("skein: A3 input arcs are 1-3 and 2-4",
                     arcs == ((1, 3, False), (2, 4, False)),
                     "got %s" % (arcs,)))

    d4 = y_diagram(1, 1, 1)
    pair = ((1, 0, 1, 1), (1, 1, 1, 0))
    got = render_skein(d4, pair)
    out.append(Check("skein: D4 starred crossing resolves into three terms",
                     got == D4_SKEIN))
    arcs = arc_diagram(d4, pair).arcs
    out.append(Check("skein: D4 input arcs are 1+4 and 2+3 starred",
                     arcs == ((1, 4, True), (2, 3, True)),
                     "got %s" % (arcs,)))
    return out


# --- 10. norm 2 witnesses beyond affine type -------------------------------

WITNESS_DELTAS = {
    (2, 2, 3): (3, 2, 1, 2, 1, 2, 1, 0),
    (1, 3, 4): (4, 2, 3, 2, 1, 3, 2, 1, 0),
    (1, 2, 6): (6, 3, 4, 2, 5, 4, 3, 2, 1, 0),
}


def suite_witness(seed=0):
    out = []
    for spec, want_delta in sorted(WITNESS_DELTAS.items()):
        w = norm2_witness(*spec)
        ok = (w["norm"] == 2 and w["sign_coherent"] and w["sign"] == 1
              and w["delta"] == want_delta
              and all(isinstance(c, int) and c >= 0 for c in w["coords"]))
        out.append(Check("witness: Y%s norm 2 element with one-signed "
                         "expansion" % (spec,), ok,
                         "norm %s sign %s" % (w["norm"], w["sign"])))
    return out


SUITES = {
    "basis": suite_basis,
    "orbits": suite_orbits,
    "coherence": suite_coherence,
    "highest": suite_highest,
    "orders": suite_orders,
    "forms": suite_forms,
    "kernels": suite_kernels,
    "identities": suite_identities,
    "skein": suite_skein,
    "witness": suite_witness,
}


def run_suites(names, seed=0, max_order=None):
    expanded = []
    for name in names:
        if name == "all":
            expanded.extend(k for k in SUITES if k not in expanded)
        elif name not in expanded:
            expanded.append(name)
    out = []
    for name in expanded:
        fn = SUITES.get(name)
        if fn is None:
            raise ValueError("unknown suite %r" % (name,))
        if name == "kernels":
            out.extend(fn(seed=seed, max_order=max_order))
        else:
            out.extend(fn(seed=seed))
    return out
