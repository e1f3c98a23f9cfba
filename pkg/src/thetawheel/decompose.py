"""Cutset and 2-join machinery.

Star cutsets, clique cutsets with their decomposition tree, 2-joins with
blocks of decomposition, and the 2-join decomposition tree consumed by the
stable set and coloring routines.
"""

import itertools
from dataclasses import dataclass

from .errors import InputError, InternalError
from .graphs import Graph, components, connected
from .oracles import check_certificate


# -- star cutsets ------------------------------------------------------------


def find_star_cutset(g):
    """A star cutset of g as a frozenset, or None.

    A star cutset is a node cutset one of whose members (the center) is
    adjacent to all the others.  Every candidate with center v sits inside
    N[v], so three shapes cover them all: N[v] itself when the rest of the
    graph is disconnected, N[v] minus one neighbor whose whole neighborhood
    lies inside N[v], and, when v is universal, N[v] minus a nonadjacent
    pair of neighbors.
    """
    if g.n < 3:
        return None
    everything = set(g.vertices)
    for v in g.vertices:
        closed = g.adj(v) | {v}
        outside = everything - closed
        if outside:
            if not connected(g, outside):
                return frozenset(closed)
            for x in sorted(g.adj(v)):
                if g.adj(x) <= closed:
                    return frozenset(closed - {x})
        else:
            nbs = sorted(g.adj(v))
            for i, x in enumerate(nbs):
                for y in nbs[i + 1:]:
                    if not g.has_edge(x, y):
                        return frozenset(closed - {x, y})
    return None


# -- clique cutsets ----------------------------------------------------------


def _neighborhood(g, vs):
    out = set()
    for v in vs:
        out |= g.adj(v)
    return out - set(vs)


def minimal_separators(g):
    """All minimal vertex separators of g, as a set of frozensets.

    Generation starts from the component neighborhoods N(C) for C a
    component of G - N[v], and closes under: for a separator S and x in S,
    every N(C) with C a component of G - (S + N[x]) is again a minimal
    separator.  Exponential in the worst case; inputs here are small.
    """
    everything = set(g.vertices)
    found = set()
    queue = []

    def note(s):
        if s and s not in found:
            found.add(s)
            queue.append(s)

    for v in g.vertices:
        for comp in components(g, everything - (g.adj(v) | {v})):
            note(frozenset(_neighborhood(g, comp)))
    while queue:
        sep = queue.pop()
        for x in sorted(sep):
            for comp in components(g, everything - (sep | g.adj(x) | {x})):
                note(frozenset(_neighborhood(g, comp)))
    return found


def clique_minimal_separators(g):
    """Minimal separators that induce cliques, lexicographically sorted."""
    seps = [s for s in minimal_separators(g) if g.is_clique(s)]
    return sorted(seps, key=lambda s: tuple(sorted(s)))


def find_clique_cutset(g):
    """A clique cutset of g with its split, or None.

    Returns (K, (A, K, B)) where A, K, B partition the vertices, K is a
    clique (empty exactly when g is disconnected), no edge joins A to B,
    and G[A + K] has no clique cutset of its own.  The A side is driven
    down to such an atom by repeated splitting; a graph has a clique
    cutset iff it has a clique minimal separator, so the descent stops
    precisely at atoms.
    """
    if g.n <= 1:
        return None
    comps = components(g)
    if len(comps) > 1:
        rest = frozenset(set(g.vertices) - comps[0])
        return frozenset(), (comps[0], frozenset(), rest)
    seps = clique_minimal_separators(g)
    if not seps:
        return None
    cut = seps[0]
    side = next(c for c in components(g, set(g.vertices) - cut)
                if _neighborhood(g, c) == cut)
    while True:
        h = g.subgraph(side | cut)
        inner = clique_minimal_separators(h)
        if not inner:
            rest = frozenset(set(g.vertices) - side - cut)
            return frozenset(cut), (frozenset(side), frozenset(cut), rest)
        sep = inner[0]
        hcomps = components(g, (side | cut) - sep)
        # The clique remnant cut - sep is connected, so it lies in one
        # component; a different full component exists and sits inside
        # side, strictly smaller since sep meets side.
        remnant = cut - sep
        banned = None
        if remnant:
            banned = next(c for c in hcomps if c & remnant)
        side = next(c for c in hcomps
                    if c is not banned and _neighborhood(h, c) == sep)
        cut = sep


@dataclass(frozen=True)
class CliqueTreeNode:
    """A node of the clique cutset decomposition tree."""

    graph: Graph
    cutset: "frozenset | None"
    left: "CliqueTreeNode | None"
    right: "CliqueTreeNode | None"

    @property
    def is_leaf(self):
        return self.cutset is None

    def leaves(self):
        if self.is_leaf:
            return [self]
        return self.left.leaves() + self.right.leaves()

    def depth(self):
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())


def clique_cutset_tree(g):
    """Decompose g by clique cutsets until no leaf has one.

    The left child of a node is the atom side of find_clique_cutset, so it
    is always a leaf; the tree has at most n leaves.
    """
    found = find_clique_cutset(g)
    if found is None:
        return CliqueTreeNode(g, None, None, None)
    cut, (a, _, b) = found
    left = clique_cutset_tree(g.subgraph(a | cut, name=g.name + ".a"))
    right = clique_cutset_tree(g.subgraph(b | cut, name=g.name + ".b"))
    return CliqueTreeNode(g, cut, left, right)


# -- 2-joins -----------------------------------------------------------------


@dataclass(frozen=True)
class Split:
    """A split (X1, A1, B1, X2, A2, B2) of a 2-join.

    A1, B1 are disjoint nonempty subsets of X1 and A2, B2 of X2; the edges
    between the two sides are exactly all of A1 x A2 and all of B1 x B2.
    """

    x1: frozenset
    a1: frozenset
    b1: frozenset
    x2: frozenset
    a2: frozenset
    b2: frozenset

    def swapped(self):
        return Split(self.x2, self.a2, self.b2, self.x1, self.a1, self.b1)

    def as_dict(self):
        return {"X1": sorted(self.x1), "A1": sorted(self.a1),
                "B1": sorted(self.b1), "X2": sorted(self.x2),
                "A2": sorted(self.a2), "B2": sorted(self.b2)}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(frozenset(d["X1"]), frozenset(d["A1"]),
                       frozenset(d["B1"]), frozenset(d["X2"]),
                       frozenset(d["A2"]), frozenset(d["B2"]))
        except KeyError as missing:
            raise InputError(f"split is missing key {missing}") from None


def _is_path_graph(g, vs):
    """True when g[vs] is a chordless path (a single vertex counts)."""
    vs = set(vs)
    if not vs:
        return False
    deg = {v: len(g.adj(v) & vs) for v in vs}
    return (sum(deg.values()) == 2 * (len(vs) - 1)
            and max(deg.values()) <= 2
            and connected(g, vs))


def _joined(g, region, xs, ys):
    return any(c & xs and c & ys for c in components(g, region))


def is_2join(g, split, m_paths=()):
    """Whether split is a 2-join of g; returns (bool, reason).

    On top of the crossing structure each side must contain a path from
    its A set to its B set, and a side with singleton A and B must not
    induce a chordless path.  With m_paths given, every path must in
    addition lie wholly on one side.
    """
    ok, why = check_certificate("2-join", g, split.as_dict())
    if not ok:
        return False, why
    sides = ((split.x1, split.a1, split.b1), (split.x2, split.a2, split.b2))
    for i, (x, a, b) in enumerate(sides, start=1):
        if not _joined(g, x, a, b):
            return False, f"no path joins A{i} to B{i} inside X{i}"
        if len(a) == 1 == len(b) and _is_path_graph(g, x):
            return False, f"G[X{i}] is a chordless path with |A{i}| = |B{i}| = 1"
    for path in m_paths:
        vs = set(path)
        if vs & split.x1 and vs & split.x2:
            return False, "a marker path meets both sides"
    return True, "2-join"


def _union_of_cliques(g, vs):
    return all(g.is_clique(c) for c in components(g, vs))


def _paired_clique_shape(g, s1, s2):
    if g.is_clique(s1) and g.is_clique(s2):
        return True
    for single, other in ((s1, s2), (s2, s1)):
        if len(single) == 1 and _union_of_cliques(g, other):
            return True
    return False


def _reaches_avoiding(g, region, targets, avoid):
    """Every vertex of region has a path to targets with no interior in avoid."""
    keep = (set(region) - set(avoid)) | set(targets)
    reach = set(targets)
    stack = sorted(targets)
    while stack:
        u = stack.pop()
        for v in g.adj(u):
            if v in keep and v not in reach:
                reach.add(v)
                stack.append(v)
    for v in region:
        if v in reach:
            continue
        if v in avoid and g.adj(v) & reach:
            continue
        return False
    return True


def is_consistent_split(g, split):
    """Check the eight conditions of a consistent 2-join; (bool, reason).

    For i = 1, 2: (1) every component of G[Xi] meets Ai and Bi; (2) every
    vertex of Ai has a non-neighbor in Bi; (3) vice versa; (4) A1 and A2
    are both cliques, or one is a single vertex and the other a disjoint
    union of cliques; (5) the same for B1, B2; (6) G[Xi] is connected;
    (7) every vertex of Xi reaches Bi by a path with no interior vertex
    in Ai; (8) symmetrically with Ai and Bi exchanged.
    """
    sides = ((split.x1, split.a1, split.b1), (split.x2, split.a2, split.b2))
    for i, (x, a, b) in enumerate(sides, start=1):
        for c in components(g, x):
            if not (c & a) or not (c & b):
                return False, f"(1) a component of G[X{i}] misses A{i} or B{i}"
    for i, (x, a, b) in enumerate(sides, start=1):
        for u in sorted(a):
            if b <= g.adj(u):
                return False, f"(2) {u!r} in A{i} is complete to B{i}"
        for u in sorted(b):
            if a <= g.adj(u):
                return False, f"(3) {u!r} in B{i} is complete to A{i}"
    if not _paired_clique_shape(g, split.a1, split.a2):
        return False, "(4) A1, A2 are neither two cliques nor a vertex and a union of cliques"
    if not _paired_clique_shape(g, split.b1, split.b2):
        return False, "(5) B1, B2 are neither two cliques nor a vertex and a union of cliques"
    for i, (x, a, b) in enumerate(sides, start=1):
        if not connected(g, x):
            return False, f"(6) G[X{i}] is disconnected"
        if not _reaches_avoiding(g, x, b, a):
            return False, f"(7) a vertex of X{i} cannot reach B{i} outside A{i}"
        if not _reaches_avoiding(g, x, a, b):
            return False, f"(8) a vertex of X{i} cannot reach A{i} outside B{i}"
    return True, "consistent"


def _check_m_paths(g, m_paths):
    taken = set()
    for p in m_paths:
        vs = set(p)
        if len(vs) < 2 or len(vs) != len(tuple(p)):
            raise InputError("marker paths must list distinct vertices, two or more")
        for v in p:
            if not g.has_vertex(v):
                raise InputError(f"marker path vertex {v!r} is not in the graph")
        if vs & taken:
            raise InputError("marker paths must be vertex-disjoint")
        taken |= vs
    return tuple(tuple(p) for p in m_paths)


def find_2join(g, m_paths=()):
    """A 2-join of g as a Split, or None.  Deterministic first-found.

    When m_paths (vertex-disjoint flat paths) is given, only 2-joins that
    leave every path wholly on one side are considered.

    The search guesses one vertex of each special set (a1, b1 in X1 and
    a2, b2 in X2) and grows X1 from {a1, b1}.  Relative to any final
    partition extending the current one, N(a2) and N(b2) trace A1 and B1
    inside the grown set, so an outside vertex whose neighborhood in the
    grown set is neither empty nor one of those traces can live on
    neither side of X2 and is forced into X1.  At a fixpoint, failures on
    the X2 side are inherited by every further extension and cut the
    whole branch; failures on the X1 side branch on the next vertex.
    """
    paths = _check_m_paths(g, m_paths)
    return _search_2join(g, paths, None)


def _search_2join(g, m_paths, restrict):
    """First 2-join found, growing X1 inside restrict (strictly) if given."""
    if g.n < 6 or not connected(g):
        return None
    inside = g.vertices if restrict is None else sorted(restrict)
    for a1 in inside:
        for b1 in inside:
            if b1 <= a1:
                continue
            for a2 in sorted(g.adj(a1)):
                if a2 == b1 or g.has_edge(a2, b1):
                    continue
                for b2 in sorted(g.adj(b1)):
                    if b2 in (a1, a2) or g.has_edge(b2, a1):
                        continue
                    split = _grow_2join(g, a1, b1, a2, b2, m_paths, restrict)
                    if split is not None:
                        ok, why = is_2join(g, split, m_paths)
                        if not ok:
                            raise InternalError(
                                f"2-join search produced an invalid split: {why}")
                        return split
    return None


def _grow_2join(g, a1, b1, a2, b2, m_paths, restrict):
    verts = g.vertices
    everything = set(verts)
    seen = set()

    def fixpoint(x1):
        x1 = set(x1)
        while True:
            if a2 in x1 or b2 in x1:
                return None
            if restrict is not None and not x1 <= restrict:
                return None
            ca = g.adj(a2) & x1
            cb = g.adj(b2) & x1
            if ca & cb:
                return None
            grown = False
            for v in verts:
                if v in x1 or v == a2 or v == b2:
                    continue
                nb = g.adj(v) & x1
                if nb and nb != ca and nb != cb:
                    x1.add(v)
                    grown = True
                    break
            if grown:
                continue
            for path in m_paths:
                vs = set(path)
                took = vs & x1
                if took and took != vs:
                    x1 |= vs
                    grown = True
                    break
            if not grown:
                return frozenset(x1)

    def evaluate(x1):
        x2 = frozenset(everything - x1)
        ca = g.adj(a2) & x1
        cb = g.adj(b2) & x1
        aa = frozenset(v for v in x2 if g.adj(v) & x1 == ca)
        bb = frozenset(v for v in x2 if g.adj(v) & x1 == cb)
        if (len(x2) < 3
                or not _joined(g, x2, aa, bb)
                or (len(aa) == 1 == len(bb) and _is_path_graph(g, x2))):
            return "dead", None
        if (len(x1) < 3
                or not _joined(g, x1, ca, cb)
                or (len(ca) == 1 == len(cb) and _is_path_graph(g, x1))):
            return "grow", None
        return "ok", Split(x1, frozenset(ca), frozenset(cb), x2, aa, bb)

    def dfs(start):
        x1 = fixpoint(start)
        if x1 is None or x1 in seen:
            return None
        seen.add(x1)
        status, split = evaluate(x1)
        if status == "dead":
            return None
        if status == "ok":
            if restrict is not None and x1 == restrict:
                return None
            return split
        if len(verts) - len(x1) <= 3:
            return None
        pool = restrict if restrict is not None else verts
        for v in sorted(pool):
            if v in x1 or v == a2 or v == b2:
                continue
            got = dfs(x1 | {v})
            if got is not None:
                return got
        return None

    return dfs({a1, b1})


# -- blocks of decomposition -------------------------------------------------


@dataclass(frozen=True)
class BlockPair:
    """Blocks of decomposition of a 2-join.

    g1 keeps X1 and replaces X2 by the marker path marker_in_g1, whose
    first vertex is complete to A1 and last to B1; g2 is symmetric.
    Marker vertices carry weight 0 on weighted graphs.
    """

    g1: Graph
    marker_in_g1: tuple
    g2: Graph
    marker_in_g2: tuple


def blocks(g, split, k=3, tag=""):
    """Blocks of decomposition with marker paths of length k (k >= 2)."""
    if k < 2:
        raise InputError("marker paths must have length at least 2")
    g1, m1 = _one_block(g, split.x1, split.a1, split.b1, k, f"mk{tag}2", 1)
    g2, m2 = _one_block(g, split.x2, split.a2, split.b2, k, f"mk{tag}1", 2)
    return BlockPair(g1, m1, g2, m2)


def _one_block(g, side, a, b, k, stem, idx):
    names = []
    taken = set(side)
    for base in [f"{stem}:a"] + [f"{stem}:i{j}" for j in range(1, k)] + [f"{stem}:b"]:
        name = base
        while name in taken:
            name += "'"
        names.append(name)
        taken.add(name)
    edges = list(zip(names, names[1:]))
    edges += [(names[0], u) for u in sorted(a)]
    edges += [(names[-1], u) for u in sorted(b)]
    weights = {v: 0 for v in names} if g.weighted else None
    block = g.subgraph(side).add_vertices(names, edges, weights,
                                          name=f"{g.name}.b{idx}")
    return block, tuple(names)


def minimally_sided_2join(g, m_paths=()):
    """A minimally-sided 2-join of g with x1 the minimal side, or None.

    Shrinks an arbitrary first 2-join by repeatedly searching for one
    with a side strictly inside the current minimal side.  On a graph
    with no star cutset (and with no marker constraints) the result is
    checked against what minimal sides look like there: A1 and B1 both
    have at least two vertices, and the block kept from X1 admits no
    further 2-join.
    """
    paths = _check_m_paths(g, m_paths)
    split = _search_2join(g, paths, None)
    if split is None:
        return None
    while True:
        smaller = _search_2join(g, paths, split.x1)
        if smaller is None:
            break
        split = smaller
    if not paths and find_star_cutset(g) is None:
        if len(split.a1) < 2 or len(split.b1) < 2:
            raise InternalError("minimal side of a 2-join has a special set "
                                "of size one in a graph with no star cutset")
        probe = blocks(g, split, 3, tag="probe")
        if _search_2join(probe.g1, (), None) is not None:
            raise InternalError("block kept from a minimal side still has a 2-join")
    return split


# -- 2-join decomposition tree -----------------------------------------------


@dataclass(frozen=True)
class TGStep:
    """One level of the 2-join decomposition tree."""

    split: Split          # split of the previous graph in the chain
    block: Graph          # leaf block kept from the minimal side x1
    block_marker: tuple   # marker path inside block, standing for x2
    block_mpaths: tuple   # earlier marker paths that ended up inside x1
    marker: tuple         # marker path standing for x1 in the next graph


@dataclass(frozen=True)
class TGTree:
    """2-join decomposition tree of a graph with no star cutset.

    chain[0] is the input and chain[i] what is left after carving out the
    first i blocks; steps[i] records the split of chain[i] and the block
    leaf it produced.  All leaves (each step's block and the deepest
    graph chain[-1]) have no star cutset and no 2-join.
    """

    chain: tuple
    steps: tuple
    deepest_mpaths: tuple
    independent: bool

    @property
    def depth(self):
        return len(self.steps)

    @property
    def deepest(self):
        return self.chain[-1]

    def leaves(self):
        out = [(s.block, s.block_mpaths) for s in self.steps]
        out.append((self.chain[-1], self.deepest_mpaths))
        return out


def build_TG(g, use_minimally_sided=False):
    """Build the 2-join decomposition tree of g.

    g must have no star cutset and at least one 2-join (InputError
    otherwise).  Each step takes a minimally-sided 2-join of the current
    graph, keeps the block of its minimal side as a leaf and continues on
    the other block.  With use_minimally_sided the earlier marker paths
    put no constraint on the next split, which is enough for coloring;
    without it every split is forced to leave each earlier marker path
    whole, so marker paths survive intact into exactly one leaf, which
    the stable set routine relies on.
    """
    if find_star_cutset(g) is not None:
        raise InputError("the graph has a star cutset")
    chain = [g]
    steps = []
    mcur = ()
    step_no = 0
    while True:
        cur = chain[-1]
        forcing = () if use_minimally_sided else mcur
        split = minimally_sided_2join(cur, forcing)
        if split is None:
            if not steps:
                raise InputError("the graph has no 2-join")
            break
        step_no += 1
        if step_no > g.n:
            raise InternalError("2-join decomposition did not terminate")
        pair = blocks(cur, split, 3, tag=str(step_no))
        inherited = tuple(p for p in mcur if set(p) <= split.x1)
        survivors = tuple(p for p in mcur if set(p) <= split.x2)
        if not use_minimally_sided and len(inherited) + len(survivors) != len(mcur):
            raise InternalError("a marker path was split across a 2-join")
        if find_star_cutset(pair.g1) is not None:
            raise InternalError("a block leaf has a star cutset")
        if _search_2join(pair.g1, (), None) is not None:
            raise InternalError("a block leaf has a 2-join")
        if find_star_cutset(pair.g2) is not None:
            raise InternalError("a block has a star cutset")
        steps.append(TGStep(split, pair.g1, pair.marker_in_g1, inherited,
                            pair.marker_in_g2))
        chain.append(pair.g2)
        mcur = survivors + (pair.marker_in_g2,)
    deepest = chain[-1]
    if mcur and _search_2join(deepest, (), None) is not None:
        raise InternalError("the deepest graph still has a 2-join")
    return TGTree(tuple(chain), tuple(steps), mcur, not use_minimally_sided)


# -- proper 2-cutsets of chordless graphs ------------------------------------


def proper_2cutset_min_side(g):
    """A minimum-side proper 2-cutset of a 2-connected chordless graph.

    A proper 2-cutset is a nonadjacent pair {a, b} together with a
    partition of the remaining vertices into nonempty anticomplete parts
    X and Y, each containing a path from a to b, such that neither
    G[X + {a, b}] nor G[Y + {a, b}] is a chordless path.  Returns
    (a, b, X, Y) with |X| minimum over all proper 2-cutsets (ties broken
    lexicographically), or None exactly when g is sparse.

    Minimality buys two facts the coloring recursion leans on, both
    verified before returning: the block on the X side (G[X + {a, b}]
    plus a marker adjacent to a and b) is sparse, and a and b each have
    at least two neighbors in X.
    """
    from .detect import is_chordless, is_sparse

    if not connected(g, g.vertices):
        raise InputError("the graph is disconnected")
    if not is_chordless(g):
        raise InputError("the graph has a cycle with a chord")
    for v in g.vertices:
        if len(components(g, set(g.vertices) - {v})) > 1:
            raise InputError(f"the graph has a cutvertex ({v!r})")
    if is_sparse(g):
        return None
    everything = set(g.vertices)
    best = None
    for a, b in itertools.combinations(g.vertices, 2):
        if g.has_edge(a, b):
            continue
        comps = components(g, everything - {a, b})
        if len(comps) < 2:
            continue
        comps = sorted(comps, key=sorted)
        # Any part made of three or more components contains one made of
        # fewer that is also valid, so singles and pairs of components
        # cover the minimum.
        candidates = [c for c in comps]
        candidates += [c | d for c, d in itertools.combinations(comps, 2)]
        for x in candidates:
            y = everything - x - {a, b}
            if not y:
                continue
            side_x = x | {a, b}
            side_y = y | {a, b}
            if not _joined(g, side_x, {a}, {b}):
                continue
            if not _joined(g, side_y, {a}, {b}):
                continue
            if _is_path_graph(g, side_x) or _is_path_graph(g, side_y):
                continue
            key = (len(x), tuple(sorted(x)), a, b)
            if best is None or key < best[0]:
                best = (key, a, b, x, y)
    if best is None:
        raise InternalError("a 2-connected chordless graph that is not "
                            "sparse has no proper 2-cutset")
    _, a, b, x, y = best
    base = g.unweighted() if g.weighted else g
    marker = "u"
    while marker in g:
        marker += "'"
    block = base.subgraph(x | {a, b}).add_vertices(
        (marker,), ((marker, a), (marker, b)))
    if len(g.adj(a) & x) < 2 or len(g.adj(b) & x) < 2:
        raise InternalError("a minimum-side proper 2-cutset has an end with "
                            "fewer than two neighbors on the small side")
    if not is_sparse(block):
        raise InternalError("the block on the minimum side of a proper "
                            "2-cutset is not sparse")
    return a, b, frozenset(x), frozenset(y)
