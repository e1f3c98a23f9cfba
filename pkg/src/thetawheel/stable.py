"""Maximum weight stable set, exact over the rationals.

Three layers, outermost first.  `mwss` peels clique cutsets by Tarjan's
composition.  `mwss_D` handles the cutset-free pieces: it builds the
2-join decomposition tree with marker paths of length 3, then reprocesses
the tree top-down, trading each marker path for a gem (the path plus a
center vertex complete to it) whose five weights encode four stable set
values of the side it replaced; solving the fully reprocessed deepest
graph and subtracting the d-values gives the answer, and walking the gems
backwards rebuilds an actual stable set.  `mwss_basic_ext` solves the
leaves, which are basic graphs with gems attached: it strips the centers,
reconstructs a root graph of what is left, re-attaches each center as one
extra root edge, and runs a maximum weight matching.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from . import detect
from .decompose import (build_TG, find_2join, find_clique_cutset,
                        find_star_cutset, is_2join, is_consistent_split)
from .errors import ClassViolationError, InputError, InternalError
from .graphs import Graph, connected, is_flat_path


@dataclass(frozen=True)
class StableSetCertificate:
    """A stable set, its total weight, and the 2-join steps behind it.

    `trace` holds one entry per reprocessed 2-join, recording the four
    region values (a, b, c, d) that weighted the gem at that step.
    """

    stable_set: frozenset
    weight: Fraction
    trace: tuple = ()

    def as_dict(self):
        out = {"vertices": sorted(self.stable_set), "weight": self.weight}
        if self.trace:
            out["trace"] = [dict(t) for t in self.trace]
        return out


def _certify(g, vs, weight, trace=()):
    vs = frozenset(vs)
    if not g.is_stable(vs) or g.set_weight(vs) != weight:
        raise InternalError("computed stable set fails verification")
    return StableSetCertificate(vs, weight, tuple(trace))


def _prime(name, taken):
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def _fresh(taken, stem):
    k = 0
    while f"{stem}{k}" in taken:
        k += 1
    taken.add(f"{stem}{k}")
    return f"{stem}{k}"


# -- matchings ----------------------------------------------------------------


def max_weight_matching(g, edge_weights=None):
    """Maximum weight matching of g: (total weight, set of sorted pairs).

    Edge weights default to 1; given weights must be nonnegative
    rationals keyed by edges.  Edmonds' blossom algorithm does the work
    and stays exact because the weights are Fractions throughout.
    """
    weights = {e: Fraction(1) for e in g.edges()}
    for e, w in (edge_weights or {}).items():
        e = tuple(sorted(e))
        if e not in weights:
            raise InputError(f"{e!r} is not an edge")
        w = Fraction(w)
        if w < 0:
            raise InputError(f"negative weight on edge {e!r}")
        weights[e] = w
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    for e, w in weights.items():
        if w > 0:
            ng.add_edge(*e, weight=w)
    matched = nx.max_weight_matching(ng)
    chosen = frozenset(tuple(sorted(e)) for e in matched)
    return sum((weights[e] for e in chosen), Fraction(0)), chosen


# -- root graphs --------------------------------------------------------------


def root_graph(l):
    """A root graph R with L(R) isomorphic to l, plus the isomorphism.

    The direct reconstruction for diamond-free inputs is tried first,
    then a Krausz partition search: cover the edges of l by cliques so
    that no vertex lies in more than two of them.  Exponential in the
    worst case, instant at the sizes this package handles.  Ambiguous
    inputs (triangle) resolve to the first partition found on the sorted
    edge order, so the triangle maps to a claw.

    Raises InputError when l is not a line graph, quoting a claw when
    one exists.
    """
    direct = detect.root_graph(l)
    if direct is not None:
        return direct
    parts = _krausz(l)
    if parts is None:
        claw = detect.find_claw(l)
        extra = f" (contains the claw {claw!r})" if claw else ""
        raise InputError("not a line graph: no Krausz partition exists" + extra)
    return _root_from_parts(l, parts)


def _krausz(g):
    """Edge-partitioning cliques, each vertex in at most two; or None.

    Backtracking on the first uncovered edge: either some existing part
    holding one endpoint absorbs the other (covering all edges between),
    or the edge opens a new part.  Processing edges in sorted order makes
    every valid partition reachable this way.
    """
    edges = list(g.edges())
    load = {v: 0 for v in g.vertices}
    covered = set()
    parts = []

    def absorb(part, v):
        new = [frozenset((v, w)) for w in part]
        if any(e in covered for e in new) or not all(g.has_edge(v, w) for w in part):
            return None
        return new

    def cover(i):
        while i < len(edges) and frozenset(edges[i]) in covered:
            i += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for part in parts:
            for old, new in ((u, v), (v, u)):
                if old in part and new not in part and load[new] < 2:
                    won = absorb(part, new)
                    if won is None:
                        continue
                    part.add(new)
                    covered.update(won)
                    load[new] += 1
                    if cover(i):
                        return True
                    load[new] -= 1
                    covered.difference_update(won)
                    part.discard(new)
        if load[u] < 2 and load[v] < 2:
            parts.append({u, v})
            covered.add(frozenset((u, v)))
            load[u] += 1
            load[v] += 1
            if cover(i):
                return True
            load[u] -= 1
            load[v] -= 1
            covered.discard(frozenset((u, v)))
            parts.pop()
        return False

    return [frozenset(p) for p in parts] if cover(0) else None


def _root_from_parts(g, parts):
    parts = sorted(parts, key=sorted)
    member = {v: [] for v in g.vertices}
    for i, p in enumerate(parts):
        for v in p:
            member[v].append(i)
    for v in sorted(g.vertices):
        while len(member[v]) < 2:
            member[v].append(len(parts))
            parts.append(frozenset((v,)))
    names = [f"r{i}" for i in range(len(parts))]
    edge_of = {}
    for v in sorted(g.vertices):
        i, j = member[v]
        edge_of[v] = (names[i], names[j])
    if len({frozenset(e) for e in edge_of.values()}) != g.n:
        raise InternalError("Krausz parts produced a parallel root edge")
    root = Graph(names, edge_of.values(), name=f"{g.name}.root")
    return detect.RootGraph(root, edge_of)


# -- gems ----------------------------------------------------------------------


def _induced_path4(g, vs):
    """The vertices of vs ordered as an induced 4-vertex path, or None."""
    vs = sorted(vs)
    deg = {u: sum(1 for v in vs if v != u and g.has_edge(u, v)) for u in vs}
    if sorted(deg.values()) != [1, 1, 2, 2]:
        return None
    path = [min(u for u in vs if deg[u] == 1)]
    while len(path) < 4:
        nxt = [v for v in vs if v not in path and g.has_edge(path[-1], v)]
        if len(nxt) != 1:
            return None
        path.append(nxt[0])
    return tuple(path)


def _gem_centers(g):
    """All (center, path) pairs: degree 4, neighborhood an induced path.

    On an extension of a diamond-free graph this identifies exactly the
    attached centers; no original vertex can have such a neighborhood.
    """
    out = []
    for z in sorted(g.vertices):
        if g.degree(z) != 4:
            continue
        path = _induced_path4(g, g.adj(z))
        if path is not None:
            out.append((z, path))
    return out


@dataclass(frozen=True)
class GemExtension:
    """A basic graph with a center attached to some of its flat paths.

    `paths` are vertex-disjoint flat paths of `base`, each of length 3;
    `centers[i]` names the vertex complete to paths[i] and anticomplete
    to everything else.  `weights`, if given, reweights the whole
    extension, defaulting to 1 per vertex.
    """

    base: Graph
    paths: tuple = ()
    centers: tuple = ()
    weights: dict = field(default=None, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))
        object.__setattr__(self, "centers", tuple(self.centers))
        if len(self.paths) != len(self.centers):
            raise InputError("paths and centers must pair up")
        seen = set()
        for p in self.paths:
            if len(p) != 4 or not is_flat_path(self.base, p):
                raise InputError(f"{p!r} is not a flat path of length 3")
            if seen & set(p):
                raise InputError("extended paths must be vertex-disjoint")
            seen |= set(p)
        if len(set(self.centers)) != len(self.centers):
            raise InputError("center names must be distinct")
        if any(z in self.base for z in self.centers):
            raise InputError("center names must be new")

    def graph(self):
        out = self.base
        for p, z in zip(self.paths, self.centers):
            out = out.add_vertices((z,), tuple((z, v) for v in p))
        if self.weights is not None:
            full = {v: Fraction(1) for v in out.vertices}
            full.update(self.weights)
            out = out.with_weights(full)
        return out


@dataclass(frozen=True)
class GemWeights:
    """Stable set values of the four regions a 2-join hands to its gem.

    a, b, c are over A1 with C1, B1 with C1, and C1 alone; d is over all
    of X1 (regions taken in the extension, so centers on that side count).
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def block_weights(self):
        """The five weights (p, x, y, q, z) the gem carries."""
        return (self.a, self.a + self.b - self.d, self.d,
                2 * self.d - self.a, self.c + self.d)


def gem_weights(g, split):
    """GemWeights of a 2-join of g, by four full solves on the X1 side.

    Every region is an induced subgraph of g, so g in the class keeps
    all four calls in the class.
    """
    c1 = split.x1 - split.a1 - split.b1
    a = mwss(g.subgraph(split.a1 | c1)).weight
    b = mwss(g.subgraph(split.b1 | c1)).weight
    c = mwss(g.subgraph(c1)).weight
    d = mwss(g.subgraph(split.x1)).weight
    return GemWeights(a, b, c, d)


def build_gem_block(g, split, gw):
    """The gem block of a consistent 2-join: X1 becomes a weighted gem.

    X1 is replaced by an induced path p x y q plus a center z complete to
    it; p is complete to A2, q to B2, with no other new edges.  The five
    new weights come from gw, making the block satisfy
    alpha(block) = alpha(g) + gw.d.  The block can leave the class, so it
    is never class-checked.
    """
    ok, why = is_2join(g, split)
    if not ok:
        raise InputError(f"not a 2-join: {why}")
    ok, why = is_consistent_split(g, split)
    if not ok:
        raise InputError(f"inconsistent split: {why}")
    five = gw.block_weights()
    if any(w < 0 for w in five):
        raise InputError("gem weights go negative; gw does not come from "
                         "stable set values of this split")
    taken = set(split.x2)
    p, x, y, q, z = [_prime(n, taken)
                     for n in ("gem:p", "gem:x", "gem:y", "gem:q", "gem:z")]
    weights = {v: g.weight(v) for v in split.x2}
    weights.update(zip((p, x, y, q, z), five))
    edges = [e for e in g.edges() if e[0] in split.x2 and e[1] in split.x2]
    edges += [(p, x), (x, y), (y, q), (z, p), (z, x), (z, y), (z, q)]
    edges += [(p, v) for v in sorted(split.a2)]
    edges += [(q, v) for v in sorted(split.b2)]
    return Graph(sorted(split.x2) + [p, x, y, q, z], edges, weights,
                 name=f"{g.name}.gem")


# -- basic graphs with gems ----------------------------------------------------


def _place_center(incident, occupied, want, taken):
    """Endpoints for a new root edge meeting exactly the edges in want."""
    cand = sorted({r for e in want for r in e})
    for u1, u2 in itertools.combinations(cand, 2):
        if (incident[u1] | incident[u2]) == want \
                and frozenset((u1, u2)) not in occupied:
            return u1, u2
    for u in cand:
        if incident[u] == want:
            return u, _fresh(taken, "s")
    if not want:
        return _fresh(taken, "s"), _fresh(taken, "s")
    raise InternalError("a gem center admits no root edge")


def _line_alpha(h, gems):
    """Stable set value and witness for a line graph with gems attached.

    Strips the centers of `gems` that are still in h, reconstructs a root
    of the rest, and realizes each center as one extra root edge meeting
    exactly the root edges of the center's surviving path vertices.
    Stable sets of h then correspond to matchings of the augmented root,
    weight for weight.
    """
    mine = sorted((z, path) for z, path in gems if z in h)
    base = h.without([z for z, _ in mine])
    rg = detect.root_graph(base)
    if rg is None:
        raise ClassViolationError(
            "not the line graph of a triangle-free chordless graph",
            witness=detect.find_claw(base))
    root = rg.root
    taken = set(root.vertices)
    incident = {r: set() for r in root.vertices}
    owner, eweights, occupied = {}, {}, set()
    for v in sorted(base.vertices):
        e = frozenset(rg.edge_of[v])
        owner[e] = v
        eweights[tuple(sorted(e))] = h.weight(v)
        occupied.add(e)
        for r in e:
            incident[r].add(e)
    new_vs, new_es = [], []
    for z, path in mine:
        want = {frozenset(rg.edge_of[w]) for w in path if w in base}
        u1, u2 = _place_center(incident, occupied, want, taken)
        e = frozenset((u1, u2))
        occupied.add(e)
        owner[e] = z
        eweights[tuple(sorted((u1, u2)))] = h.weight(z)
        for u in (u1, u2):
            if u not in incident:
                incident[u] = set()
                new_vs.append(u)
            incident[u].add(e)
        new_es.append((u1, u2))
    total, matched = max_weight_matching(root.add_vertices(new_vs, new_es),
                                         eweights)
    return total, frozenset(owner[frozenset(e)] for e in matched)


def _claw_centers(g):
    out = []
    for u in sorted(g.vertices):
        nbrs = sorted(g.adj(u))
        if len(nbrs) >= 3 and any(g.is_stable(t)
                                  for t in itertools.combinations(nbrs, 3)):
            out.append(u)
    return out


def _special_clique(base, centers):
    """The clique K of a P-graph, grown from its claw centers.

    Several centers must already be a clique; a single center first looks
    for a triangle through itself and stays alone if there is none.
    Greedy lexicographic extension keeps the choice canonical.
    """
    kk = list(centers)
    if not base.is_clique(kk):
        raise ClassViolationError("claw centers do not form a clique, so "
                                  "the graph is not basic",
                                  witness=tuple(kk))
    if len(kk) == 1:
        u = kk[0]
        for x, y in itertools.combinations(sorted(base.adj(u)), 2):
            if base.has_edge(x, y):
                kk = [u, x, y]
                break
        else:
            return frozenset(kk)
    grown = set(kk)
    common = set.intersection(*(set(base.adj(v)) for v in grown)) - grown
    for c in sorted(common):
        if all(base.has_edge(c, v) for v in grown):
            grown.add(c)
    return frozenset(grown)


def _basic_ext_alpha(g):
    """(value, witness) on an extension of a basic graph."""
    if g.n == 0:
        return Fraction(0), frozenset()
    gems = _gem_centers(g)
    base = g.without([z for z, _ in gems])
    centers = _claw_centers(base)
    if not centers:
        return _line_alpha(g, gems)
    # P-graph: a stable set holds at most one vertex of the clique K.
    kk = _special_clique(base, centers)
    best, wit = _line_alpha(g.without(kk), gems)
    for v in sorted(kk):
        val, sub = _line_alpha(g.without(g.adj(v) | {v}), gems)
        if val + g.weight(v) > best:
            best, wit = val + g.weight(v), sub | {v}
    return best, frozenset(wit)


def mwss_basic_ext(g):
    """Maximum weight stable set of an extension of a basic graph.

    Accepts a Graph or a GemExtension; centers are located structurally
    (degree 4, neighborhood an induced 4-vertex path), claws of the
    stripped base decide line graph versus P-graph, and every piece is
    solved as a matching on a reconstructed root.
    """
    if isinstance(g, GemExtension):
        g = g.graph()
    val, wit = _basic_ext_alpha(g)
    return _certify(g, wit, val)


# -- 2-join reprocessing -------------------------------------------------------


def _extend_graph(h, gems):
    """Attach a center per (path, name, gw) triple, with the gem weights.

    Path vertices are reweighted to (a, a+b-d, d, 2d-a) and the center
    gets c+d; values from actual stable set computations are never
    negative here, so a negative one is a bug upstream.
    """
    cur = h if h.weighted else h.with_weights({v: Fraction(1)
                                               for v in h.vertices})
    for path, z, gw in gems:
        five = gw.block_weights()
        if any(w < 0 for w in five):
            raise InternalError("gem weights went negative")
        cur = cur.add_vertices((z,), tuple((z, v) for v in path),
                               {z: five[4]})
        full = cur.weights_dict()
        full.update(zip(path, five[:4]))
        cur = cur.with_weights(full)
    return cur


def mwss_D(g):
    """Maximum weight stable set of a connected graph with no star cutset.

    Without a 2-join the graph is basic and the matching route applies
    directly.  Otherwise the 2-join decomposition tree is reprocessed in
    order: the four region values of each step are computed on the
    extended leaf block (marker excluded by zeroing weights, never by
    deletion, so the structure stays an extension), the marker path
    becomes a gem everywhere it appears, the deepest graph is solved, and
    the gems are substituted back out of the solution one by one.
    """
    if g.n == 0:
        return StableSetCertificate(frozenset(), Fraction(0))
    if not connected(g):
        raise InputError("the graph is disconnected")
    if find_star_cutset(g) is not None:
        raise InputError("the graph has a star cutset")
    gful = g if g.weighted else g.with_weights({v: Fraction(1)
                                                for v in g.vertices})
    if find_2join(gful) is None:
        val, wit = _basic_ext_alpha(gful)
        return _certify(g, wit, val)
    tree = build_TG(gful)
    names = set()
    for gr in tree.chain:
        names |= set(gr.vertices)
    for st in tree.steps:
        names |= set(st.block.vertices)
    gem_of = {}   # marker path -> (center name, GemWeights, region witnesses)
    trace = []
    for i, st in enumerate(tree.steps, start=1):
        inherited = [(pth,) + gem_of[pth][:2] for pth in st.block_mpaths]
        hb = _extend_graph(st.block, inherited)
        bm = st.block_marker
        r_d = set(hb.vertices) - set(bm)
        r_a = r_d - hb.adj(bm[-1])   # marker ends stand for B1 and A1
        r_b = r_d - hb.adj(bm[0])
        vals, wits = {}, {}
        for key, region in (("a", r_a), ("b", r_b), ("c", r_a & r_b),
                            ("d", r_d)):
            zeroed = hb.with_weights({v: hb.weight(v) if v in region
                                      else Fraction(0) for v in hb.vertices})
            val, s = _basic_ext_alpha(zeroed)
            wit = frozenset(s & region)
            if hb.set_weight(wit) != val:
                raise InternalError("a region solve put weight outside "
                                    "its region")
            vals[key], wits[key] = val, wit
        gwi = GemWeights(vals["a"], vals["b"], vals["c"], vals["d"])
        gem_of[st.marker] = (_prime(f"gem:{i}:1", names), gwi, wits)
        trace.append({"step": i, **vals})
    mlist = [()]
    for i, st in enumerate(tree.steps):
        nxt = set(tree.chain[i + 1].vertices)
        mlist.append(tuple(pth for pth in mlist[i] if set(pth) <= nxt)
                     + (st.marker,))
    hs = [_extend_graph(tree.chain[i],
                        [(pth,) + gem_of[pth][:2] for pth in mlist[i]])
          for i in range(len(tree.chain))]
    val, s = _basic_ext_alpha(hs[-1])
    alpha = val - sum((gem_of[st.marker][1].d for st in tree.steps),
                      Fraction(0))
    cur = set(s)
    for i in range(len(tree.steps), 0, -1):
        st = tree.steps[i - 1]
        zname, gwi, wits = gem_of[st.marker]
        gemset = set(st.marker) | {zname}
        used_a = bool(cur & st.split.a2)
        used_b = bool(cur & st.split.b2)
        if used_a and used_b:
            canonical, repl = gwi.c + gwi.d, wits["c"]
        elif used_a:
            canonical, repl = gwi.b + gwi.d, wits["b"]
        elif used_b:
            canonical, repl = gwi.a + gwi.d, wits["a"]
        else:
            canonical, repl = 2 * gwi.d, wits["d"]
        if hs[i].set_weight(cur & gemset) != canonical:
            raise InternalError("gem pattern weight does not match its "
                                "region value")
        cur = (cur - gemset) | repl
        if not hs[i - 1].is_stable(cur):
            raise InternalError("gem back-substitution broke stability")
    if hs[0].set_weight(cur) != alpha:
        raise InternalError("back-substituted set misses the computed value")
    return _certify(g, cur, alpha, trace)


# -- clique cutset composition ---------------------------------------------------


def mwss(g):
    """Maximum weight stable set of a graph in the class.

    Clique cutsets first, Tarjan style: solve the near side once plus
    once per cutset vertex, fold the results into modified weights on the
    cutset, and recurse on the far side.  Cutset-free graphs go to
    mwss_D.  The trace collects the gem values of every 2-join step that
    fed the final answer.
    """
    if g.n == 0:
        return StableSetCertificate(frozenset(), Fraction(0))
    cut = find_clique_cutset(g)
    if cut is None:
        return mwss_D(g)
    kk, (aa, _, bb) = cut
    near = mwss(g.subgraph(aa))
    prof = {k: mwss(g.subgraph(aa - g.adj(k))) for k in sorted(kk)}
    mod = {}
    for k in sorted(kk):
        wk = g.weight(k) + prof[k].weight - near.weight
        if wk >= 0:   # a cutset vertex this bad never helps
            mod[k] = wk
    keep = set(mod) | bb
    far = mwss(g.subgraph(keep).with_weights(
        {v: mod.get(v, g.weight(v)) for v in keep}))
    hit = sorted(far.stable_set & kk)
    if hit:
        wit = far.stable_set | prof[hit[0]].stable_set
        trace = near.trace + prof[hit[0]].trace + far.trace
    else:
        wit = far.stable_set | near.stable_set
        trace = near.trace + far.trace
    return _certify(g, wit, near.weight + far.weight, trace)
