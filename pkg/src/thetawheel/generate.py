"""Generators: skeletons, P-graphs, random basic graphs, and composition
operations (2-joins, clique gluing) with verified output.

A skeleton is a labeled graph satisfying the eleven conditions below; its
P-graph is the line graph plus a special clique wired to the labeled
pendant edges.  Composition never trusts a construction: every composed
graph is checked to carry the promised structure, and class membership is
re-verified by the detectors unless the caller opts out.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ClassViolationError, GenerationError, InputError, InternalError
from .graphs import (Graph, branches_and_limbs, components, connected,
                     induced_subgraph, line_graph)
from .detect import find_forbidden, is_chordless, is_triangle_free
from .oracles import check_certificate

__all__ = [
    "Skeleton",
    "Violation",
    "validate_skeleton",
    "make_skeleton",
    "build_p_graph",
    "BasicInstance",
    "random_basic",
    "flat_paths",
    "random_weights",
    "compose_2join",
    "glue_clique_cutset",
    "corpus_instances",
]


# -- skeletons ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class Skeleton:
    graph: Graph
    k: int
    labels: dict = field(hash=False)  # pendant edge (sorted pair) -> 1..k

    def pendant_edges(self):
        return _pendant_edges(self.graph)


def _pendant_edges(g):
    return [e for e in g.edges() if g.degree(e[0]) == 1 or g.degree(e[1]) == 1]


def _is_path_with_end(g, vs, end):
    """Does `vs` induce a path in `g` with `end` as one of its endpoints?"""
    h = induced_subgraph(g, vs)
    if h.m != h.n - 1 or not connected(h):
        return False
    if any(h.degree(v) > 2 for v in h.vertices):
        return False
    return h.n == 1 or h.degree(end) == 1


def _labels_inside(g, labels, vs):
    vs = set(vs)
    return {lab for e, lab in labels.items() if e[0] in vs and e[1] in vs}


def validate_skeleton(g, k, labels):
    """Check the eleven skeleton conditions.

    Returns (skeleton, violations): the Skeleton when the list is empty,
    else None and the violations found.  Malformed input (labels off
    pendant edges, bad label values, bad k) raises InputError instead.
    """
    if not isinstance(k, int) or k < 1:
        raise InputError(f"k must be a positive integer, got {k!r}")
    pend = _pendant_edges(g)
    pend_set = set(pend)
    edge_set = set(g.edges())
    norm = {}
    for e, lab in labels.items():
        e = tuple(sorted(e))
        if e not in edge_set:
            raise InputError(f"label on non-edge {e!r}")
        if e not in pend_set:
            raise InputError(f"label on non-pendant edge {e!r}")
        if not isinstance(lab, int) or not 1 <= lab <= k:
            raise InputError(f"label of {e!r} is {lab!r}, expected 1..{k}")
        norm[e] = lab
    v = []

    # (i) connected, triangle-free, chordless, >= 3 pendant edges
    if not connected(g):
        v.append(Violation("i", (), "not connected"))
    if not is_triangle_free(g):
        v.append(Violation("i", (), "has a triangle"))
    if not is_chordless(g):
        v.append(Violation("i", (), "some cycle has a chord"))
    if len(pend) < 3:
        v.append(Violation("i", tuple(pend), f"only {len(pend)} pendant edges"))

    paths = branches_and_limbs(g)
    branches = [w for w in paths if w.kind == "branch"]
    limbs = [w for w in paths if w.kind == "limb"]

    # (ii) no two branches share both ends
    groups = {}
    for w in branches:
        groups.setdefault(frozenset(w.ends), []).append(w)
    for ws in groups.values():
        if len(ws) >= 2:
            v.append(Violation("ii", (ws[0].vertices, ws[1].vertices),
                               "parallel branches"))

    # (iii) components off a cut vertex each carry a degree-1 vertex
    for u in sorted(g.vertices):
        rest = set(g.vertices) - {u}
        comps = components(g, rest)
        if len(comps) < 2:
            continue
        for c in comps:
            if not any(g.degree(x) == 1 for x in c):
                v.append(Violation("iii", (u, tuple(sorted(c))),
                                   f"component off cut vertex {u!r} has no degree-1 vertex"))

    # (iv) components off a 2-cutset: degree-1 vertex or a chordless path
    for a, b in itertools.combinations(sorted(g.vertices), 2):
        rest = set(g.vertices) - {a, b}
        comps = components(g, rest)
        if len(comps) < 2:
            continue
        for c in comps:
            if any(g.degree(x) == 1 for x in c):
                continue
            h = induced_subgraph(g, set(c) | {a, b})
            is_path = (h.m == h.n - 1 and connected(h)
                       and all(h.degree(x) <= 2 for x in h.vertices)
                       and h.degree(a) == 1 and h.degree(b) == 1)
            if not is_path:
                v.append(Violation("iv", (a, b, tuple(sorted(c))),
                                   f"component off 2-cutset ({a!r}, {b!r}) is neither "
                                   f"pendant-ended nor a chordless path"))

    # (v) every cycle edge has an endpoint of degree 2
    bridges = _bridges(g)
    for e in g.edges():
        if e in bridges:
            continue
        if g.degree(e[0]) != 2 and g.degree(e[1]) != 2:
            v.append(Violation("v", e, f"cycle edge {e!r} joins two branch vertices"))

    # (vi) every pendant edge carries a label
    for e in pend:
        if e not in norm:
            v.append(Violation("vi", e, f"pendant edge {e!r} has no label"))

    counts = Counter(norm.values())

    # (vii) every label used, some label used twice
    for i in range(1, k + 1):
        if counts[i] == 0:
            v.append(Violation("vii", (i,), f"label {i} unused"))
    if norm and max(counts.values()) < 2:
        v.append(Violation("vii", (), "no label is used twice"))

    # (viii) a label on a length-1 limb is used nowhere else
    for e in pend:
        if e in norm and (g.degree(e[0]) >= 3 or g.degree(e[1]) >= 3):
            if counts[norm[e]] >= 2:
                v.append(Violation("viii", e,
                                   f"label {norm[e]} of length-1 limb {e!r} is reused"))

    # (ix) no branches forces k=1; parallel limbs get distinct labels,
    #      one of them reused
    if not branches:
        if k != 1:
            v.append(Violation("ix", (), f"no branches but k={k}"))
    else:
        for x in sorted(g.vertices):
            fam = [w for w in limbs if w.vertices[0] == x]
            if len(fam) < 2:
                continue
            labs = [norm.get(tuple(sorted(w.vertices[-2:]))) for w in fam]
            labs = [l for l in labs if l is not None]
            if len(set(labs)) != len(labs):
                v.append(Violation("ix", (x,),
                                   f"parallel limbs at {x!r} repeat a label"))
            if labs and not any(counts[l] >= 2 for l in labs):
                v.append(Violation("ix", (x,),
                                   f"no label at {x!r} is used twice overall"))

    # (x) petals at attaching vertices
    if k > 1:
        for x in sorted(g.vertices):
            if g.degree(x) < 3:
                continue
            rest = set(g.vertices) - {x}
            comps = components(g, rest)
            if len(comps) < 2:
                continue
            limb_comps = [c for c in comps if _is_path_with_end(g, set(c) | {x}, x)]
            petals = [set(c) | {x} for c in comps
                      if not _is_path_with_end(g, set(c) | {x}, x)]
            if len(limb_comps) >= 2:
                union = set()
                for c in limb_comps:
                    union |= c
                petals.append(union | {x})
            for p in petals:
                if len(_labels_inside(g, norm, p)) < 2:
                    v.append(Violation("x", (x, tuple(sorted(p))),
                                       f"petal at {x!r} uses fewer than 2 labels"))
            if len(petals) >= 2:
                for r in range(1, len(petals)):
                    for combo in itertools.combinations(range(len(petals)), r):
                        u = set()
                        for i in combo:
                            u |= petals[i]
                        other = (set(g.vertices) - u) | {x}
                        if not (_labels_inside(g, norm, u)
                                & _labels_inside(g, norm, other)):
                            v.append(Violation(
                                "x", (x, tuple(sorted(u))),
                                f"petal union at {x!r} shares no label with the rest"))

    # (xi) k=2 needs both labels twice
    if k == 2:
        for i in (1, 2):
            if counts[i] < 2:
                v.append(Violation("xi", (i,), f"k=2 but label {i} is used {counts[i]} time(s)"))

    if v:
        return None, v
    return Skeleton(graph=g, k=k, labels=norm), []


def make_skeleton(g, k, labels):
    skel, violations = validate_skeleton(g, k, labels)
    if skel is None:
        lines = "; ".join(f"({w.condition}) {w.message}" for w in violations)
        raise InputError(f"not a {k}-skeleton: {lines}")
    return skel


def _bridges(g):
    """Edges whose removal disconnects their ends."""
    out = set()
    for e in g.edges():
        u, w = e
        edges = [f for f in g.edges() if f != e]
        h = Graph(g.vertices, edges)
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in h.adj(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if w not in seen:
            out.add(e)
    return out


def build_p_graph(skel, name=None):
    """The P-graph of a skeleton: its line graph, a special clique
    v:1 .. v:k, and an edge from v:i to each pendant edge labeled i."""
    r = skel.graph
    if any("~" in x or ":" in x for x in r.vertices):
        raise InputError("skeleton vertex ids must not contain '~' or ':'")
    lg = line_graph(r)
    special = [f"v:{i}" for i in range(1, skel.k + 1)]
    edges = list(lg.image.edges())
    edges += list(itertools.combinations(special, 2))
    for e in sorted(skel.labels):
        edges.append((f"v:{skel.labels[e]}", lg.edge_to_vertex[e]))
    return Graph(list(lg.image.vertices) + special, edges, None,
                 name or f"P({r.name})")


# -- random basic graphs --------------------------------------------------------


@dataclass(frozen=True)
class BasicInstance:
    graph: Graph
    kind: str  # "line" or "p_graph"
    seed: int
    detail: dict = field(hash=False)


class _Namer:
    def __init__(self, prefix="s"):
        self.prefix = prefix
        self.i = 0

    def __call__(self):
        v = f"{self.prefix}{self.i}"
        self.i += 1
        return v


def _grow_root(rng, m_target, namer):
    """A random connected triangle-free chordless graph with m_target edges.

    Moves: hang a pendant path, subdivide an edge (both always safe), or
    join two vertices by a path of length >= 2 (kept only when the result
    stays triangle-free and chordless).
    """
    start = rng.randint(1, min(3, m_target))
    vs = [namer() for _ in range(start + 1)]
    g = Graph(vs, list(zip(vs, vs[1:])))
    guard = 0
    while g.m < m_target:
        guard += 1
        if guard > 400:
            raise GenerationError("root growth stalled", seed=None)
        budget = m_target - g.m
        move = rng.choice(("pendant", "pendant", "subdivide", "connect"))
        if move == "pendant":
            at = rng.choice(sorted(g.vertices))
            length = rng.randint(1, min(3, budget))
            chain = [at] + [namer() for _ in range(length)]
            g = g.add_vertices(chain[1:], list(zip(chain, chain[1:])))
        elif move == "subdivide":
            e = rng.choice(list(g.edges()))
            w = namer()
            edges = [f for f in g.edges() if f != e] + [(e[0], w), (w, e[1])]
            g = Graph(list(g.vertices) + [w], edges)
        elif budget >= 2 and g.n >= 2:
            u, w = rng.sample(sorted(g.vertices), 2)
            length = rng.randint(2, min(4, budget))
            mids = [namer() for _ in range(length - 1)]
            chain = [u] + mids + [w]
            cand = g.add_vertices(mids, list(zip(chain, chain[1:])))
            if is_triangle_free(cand) and is_chordless(cand):
                g = cand
    return g


def _limb(vertices, edges, at, length, namer):
    """Attach a fresh path of `length` edges at `at`; returns the pendant edge."""
    chain = [at] + [namer() for _ in range(length)]
    vertices.extend(chain[1:])
    edges.extend(zip(chain, chain[1:]))
    return tuple(sorted(chain[-2:]))


def _spread(rng, total, count, low, high):
    """`count` integers in [low, high] summing to `total`, or None."""
    if not (low * count <= total <= high * count):
        return None
    vals = [low] * count
    extra = total - low * count
    slots = list(range(count)) * (high - low)
    rng.shuffle(slots)
    for s in slots:
        if extra == 0:
            break
        if vals[s] < high:
            vals[s] += 1
            extra -= 1
    return vals if extra == 0 else None


def _tmpl_star(rng, m, namer):
    for count in rng.sample((3, 4, 5), 3):
        lens = _spread(rng, m, count, 2, 3)
        if lens is None:
            continue
        c = namer()
        vs, es, labels = [c], [], {}
        for ln in lens:
            labels[_limb(vs, es, c, ln, namer)] = 1
        return Graph(vs, es), 1, labels
    return None


def _tmpl_htree(rng, m, namer, extra_limb=False):
    k = 3 if extra_limb else 2
    for b in rng.sample((2, 3, 4), 3):
        rest = m - b - (1 if extra_limb else 0)
        lens = _spread(rng, rest, 4, 2, 3)
        if lens is None:
            continue
        x1, x2 = namer(), namer()
        vs, es = [x1, x2], []
        mids = [namer() for _ in range(b - 1)]
        chain = [x1] + mids + [x2]
        vs.extend(mids)
        es.extend(zip(chain, chain[1:]))
        labels = {}
        labels[_limb(vs, es, x1, lens[0], namer)] = 1
        labels[_limb(vs, es, x1, lens[1], namer)] = 2
        labels[_limb(vs, es, x2, lens[2], namer)] = 1
        labels[_limb(vs, es, x2, lens[3], namer)] = 2
        if extra_limb:
            labels[_limb(vs, es, x1, 1, namer)] = 3
        return Graph(vs, es), k, labels
    return None


def _tmpl_chain(rng, m, namer):
    for b1 in rng.sample((2, 3), 2):
        for b2 in rng.sample((2, 3), 2):
            rest = m - b1 - b2
            lens = _spread(rng, rest, 5, 2, 3)
            if lens is None:
                continue
            x, y1, y2 = namer(), namer(), namer()
            vs, es = [x, y1, y2], []
            for (u, w, b) in ((x, y1, b1), (x, y2, b2)):
                mids = [namer() for _ in range(b - 1)]
                chain = [u] + mids + [w]
                vs.extend(mids)
                es.extend(zip(chain, chain[1:]))
            labels = {}
            labels[_limb(vs, es, x, lens[0], namer)] = 1
            labels[_limb(vs, es, y1, lens[1], namer)] = 1
            labels[_limb(vs, es, y1, lens[2], namer)] = 2
            labels[_limb(vs, es, y2, lens[3], namer)] = 1
            labels[_limb(vs, es, y2, lens[4], namer)] = 2
            return Graph(vs, es), 2, labels
    return None


def _cycle_positions(rng, c, a):
    if c < 2 * a:
        return None
    pos = [2 * i for i in range(a)]
    shift = rng.randint(0, c - 1)
    return [(p + shift) % c for p in pos]


def _tmpl_cycle(rng, m, namer, k):
    """Cycle body with limbs at pairwise nonadjacent attach vertices.

    k=1: one limb per attach vertex, all labeled 1.  k=2: the first two
    attach vertices carry two limbs labeled 1 and 2, the rest one limb of
    either label.
    """
    for c in rng.sample(range(6, 11), 5):
        for a in rng.sample((3, 4), 2):
            nlimbs = a + 2 if k == 2 else a
            lens = _spread(rng, m - c, nlimbs, 2, 3)
            if lens is None or c < 2 * a:
                continue
            ring = [namer() for _ in range(c)]
            vs = list(ring)
            es = list(zip(ring, ring[1:])) + [(ring[-1], ring[0])]
            pos = _cycle_positions(rng, c, a)
            labels = {}
            li = 0
            for idx, p in enumerate(pos):
                at = ring[p]
                if k == 2 and idx < 2:
                    labels[_limb(vs, es, at, lens[li], namer)] = 1
                    labels[_limb(vs, es, at, lens[li + 1], namer)] = 2
                    li += 2
                else:
                    lab = 1 if k == 1 else rng.choice((1, 2))
                    labels[_limb(vs, es, at, lens[li], namer)] = lab
                    li += 1
            return Graph(vs, es), k, labels
    return None


def _p_graph_candidates(rng, n):
    """(template, k) choices whose P-graph can have exactly n vertices."""
    out = []
    if n - 1 >= 6:
        out.append(("star", 1))
    if 10 <= n - 2 <= 16:
        out.append(("htree", 2))
    if 11 <= n - 3 <= 17:
        out.append(("htree3", 3))
    if 14 <= n - 2 <= 21:
        out.append(("chain", 2))
    if 12 <= n - 1 <= 22:
        out.append(("cycle1", 1))
    if 16 <= n - 2 <= 28:
        out.append(("cycle2", 2))
    rng.shuffle(out)
    return out


def random_basic(n, seed, kind=None):
    """A random basic graph with exactly n vertices.

    kind: "line", "p_graph", or None to let the seed decide.  Raises
    GenerationError (carrying the seed) when the budget does not fit,
    which for p_graphs happens below 7 vertices.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    rng = random.Random(f"basic:{seed}:{n}:{kind}")
    if kind is None:
        kind = "p_graph" if n >= 8 and rng.random() < 0.45 else "line"
    if kind == "line":
        namer = _Namer()
        for attempt in range(40):
            try:
                root = _grow_root(rng, n, namer)
            except GenerationError:
                continue
            return BasicInstance(
                graph=line_graph(root, name=f"line{seed}").image, kind="line",
                seed=seed, detail={"n": n, "root_n": root.n, "root_m": root.m})
        raise GenerationError(f"no line-route basic graph with {n} vertices", seed=seed)
    if kind != "p_graph":
        raise InputError(f"unknown kind {kind!r}")
    builders = {"star": lambda r, m, nm: _tmpl_star(r, m, nm),
                "htree": lambda r, m, nm: _tmpl_htree(r, m, nm),
                "htree3": lambda r, m, nm: _tmpl_htree(r, m, nm, extra_limb=True),
                "chain": lambda r, m, nm: _tmpl_chain(r, m, nm),
                "cycle1": lambda r, m, nm: _tmpl_cycle(r, m, nm, 1),
                "cycle2": lambda r, m, nm: _tmpl_cycle(r, m, nm, 2)}
    for attempt in range(200):
        cands = _p_graph_candidates(rng, n)
        if not cands:
            raise GenerationError(f"no P-graph template fits {n} vertices", seed=seed)
        tname, k = cands[0]
        got = builders[tname](rng, n - k, _Namer())
        if got is None:
            continue
        r, k, labels = got
        skel, violations = validate_skeleton(r, k, labels)
        if skel is None:
            continue
        return BasicInstance(graph=build_p_graph(skel, name=f"pg{seed}"),
                             kind="p_graph", seed=seed,
                             detail={"n": n, "template": tname, "k": k,
                                     "skeleton_m": r.m})
    raise GenerationError(f"P-graph generation exhausted retries at n={n}", seed=seed)


def random_weights(g, seed):
    """Random nonnegative rational weights, deterministic in the seed."""
    rng = random.Random(f"weights:{seed}")
    w = {}
    for v in g.vertices:
        w[v] = Fraction(rng.randint(0, 12), rng.choice((1, 1, 2, 3, 4)))
    return g.with_weights(w)


# -- composition ------------------------------------------------------------------


def flat_paths(g, length=3):
    """All flat paths of the given length: induced, interior degree 2,
    ends without a common neighbor.  Canonical orientation, sorted."""
    if length < 3:
        raise InputError("flat paths have length at least 3")
    out = set()

    def ext(path, pset):
        if len(path) == length + 1:
            a, b = path[0], path[-1]
            if not (g.adj(a) & g.adj(b)):
                out.add(min(tuple(path), tuple(path[::-1])))
            return
        last = path[-1]
        if len(path) >= 2 and g.degree(last) != 2:
            return
        for u in sorted(g.adj(last)):
            if u in pset:
                continue
            if any(g.has_edge(u, p) for p in path[:-1]):
                continue
            ext(path + [u], pset | {u})

    for v in sorted(g.vertices):
        ext([v], {v})
    return sorted(out)


def _check_socket_path(g, path):
    path = list(path)
    if len(path) < 3:
        raise InputError("marker path needs length at least 2")
    if len(set(path)) != len(path):
        raise InputError("marker path repeats a vertex")
    for v in path:
        if v not in g:
            raise InputError(f"marker path vertex {v!r} missing from the graph")
    for u, w in zip(path, path[1:]):
        if not g.has_edge(u, w):
            raise InputError(f"marker path step ({u!r}, {w!r}) is not an edge")
    for u, w in itertools.combinations(range(len(path)), 2):
        if w - u != 1 and g.has_edge(path[u], path[w]):
            raise InputError("marker path has a chord")
    for v in path[1:-1]:
        if g.degree(v) != 2:
            raise InputError(f"marker path interior {v!r} has neighbors off the path")
    if (g.adj(path[0]) & g.adj(path[-1])) - set(path):
        raise InputError("marker path ends share a neighbor off the path")


def _merge_weights(g1, keep1, g2, keep2, rename):
    if not (g1.weighted or g2.weighted):
        return None
    w = {}
    for v in keep1:
        w[v] = g1.weight(v)
    for v in keep2:
        w[rename[v]] = g2.weight(v)
    return w


def _fresh_names(taken, names):
    rename = {}
    for v in names:
        w = v
        while w in taken:
            w = "b:" + w
        rename[v] = w
        taken.add(w)
    return rename


def compose_2join(g1, p2_path, g2, p1_path, verify_class=True, name=None):
    """Reverse of taking 2-join blocks: replace the marker path `p2_path`
    of g1 by g2 minus its marker path `p1_path`, joining neighborhoods of
    corresponding marker ends (first end to first end).

    Returns (graph, split) where split names X1, X2, A1, B1, A2, B2.  The
    split is always re-verified as a 2-join; with verify_class the result
    is also checked to be (theta, wheel)-free.
    """
    _check_socket_path(g1, p2_path)
    _check_socket_path(g2, p1_path)
    a1 = sorted(g1.adj(p2_path[0]) - set(p2_path))
    b1 = sorted(g1.adj(p2_path[-1]) - set(p2_path))
    a2 = sorted(g2.adj(p1_path[0]) - set(p1_path))
    b2 = sorted(g2.adj(p1_path[-1]) - set(p1_path))
    if not (a1 and b1 and a2 and b2):
        raise InputError("a marker path end has no neighbors outside the path")
    x1 = [v for v in g1.vertices if v not in set(p2_path)]
    x2 = [v for v in g2.vertices if v not in set(p1_path)]
    if len(x1) < 3 or len(x2) < 3:
        raise InputError("a 2-join side would have fewer than 3 vertices")
    rename = _fresh_names(set(x1), x2)
    edges = [(u, w) for u, w in g1.edges() if u in set(x1) and w in set(x1)]
    edges += [(rename[u], rename[w]) for u, w in g2.edges()
              if u in set(x2) and w in set(x2)]
    edges += [(u, rename[w]) for u in a1 for w in a2]
    edges += [(u, rename[w]) for u in b1 for w in b2]
    weights = _merge_weights(g1, x1, g2, x2, rename)
    graph = Graph(x1 + [rename[v] for v in x2], edges, weights,
                  name or f"{g1.name}*{g2.name}")
    split = {"X1": sorted(x1), "X2": sorted(rename[v] for v in x2),
             "A1": a1, "B1": b1,
             "A2": sorted(rename[v] for v in a2),
             "B2": sorted(rename[v] for v in b2)}
    ok, msg = check_certificate("2-join", graph, split)
    if not ok:
        raise InternalError(f"composition failed to produce a 2-join: {msg}")
    if verify_class:
        w = find_forbidden(graph)
        if w is not None:
            raise ClassViolationError("composition left the class", witness=w)
    return graph, split


def glue_clique_cutset(ga, ka, gb, kb, verify_class=True, name=None):
    """Identify the clique ka of ga with the clique kb of gb (in order).

    ga keeps its vertex names; colliding names on the gb side get a "b:"
    prefix.  Returns (graph, cutset) where cutset names K, A, B.
    """
    ka, kb = list(ka), list(kb)
    if len(ka) != len(kb):
        raise InputError("cliques to identify differ in size")
    if len(set(ka)) != len(ka) or len(set(kb)) != len(kb):
        raise InputError("clique vertices repeat")
    for g, kk in ((ga, ka), (gb, kb)):
        for v in kk:
            if v not in g:
                raise InputError(f"clique vertex {v!r} missing")
        if not g.is_clique(kk):
            raise InputError(f"{kk!r} is not a clique")
    if ga.n == len(ka) or gb.n == len(kb):
        raise InputError("gluing needs vertices outside the identified clique")
    if ga.weighted and gb.weighted:
        for u, w in zip(ka, kb):
            if ga.weight(u) != gb.weight(w):
                raise InputError(f"weights of identified vertices {u!r}, {w!r} differ")
    ident = dict(zip(kb, ka))
    b_side = [v for v in gb.vertices if v not in set(kb)]
    rename = _fresh_names(set(ga.vertices), b_side)
    rename.update(ident)
    edges = list(ga.edges())
    have = set(edges)
    for u, w in gb.edges():
        e = tuple(sorted((rename[u], rename[w])))
        if e not in have:
            edges.append(e)
            have.add(e)
    weights = None
    if ga.weighted or gb.weighted:
        weights = {v: ga.weight(v) for v in ga.vertices}
        for v in b_side:
            weights[rename[v]] = gb.weight(v)
    graph = Graph(list(ga.vertices) + [rename[v] for v in b_side], edges,
                  weights, name or f"{ga.name}+{gb.name}")
    cut = {"K": sorted(ka),
           "A": sorted(set(ga.vertices) - set(ka)),
           "B": sorted(rename[v] for v in b_side)}
    ok, msg = check_certificate("clique-cutset", graph, cut)
    if not ok:
        raise InternalError(f"gluing failed to produce a clique cutset: {msg}")
    if verify_class:
        w = find_forbidden(graph)
        if w is not None:
            raise ClassViolationError("gluing left the class", witness=w)
    return graph, cut


# -- corpus ---------------------------------------------------------------------


def corpus_instances(seed, count, min_n=4, max_n=20,
                     kinds=("basic", "weighted", "compose", "glue")):
    """A deterministic mixed corpus of verified class members.

    Yields (name, graph, meta) triples.  Basic members are in the class by
    construction; composed and glued members are re-verified with the
    detectors before being emitted.
    """
    rng = random.Random(f"corpus:{seed}")
    out = []
    i = 0
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 40 * count + 200:
            raise GenerationError("corpus generation stalled", seed=seed)
        kind = kinds[len(out) % len(kinds)]
        i += 1
        sub = seed * 100003 + i
        if kind in ("basic", "weighted"):
            n = rng.randint(min_n, max_n)
            inst = random_basic(n, sub)
            g = inst.graph
            if kind == "weighted":
                g = random_weights(g, sub)
            out.append((f"{kind}-{len(out)}", g,
                        {"kind": kind, "seed": sub, "source": inst.kind}))
        elif kind == "compose":
            got = _corpus_compose(rng, sub, max_n)
            if got is None:
                continue
            graph, split = got
            out.append((f"compose-{len(out)}", graph,
                        {"kind": "compose", "seed": sub, "split": split}))
        else:
            got = _corpus_glue(rng, sub, max_n)
            if got is None:
                continue
            graph, cut = got
            out.append((f"glue-{len(out)}", graph,
                        {"kind": "glue", "seed": sub, "cutset": cut}))
    return out


def _corpus_compose(rng, sub, max_n):
    for t in range(8):
        n1 = rng.randint(7, max(8, min(12, max_n - 3)))
        n2 = rng.randint(7, max(8, min(12, max_n - 3)))
        if n1 + n2 - 8 > max_n:
            continue
        try:
            i1 = random_basic(n1, sub * 7 + t)
            i2 = random_basic(n2, sub * 11 + t)
            f1 = flat_paths(i1.graph)
            f2 = flat_paths(i2.graph)
            if not f1 or not f2:
                continue
            return compose_2join(i1.graph, list(rng.choice(f1)),
                                 i2.graph, list(rng.choice(f2)))
        except (GenerationError, InputError, ClassViolationError):
            continue
    return None


def _corpus_glue(rng, sub, max_n):
    for t in range(8):
        n1 = rng.randint(4, max(5, min(10, max_n - 3)))
        n2 = rng.randint(4, max(5, min(10, max_n - 3)))
        if n1 + n2 - 2 > max_n:
            continue
        try:
            i1 = random_basic(n1, sub * 13 + t)
            i2 = random_basic(n2, sub * 17 + t)
            e1 = rng.choice(list(i1.graph.edges()))
            e2 = rng.choice(list(i2.graph.edges()))
            return glue_clique_cutset(i1.graph, list(e1), i2.graph, list(e2))
        except (GenerationError, InputError, ClassViolationError):
            continue
    return None
