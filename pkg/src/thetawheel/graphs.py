"""Immutable simple graphs with optional exact rational vertex weights.

Vertices are opaque strings.  All iteration orders are derived from sorted
vertex ids, so every algorithm in the package is deterministic for free.

The text format, used by the CLI and the corpus files::

    # comment
    graph <name> <n> <m>
    v <id> [weight]
    e <id1> <id2>

Weights are nonnegative rationals written as `p` or `p/q`.  A file is
weighted as soon as one `v` line carries a weight; vertices without an
explicit weight then default to 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError

__all__ = [
    "Graph",
    "PathWitness",
    "LineGraphMap",
    "parse_graph",
    "format_graph",
    "induced_subgraph",
    "line_graph",
    "branches_and_limbs",
    "components",
    "connected",
    "is_flat_path",
    "to_networkx",
]


def _check_vertex_id(v):
    if not isinstance(v, str) or not v or any(c.isspace() for c in v):
        raise InputError(f"bad vertex id {v!r}: ids are nonempty strings without whitespace")


class Graph:
    """A finite simple graph.

    Construction validates everything once; afterwards the object is
    immutable and hashable by identity of its content.
    """

    __slots__ = ("name", "_vs", "_adj", "_weights", "_hash")

    def __init__(self, vertices, edges, weights=None, name="G"):
        vs = []
        seen = set()
        for v in vertices:
            _check_vertex_id(v)
            if v in seen:
                raise InputError(f"duplicate vertex {v!r}")
            seen.add(v)
            vs.append(v)
        self.name = name
        self._vs = tuple(sorted(vs))
        adj = {v: set() for v in self._vs}
        for e in edges:
            u, v = e
            if u not in adj or v not in adj:
                raise InputError(f"edge ({u!r}, {v!r}) mentions an unknown vertex")
            if u == v:
                raise InputError(f"self-loop at {u!r}")
            if v in adj[u]:
                raise InputError(f"parallel edge ({u!r}, {v!r})")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(adj[v]) for v in self._vs}
        if weights is None:
            self._weights = None
        else:
            w = {}
            for v in self._vs:
                x = Fraction(weights.get(v, 1))
                if x < 0:
                    raise InputError(f"negative weight {x} at vertex {v!r}")
                w[v] = x
            extra = set(weights) - seen
            if extra:
                raise InputError(f"weights given for unknown vertices {sorted(extra)!r}")
            self._weights = w
        self._hash = None

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self):
        return self._vs

    @property
    def n(self):
        return len(self._vs)

    @property
    def m(self):
        return sum(len(a) for a in self._adj.values()) // 2

    def edges(self):
        """All edges as sorted pairs, in sorted order."""
        out = []
        for u in self._vs:
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return tuple(out)

    def adj(self, v):
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def degree(self, v):
        return len(self.adj(v))

    def has_vertex(self, v):
        return v in self._adj

    def has_edge(self, u, v):
        return v in self.adj(u)

    @property
    def weighted(self):
        return self._weights is not None

    def weight(self, v):
        """Weight of `v`; 1 on unweighted graphs."""
        if v not in self._adj:
            raise InputError(f"unknown vertex {v!r}")
        if self._weights is None:
            return Fraction(1)
        return self._weights[v]

    def set_weight(self, vs):
        """Total weight of a vertex collection."""
        return sum((self.weight(v) for v in vs), Fraction(0))

    def weights_dict(self):
        return dict(self._weights) if self._weights is not None else None

    # -- structure predicates ----------------------------------------------

    def is_clique(self, vs):
        vs = list(vs)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if not self.has_edge(u, v):
                    return False
        return True

    def is_stable(self, vs):
        vs = list(vs)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if self.has_edge(u, v):
                    return False
        return True

    def anticomplete(self, xs, ys):
        xs = set(xs)
        for y in ys:
            if self.adj(y) & xs:
                return False
        return True

    def complete_between(self, xs, ys):
        xs, ys = set(xs), set(ys)
        if xs & ys:
            return False
        for y in ys:
            if not xs <= self.adj(y):
                return False
        return True

    # -- derived graphs ------------------------------------------------------

    def subgraph(self, vs, name=None):
        vs = set(vs)
        unknown = vs - set(self._vs)
        if unknown:
            raise InputError(f"unknown vertices {sorted(unknown)!r}")
        edges = [(u, v) for u, v in self.edges() if u in vs and v in vs]
        weights = None
        if self._weights is not None:
            weights = {v: self._weights[v] for v in vs}
        return Graph(vs, edges, weights, name or self.name)

    def without(self, vs, name=None):
        return self.subgraph(set(self._vs) - set(vs), name)

    def with_weights(self, weights, name=None):
        return Graph(self._vs, self.edges(), weights, name or self.name)

    def unweighted(self, name=None):
        return Graph(self._vs, self.edges(), None, name or self.name)

    def relabel(self, mapping, name=None):
        """Rename vertices by `mapping` (identity where missing)."""
        m = {v: mapping.get(v, v) for v in self._vs}
        if len(set(m.values())) != len(m):
            raise InputError("relabeling collapses distinct vertices")
        weights = None
        if self._weights is not None:
            weights = {m[v]: w for v, w in self._weights.items()}
        return Graph(m.values(), [(m[u], m[v]) for u, v in self.edges()],
                     weights, name or self.name)

    def add_vertices(self, new, edges, weights=None, name=None):
        """A new graph with extra vertices (and their edges) added."""
        allw = None
        if self._weights is not None or weights:
            allw = dict(self._weights or {v: Fraction(1) for v in self._vs})
            for v in new:
                allw[v] = Fraction((weights or {}).get(v, 1))
        return Graph(list(self._vs) + list(new),
                     list(self.edges()) + list(edges), allw, name or self.name)

    # -- dunder -------------------------------------------------------------

    def __contains__(self, v):
        return v in self._adj

    def __len__(self):
        return len(self._vs)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vs == other._vs and self._adj == other._adj
                and self._weights == other._weights)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vs, tuple(sorted(self.edges()))))
        return self._hash

    def __repr__(self):
        return f"Graph({self.name!r}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PathWitness:
    """A branch or limb: `vertices` in path order, interior all of degree 2.

    kind is "branch" (both ends of degree >= 3) or "limb" (one end of
    degree >= 3, the other of degree 1).  `vertices` is canonically
    oriented: branches start at the smaller end, limbs at the high-degree
    end.
    """

    kind: str
    vertices: tuple

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def ends(self):
        return (self.vertices[0], self.vertices[-1])

    @property
    def interior(self):
        return self.vertices[1:-1]

    def edges(self):
        return tuple(tuple(sorted(p)) for p in zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class LineGraphMap:
    """A root graph together with its line graph image.

    `edge_to_vertex` maps each root edge (sorted pair) to the image vertex
    that represents it; the mapping is a bijection onto the image's
    vertices.
    """

    root: Graph
    image: Graph
    edge_to_vertex: dict = field(hash=False)

    def vertex_to_edge(self):
        return {v: e for e, v in self.edge_to_vertex.items()}


# -- traversal helpers -------------------------------------------------------


def components(g, within=None):
    """Connected components (as frozensets), ordered by smallest member."""
    if within is None:
        within = g.vertices
    left = set(within)
    comps = []
    for start in sorted(within):
        if start not in left:
            continue
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj(u):
                if v in left and v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(frozenset(seen))
        left -= seen
    return comps


def connected(g, within=None):
    if within is None:
        within = g.vertices
    if not within:
        return True
    return len(components(g, within)) == 1


def induced_subgraph(g, vs, name=None):
    """The subgraph of `g` induced by the vertex set `vs`."""
    return g.subgraph(vs, name)


def line_graph(root, name=None):
    """Line graph of `root` as a LineGraphMap.

    Image vertex ids are "u~v" for the root edge (u, v), u < v.  An
    edgeless root has an empty line graph, which is never what a caller
    wants here, so it is rejected.
    """
    edges = root.edges()
    if not edges:
        raise InputError("line graph of an edgeless graph requested")
    e2v = {e: f"{e[0]}~{e[1]}" for e in edges}
    img_edges = []
    for v in root.vertices:
        star = sorted(e for e in edges if v in e)
        for e, f in itertools.combinations(star, 2):
            img_edges.append(tuple(sorted((e2v[e], e2v[f]))))
    img_edges = sorted(set(img_edges))
    image = Graph(e2v.values(), img_edges, None, name or f"L({root.name})")
    return LineGraphMap(root=root, image=image, edge_to_vertex=e2v)


def branches_and_limbs(g):
    """All branches and limbs of `g` as PathWitness objects.

    A branch is a path of length >= 1 whose interior vertices have degree 2
    and whose ends both have degree >= 3.  A limb is the same with one end
    of degree >= 3 and the other of degree 1.  Paths between two degree-1
    vertices and cycles through at most one branch vertex are neither.
    """
    out = {}
    for start in g.vertices:
        if g.degree(start) == 2:
            continue
        for nxt in sorted(g.adj(start)):
            path = [start, nxt]
            while g.degree(path[-1]) == 2:
                a, b = sorted(g.adj(path[-1]))
                step = b if a == path[-2] else a
                if step == start and len(path) >= 2:
                    break  # closed back into the start: a ring, not a path
                path.append(step)
            end = path[-1]
            if g.degree(end) == 2:
                continue  # walked around a cycle back to start
            d0, d1 = g.degree(start), g.degree(end)
            if d0 >= 3 and d1 >= 3:
                kind = "branch"
                oriented = path if path[0] <= path[-1] else path[::-1]
                if path[0] == path[-1]:
                    continue  # degenerate closed walk
            elif {d0 >= 3, d1 >= 3} == {True, False} and min(d0, d1) == 1:
                kind = "limb"
                oriented = path if d0 >= 3 else path[::-1]
            else:
                continue  # both ends degree 1: a path component
            key = frozenset(oriented)
            w = PathWitness(kind, tuple(oriented))
            prev = out.get(key)
            if prev is None or w.vertices < prev.vertices:
                out[key] = w
    return sorted(out.values(), key=lambda w: (w.kind, w.vertices))


def to_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def is_flat_path(g, path):
    """True iff `path` is a flat path of `g`.

    Flat: an induced path of length >= 3 whose interior vertices have
    degree 2 in `g` and whose ends have no common neighbor.
    """
    path = list(path)
    if len(set(path)) != len(path) or len(path) < 4:
        return False
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            return False
    for i, u in enumerate(path):
        for v in path[i + 2:]:
            if g.has_edge(u, v):
                return False
    for v in path[1:-1]:
        if g.degree(v) != 2:
            return False
    return not (g.adj(path[0]) & g.adj(path[-1]))


# -- text format --------------------------------------------------------------


def _format_weight(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_graph(text, read_weights=True):
    """Parse the text format described in the module docstring."""
    name = None
    n = m = None
    vertices = []
    weights = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if name is not None:
                raise InputError(f"line {lineno}: second graph header")
            if len(parts) != 4:
                raise InputError(f"line {lineno}: expected 'graph <name> <n> <m>'")
            name = parts[1]
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise InputError(f"line {lineno}: n and m must be integers") from None
        elif parts[0] == "v":
            if name is None:
                raise InputError(f"line {lineno}: 'v' before the graph header")
            if len(parts) not in (2, 3):
                raise InputError(f"line {lineno}: expected 'v <id> [weight]'")
            vertices.append(parts[1])
            if len(parts) == 3:
                try:
                    weights[parts[1]] = Fraction(parts[2])
                except (ValueError, ZeroDivisionError):
                    raise InputError(f"line {lineno}: bad weight {parts[2]!r}") from None
        elif parts[0] == "e":
            if name is None:
                raise InputError(f"line {lineno}: 'e' before the graph header")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'e <id1> <id2>'")
            edges.append((parts[1], parts[2]))
        else:
            raise InputError(f"line {lineno}: unknown record {parts[0]!r}")
    if name is None:
        raise InputError("missing graph header")
    if len(vertices) != n:
        raise InputError(f"header says {n} vertices, file lists {len(vertices)}")
    if len(edges) != m:
        raise InputError(f"header says {m} edges, file lists {len(edges)}")
    w = weights if (read_weights and weights) else None
    return Graph(vertices, edges, w, name)


def format_graph(g):
    lines = [f"graph {g.name} {g.n} {g.m}"]
    for v in g.vertices:
        if g.weighted:
            lines.append(f"v {v} {_format_weight(g.weight(v))}")
        else:
            lines.append(f"v {v}")
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
