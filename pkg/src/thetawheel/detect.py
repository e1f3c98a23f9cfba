"""Structure detectors: thetas, wheels, small patterns, sparse/chordless
tests, line graph roots, and the structural report behind the CLI.

Witness formats match `oracles.check_certificate("forbidden-witness", ...)`.
All detectors are deterministic: candidates are scanned in sorted order and
the first hit is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .graphs import Graph, branches_and_limbs, components, connected, to_networkx

__all__ = [
    "find_triangle",
    "find_diamond",
    "find_claw",
    "find_theta",
    "find_wheel",
    "find_forbidden",
    "in_class",
    "is_triangle_free",
    "is_chordless",
    "is_sparse",
    "holes",
    "rings",
    "free_vertices",
    "parallel_vertex_pairs",
    "structural_report",
    "RootGraph",
    "root_graph",
]


# -- small patterns ------------------------------------------------------------


def find_triangle(g):
    for u, v in g.edges():
        for w in sorted(g.adj(u) & g.adj(v)):
            return (u, v, w)
    return None


def is_triangle_free(g):
    return find_triangle(g) is None


def find_diamond(g):
    """A K4 minus an edge: returns (u, v, x, y) with uv the shared edge and
    x, y the nonadjacent pair, or None."""
    for u, v in g.edges():
        common = sorted(g.adj(u) & g.adj(v))
        for x, y in itertools.combinations(common, 2):
            if not g.has_edge(x, y):
                return (u, v, x, y)
    return None


def find_claw(g):
    """An induced K_{1,3}: returns (center, (a, b, c)) or None."""
    for c in sorted(g.vertices):
        nbrs = sorted(g.adj(c))
        if len(nbrs) < 3:
            continue
        for trip in itertools.combinations(nbrs, 3):
            if g.is_stable(trip):
                return (c, trip)
    return None


# -- thetas and wheels -----------------------------------------------------------


def _chordless_xy_paths(g, x, y, banned):
    """Chordless x-y paths whose interior avoids `banned`, in lex order.

    A path is grown only through vertices adjacent to nothing on the path
    except its last vertex, so every yielded path is induced.
    """

    def ext(path, pset):
        last = path[-1]
        for u in sorted(g.adj(last)):
            if u == y:
                if all(not g.has_edge(u, p) for p in path[:-1]):
                    yield path + [u]
                continue
            if u in pset or u in banned:
                continue
            if any(g.has_edge(u, p) for p in path[:-1]):
                continue
            yield from ext(path + [u], pset | {u})

    yield from ext([x], {x})


def find_theta(g):
    """First theta, as {"witness": "theta", "ends": [x, y], "paths": [...]}."""
    for x, y in itertools.combinations(sorted(g.vertices), 2):
        if g.has_edge(x, y) or g.degree(x) < 3 or g.degree(y) < 3:
            continue
        for p1 in _chordless_xy_paths(g, x, y, frozenset()):
            int1 = set(p1[1:-1])
            ban2 = set(int1)
            for v in int1:
                ban2 |= g.adj(v)
            ban2 -= {x, y}
            for p2 in _chordless_xy_paths(g, x, y, ban2):
                int2 = set(p2[1:-1])
                ban3 = set(ban2) | int2
                for v in int2:
                    ban3 |= g.adj(v)
                ban3 -= {x, y}
                for p3 in _chordless_xy_paths(g, x, y, ban3):
                    return {"witness": "theta", "ends": [x, y],
                            "paths": [p1, p2, p3]}
    return None


def holes(g):
    """All holes (chordless cycles of length >= 4), each exactly once.

    Canonical form: the minimum vertex first, then the smaller of its two
    cycle neighbors. Yields in lex order of that form.
    """
    for s in sorted(g.vertices):
        for v1 in sorted(g.adj(s)):
            if v1 < s:
                continue

            def ext(path, pset):
                last = path[-1]
                for u in sorted(g.adj(last)):
                    if u in pset or u < s:
                        continue
                    if any(g.has_edge(u, p) for p in path[1:-1]):
                        continue
                    if g.has_edge(u, s):
                        if len(path) + 1 >= 4 and path[1] < u:
                            yield path + [u]
                        continue
                    yield from ext(path + [u], pset | {u})

            yield from ext([s, v1], {s, v1})


def find_wheel(g):
    """First wheel, as {"witness": "wheel", "hole": [...], "hub": v}."""
    for hub in sorted(g.vertices):
        if g.degree(hub) < 3:
            continue
        rest = g.without([hub])
        spokes = g.adj(hub)
        for hole in holes(rest):
            if len(spokes & set(hole)) >= 3:
                return {"witness": "wheel", "hole": hole, "hub": hub}
    return None


def find_forbidden(g):
    """A theta or wheel witness if the graph has one, else None."""
    return find_theta(g) or find_wheel(g)


def in_class(g):
    """True iff the graph is (theta, wheel)-free."""
    return find_forbidden(g) is None


# -- sparse / chordless -----------------------------------------------------------


def is_sparse(g):
    """Every edge has an endpoint of degree at most 2."""
    return all(g.degree(u) <= 2 or g.degree(v) <= 2 for u, v in g.edges())


def is_chordless(g):
    """No cycle has a chord: every edge fails to lie on a cycle of G minus
    that edge (checked through biconnected components)."""
    h = to_networkx(g)
    for u, v in g.edges():
        h.remove_edge(u, v)
        for comp in nx.biconnected_components(h):
            if len(comp) >= 3 and u in comp and v in comp:
                h.add_edge(u, v)
                return False
        h.add_edge(u, v)
    return True


# -- rings and friends -------------------------------------------------------------


def rings(g):
    """All rings: holes with at most one vertex of degree >= 3.

    Each ring is a vertex tuple in cyclic order.  The first entry is the
    ring's degree >= 3 vertex when it has one (else the minimum vertex),
    followed by the smaller of its two ring neighbors.
    """
    out = []
    seen = set()
    for v in sorted(g.vertices):
        if g.degree(v) < 3:
            continue
        for n0 in sorted(g.adj(v)):
            if g.degree(n0) != 2:
                continue
            path = [v, n0]
            closed = False
            while True:
                last = path[-1]
                if g.degree(last) != 2:
                    break
                a, b = sorted(g.adj(last))
                nxt = b if a == path[-2] else a
                if nxt == v:
                    closed = True
                    break
                path.append(nxt)
            if closed and len(path) >= 4:
                key = frozenset(path)
                if key not in seen:
                    seen.add(key)
                    out.append(tuple(path))
    for comp in components(g):
        if all(g.degree(v) == 2 for v in comp) and len(comp) >= 4:
            start = min(comp)
            nxt = min(g.adj(start))
            cyc = [start, nxt]
            while True:
                a, b = sorted(g.adj(cyc[-1]))
                step = b if a == cyc[-2] else a
                if step == start:
                    break
                cyc.append(step)
            if len(cyc) == len(comp):
                out.append(tuple(cyc))
    return sorted(out)


def free_vertices(g):
    """Degree-2 vertices whose both neighbors also have degree 2."""
    return [v for v in g.vertices
            if g.degree(v) == 2 and all(g.degree(u) == 2 for u in g.adj(v))]


def parallel_vertex_pairs(g):
    """Pairs of degree-2 vertices lying in distinct parallel branches."""
    groups = {}
    for w in branches_and_limbs(g):
        if w.kind == "branch":
            groups.setdefault(frozenset(w.ends), []).append(w)
    pairs = set()
    for ws in groups.values():
        if len(ws) < 2:
            continue
        for w1, w2 in itertools.combinations(ws, 2):
            for u in w1.interior:
                for v in w2.interior:
                    pairs.add(tuple(sorted((u, v))))
    return sorted(pairs)


def structural_report(g):
    degs = {v: g.degree(v) for v in g.vertices}
    return {
        "n": g.n,
        "m": g.m,
        "connected": connected(g),
        "max_degree": max(degs.values(), default=0),
        "triangle_free": is_triangle_free(g),
        "chordless": is_chordless(g),
        "sparse": is_sparse(g),
        "degrees": degs,
        "rings": [list(r) for r in rings(g)],
        "free_vertices": free_vertices(g),
        "branches": [list(w.vertices) for w in branches_and_limbs(g) if w.kind == "branch"],
        "limbs": [list(w.vertices) for w in branches_and_limbs(g) if w.kind == "limb"],
        "parallel_vertex_pairs": [list(p) for p in parallel_vertex_pairs(g)],
    }


# -- line graph roots ----------------------------------------------------------------


@dataclass(frozen=True)
class RootGraph:
    """A root graph R with L(R) equal to the recognized graph.

    `edge_of` maps each recognized vertex to the root edge (sorted pair)
    it stands for.
    """

    root: Graph
    edge_of: dict = field(hash=False)


def root_graph(g):
    """Reconstruct a triangle-free-style root: RootGraph, or None.

    Works on diamond-free graphs, where every edge lies in a unique maximal
    clique and those cliques are the stars of the root's vertices of degree
    at least 2.  Triangles are always read as stars, which is the right
    reading when a triangle-free root is expected.  The reconstruction is
    verified before returning; any failure returns None.
    """
    cliques = []
    index = {}
    for u, v in g.edges():
        q = frozenset({u, v} | (g.adj(u) & g.adj(v)))
        if not g.is_clique(q):
            return None
        if q not in index:
            index[q] = len(cliques)
            cliques.append(q)
    at = {v: [] for v in g.vertices}
    for i, q in enumerate(cliques):
        for v in sorted(q):
            at[v].append(i)
    for v in g.vertices:
        if len(at[v]) > 2:
            return None
        while len(at[v]) < 2:
            index[frozenset({v})] = len(cliques)
            cliques.append(frozenset({v}))
            at[v].append(len(cliques) - 1)
    names = {i: f"r{i}" for i in range(len(cliques))}
    edge_of = {}
    root_edges = set()
    for v in g.vertices:
        i, j = at[v]
        e = tuple(sorted((names[i], names[j])))
        if e in root_edges:
            return None
        root_edges.add(e)
        edge_of[v] = e
    root = Graph(names.values(), root_edges, None, f"root({g.name})")
    for u, v in itertools.combinations(sorted(g.vertices), 2):
        share = bool(set(edge_of[u]) & set(edge_of[v]))
        if share != g.has_edge(u, v):
            return None
    return RootGraph(root=root, edge_of=edge_of)
