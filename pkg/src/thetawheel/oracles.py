"""Brute-force reference solvers and certificate checks.

Everything here is definition-first and independent of the structural
solvers: the only imports are the graph type and the standard library.
Each solver refuses instances above a desk-scale size limit instead of
silently taking forever; the limits can be raised through the environment
variable ``THETAWHEEL_ORACLE_LIMITS`` (``"name=value,name=value"``).
"""

from __future__ import annotations

import dataclasses
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .graphs import Graph, components

__all__ = [
    "OracleLimits",
    "oracle_limits",
    "maximal_cliques",
    "brute_omega",
    "brute_alpha",
    "brute_chi",
    "brute_clique_chromatic",
    "brute_list_edge_color",
    "brute_max_weight_matching",
    "check_certificate",
]


@dataclass(frozen=True)
class OracleLimits:
    """Per-oracle instance size ceilings (vertices, except edges where noted)."""

    omega: int = 22
    alpha: int = 24
    chi: int = 28
    chi_clique: int = 14
    list_edge_edges: int = 16


def oracle_limits():
    limits = OracleLimits()
    raw = os.environ.get("THETAWHEEL_ORACLE_LIMITS", "").strip()
    if not raw:
        return limits
    known = {f.name for f in dataclasses.fields(OracleLimits)}
    override = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in known:
            raise InputError(
                f"bad THETAWHEEL_ORACLE_LIMITS entry {item!r}: "
                f"expected one of {sorted(known)} = <int>")
        try:
            override[name] = int(value.strip())
        except ValueError:
            raise InputError(f"bad THETAWHEEL_ORACLE_LIMITS value {value!r}") from None
    return dataclasses.replace(limits, **override)


def _guard(name, size, limit):
    if size > limit:
        raise InputError(
            f"{name} oracle refused: instance size {size} exceeds limit {limit}; "
            f"set THETAWHEEL_ORACLE_LIMITS='{name}={size}' or higher to override")


# -- clique / stable set -------------------------------------------------------


def maximal_cliques(g):
    """All inclusion-wise maximal cliques (Bron-Kerbosch with pivoting)."""
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda u: len(g.adj(u) & p))
        for v in sorted(p - g.adj(pivot)):
            bk(r | {v}, p & g.adj(v), x & g.adj(v))
            p = p - {v}
            x = x | {v}

    bk(frozenset(), frozenset(g.vertices), frozenset())
    return sorted(out, key=sorted)


def brute_omega(g, limits=None):
    """Maximum weight clique by branch and bound: (weight, vertex set)."""
    lim = limits or oracle_limits()
    _guard("omega", g.n, lim.omega)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    best = [Fraction(0), frozenset()]

    def grow(current, cw, cands):
        if cw > best[0]:
            best[0], best[1] = cw, frozenset(current)
        suffix = Fraction(0)
        sums = [Fraction(0)] * (len(cands) + 1)
        for i in range(len(cands) - 1, -1, -1):
            suffix += g.weight(cands[i])
            sums[i] = suffix
        for i, v in enumerate(cands):
            if cw + sums[i] <= best[0]:
                return
            grow(current + [v], cw + g.weight(v),
                 [u for u in cands[i + 1:] if g.has_edge(u, v)])

    grow([], Fraction(0), order)
    return best[0], best[1]


def brute_alpha(g, limits=None):
    """Maximum weight stable set by branch and bound: (weight, vertex set)."""
    lim = limits or oracle_limits()
    _guard("alpha", g.n, lim.alpha)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    best = [Fraction(0), frozenset()]

    def grow(chosen, cw, cands):
        if cw > best[0]:
            best[0], best[1] = cw, frozenset(chosen)
        if not cands:
            return
        if cw + sum((g.weight(u) for u in cands), Fraction(0)) <= best[0]:
            return
        v = cands[0]
        grow(chosen + [v], cw + g.weight(v),
             [u for u in cands[1:] if not g.has_edge(u, v)])
        grow(chosen, cw, cands[1:])

    grow([], Fraction(0), order)
    return best[0], best[1]


# -- colorings -----------------------------------------------------------------


def _greedy_coloring(g, order):
    colors = {}
    for v in order:
        used = {colors[u] for u in g.adj(v) if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _try_k_coloring(g, order, k):
    colors = {}

    def place(i, maxused):
        if i == len(order):
            return True
        v = order[i]
        used = {colors[u] for u in g.adj(v) if u in colors}
        for c in range(1, min(k, maxused + 1) + 1):
            if c in used:
                continue
            colors[v] = c
            if place(i + 1, max(maxused, c)):
                return True
            del colors[v]
        return False

    if place(0, 0):
        return dict(colors)
    return None


def brute_chi(g, limits=None):
    """Chromatic number and a witness coloring, by iterative deepening."""
    lim = limits or oracle_limits()
    _guard("chi", g.n, lim.chi)
    if g.n == 0:
        return 0, {}
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    greedy = _greedy_coloring(g, order)
    ub = max(greedy.values())
    clique = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    lb = max(1, len(clique))
    for k in range(lb, ub):
        got = _try_k_coloring(g, order, k)
        if got is not None:
            return k, got
    return ub, greedy


def brute_clique_chromatic(g, limits=None):
    """Clique chromatic number: fewest colors with no maximal clique of
    size >= 2 monochromatic.  Returns (number, coloring)."""
    lim = limits or oracle_limits()
    _guard("chi_clique", g.n, lim.chi_clique)
    if g.n == 0:
        return 0, {}
    cliques = [c for c in maximal_cliques(g) if len(c) >= 2]
    if not cliques:
        return 1, {v: 1 for v in g.vertices}
    order = sorted(g.vertices)
    at = {v: [c for c in cliques if v in c] for v in order}

    def try_k(k):
        colors = {}

        def place(i):
            if i == len(order):
                return True
            v = order[i]
            for c in range(1, k + 1):
                colors[v] = c
                ok = True
                for q in at[v]:
                    got = {colors[u] for u in q if u in colors}
                    if len(got) == 1 and all(u in colors for u in q):
                        ok = False
                        break
                if ok and place(i + 1):
                    return True
                del colors[v]
            return False

        if place(0):
            return dict(colors)
        return None

    for k in itertools.count(2):
        got = try_k(k)
        if got is not None:
            return k, got


def brute_list_edge_color(g, lists, limits=None):
    """Proper edge coloring respecting per-edge color lists, or None.

    `lists` maps each edge (sorted vertex pair) to its allowed colors.
    """
    lim = limits or oracle_limits()
    _guard("list_edge_edges", g.m, lim.list_edge_edges)
    edges = list(g.edges())
    norm = {}
    for e, L in lists.items():
        norm[tuple(sorted(e))] = sorted(set(L))
    missing = [e for e in edges if e not in norm]
    if missing:
        raise InputError(f"no color list for edges {missing!r}")
    order = sorted(edges, key=lambda e: (len(norm[e]), e))
    touching = {e: [f for f in edges if f != e and set(f) & set(e)] for e in edges}
    colors = {}

    def place(i):
        if i == len(order):
            return True
        e = order[i]
        used = {colors[f] for f in touching[e] if f in colors}
        for c in norm[e]:
            if c in used:
                continue
            colors[e] = c
            if place(i + 1):
                return True
            del colors[e]
        return False

    if place(0):
        return dict(colors)
    return None


def brute_max_weight_matching(g, edge_weights=None, limits=None):
    """Maximum weight matching by enumeration: (weight, edge set)."""
    lim = limits or oracle_limits()
    _guard("alpha", g.m, lim.alpha)
    edges = list(g.edges())
    w = {e: Fraction(1) for e in edges}
    if edge_weights is not None:
        for e, x in edge_weights.items():
            e = tuple(sorted(e))
            if e not in w:
                raise InputError(f"weight for non-edge {e!r}")
            w[e] = Fraction(x)
    best = [Fraction(0), frozenset()]

    def grow(i, chosen, used, cw, remaining):
        if cw > best[0]:
            best[0], best[1] = cw, frozenset(chosen)
        if i == len(edges) or cw + remaining <= best[0]:
            return
        e = edges[i]
        rest = remaining - w[e]
        if not (set(e) & used):
            grow(i + 1, chosen + [e], used | set(e), cw + w[e], rest)
        grow(i + 1, chosen, used, cw, rest)

    grow(0, [], set(), Fraction(0), sum(w.values(), Fraction(0)))
    return best[0], best[1]


# -- certificate checks --------------------------------------------------------


def _as_weight(x):
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad weight value {x!r}") from None


def _edge_items(keyed):
    """Normalize {(u,v): x} dicts and [[u, v, x], ...] lists to sorted-pair items."""
    if isinstance(keyed, dict):
        items = [(tuple(sorted(k)), x) for k, x in keyed.items()]
    else:
        items = []
        for row in keyed:
            if len(row) != 3:
                raise InputError(f"bad edge record {row!r}: expected [u, v, value]")
            u, v, x = row
            items.append((tuple(sorted((u, v))), x))
    return items


def _check_vertex_colors(g, colors):
    colors = dict(colors)
    missing = [v for v in g.vertices if v not in colors]
    if missing:
        return None, f"vertices {missing!r} not colored"
    for v, c in colors.items():
        if v not in g:
            return None, f"color given for unknown vertex {v!r}"
        if not isinstance(c, int) or c < 1:
            return None, f"color of {v!r} is {c!r}, expected a positive integer"
    return colors, None


def check_certificate(kind, g, cert):
    """Check a certificate against its definition.  Returns (ok, message).

    Kinds: clique, stable-set, vertex-coloring, edge-coloring,
    clique-coloring, 2-join, clique-cutset, forbidden-witness.
    Malformed certificates raise InputError; a well-formed certificate that
    fails its definition yields (False, reason).
    """
    if kind in ("clique", "stable-set"):
        vs = list(cert["vertices"])
        unknown = [v for v in vs if v not in g]
        if unknown:
            return False, f"unknown vertices {unknown!r}"
        if len(set(vs)) != len(vs):
            return False, "repeated vertices"
        if kind == "clique":
            if not g.is_clique(vs):
                return False, "not a clique: some pair is nonadjacent"
        else:
            if not g.is_stable(vs):
                return False, "not a stable set: some pair is adjacent"
        if "weight" in cert:
            want = _as_weight(cert["weight"])
            have = g.set_weight(vs)
            if have != want:
                return False, f"weight is {have}, certificate claims {want}"
        return True, "ok"

    if kind == "vertex-coloring":
        colors, err = _check_vertex_colors(g, cert["colors"])
        if err:
            return False, err
        for u, v in g.edges():
            if colors[u] == colors[v]:
                return False, f"edge ({u!r}, {v!r}) is monochromatic"
        if "max_colors" in cert and len(set(colors.values())) > cert["max_colors"]:
            return False, (f"{len(set(colors.values()))} colors used, "
                           f"certificate allows {cert['max_colors']}")
        return True, "ok"

    if kind == "edge-coloring":
        colors = dict(_edge_items(cert["colors"]))
        for e in g.edges():
            if e not in colors:
                return False, f"edge {e!r} not colored"
        for e, c in colors.items():
            if e not in set(g.edges()):
                return False, f"color given for non-edge {e!r}"
            if not isinstance(c, int) or c < 1:
                return False, f"color of {e!r} is {c!r}, expected a positive integer"
        edges = list(colors)
        for e, f in itertools.combinations(edges, 2):
            if set(e) & set(f) and colors[e] == colors[f]:
                return False, f"edges {e!r} and {f!r} share an endpoint and a color"
        if "lists" in cert:
            lists = dict(_edge_items(cert["lists"]))
            for e, c in colors.items():
                if e not in lists:
                    return False, f"no list for edge {e!r}"
                if c not in set(lists[e]):
                    return False, f"edge {e!r} colored {c} outside its list {sorted(set(lists[e]))!r}"
        return True, "ok"

    if kind == "clique-coloring":
        colors, err = _check_vertex_colors(g, cert["colors"])
        if err:
            return False, err
        for q in maximal_cliques(g):
            if len(q) >= 2 and len({colors[v] for v in q}) == 1:
                return False, f"maximal clique {sorted(q)!r} is monochromatic"
        if "max_colors" in cert and len(set(colors.values())) > cert["max_colors"]:
            return False, (f"{len(set(colors.values()))} colors used, "
                           f"certificate allows {cert['max_colors']}")
        return True, "ok"

    if kind == "2-join":
        x1, x2 = frozenset(cert["X1"]), frozenset(cert["X2"])
        a1, b1 = frozenset(cert["A1"]), frozenset(cert["B1"])
        a2, b2 = frozenset(cert["A2"]), frozenset(cert["B2"])
        if x1 & x2 or (x1 | x2) != frozenset(g.vertices):
            return False, "X1, X2 do not partition the vertex set"
        for label, part, side in (("A1", a1, x1), ("B1", b1, x1),
                                  ("A2", a2, x2), ("B2", b2, x2)):
            if not part:
                return False, f"{label} is empty"
            if not part <= side:
                return False, f"{label} is not inside its side"
        if a1 & b1 or a2 & b2:
            return False, "A and B overlap on one side"
        if len(x1) < 3 or len(x2) < 3:
            return False, "a side has fewer than 3 vertices"
        for u in sorted(x1):
            crossing = g.adj(u) & x2
            want = a2 if u in a1 else (b2 if u in b1 else frozenset())
            if crossing != want:
                return False, (f"vertex {u!r} sees {sorted(crossing)!r} across the "
                               f"split, expected {sorted(want)!r}")
        return True, "ok"

    if kind == "clique-cutset":
        k = frozenset(cert["K"])
        a = frozenset(cert["A"])
        b = frozenset(cert["B"])
        if (a | k | b) != frozenset(g.vertices) or (a & k) or (a & b) or (k & b):
            return False, "A, K, B do not partition the vertex set"
        if not a or not b:
            return False, "a side of the cutset is empty"
        if not g.is_clique(k):
            return False, "K is not a clique"
        for u in sorted(a):
            hit = g.adj(u) & b
            if hit:
                return False, f"edge from {u!r} to {sorted(hit)!r} crosses the cutset"
        return True, "ok"

    if kind == "forbidden-witness":
        return _check_forbidden_witness(g, cert)

    raise InputError(f"unknown certificate kind {kind!r}")


def _induces_cycle(g, vs):
    """Does `vs` induce a cycle of length >= 4 (that is, a hole)?"""
    vs = set(vs)
    if len(vs) < 4:
        return False
    for v in vs:
        if len(g.adj(v) & vs) != 2:
            return False
    return len(components(g, vs)) == 1


def _check_forbidden_witness(g, cert):
    what = cert.get("witness")
    if what == "theta":
        x, y = cert["ends"]
        paths = [list(p) for p in cert["paths"]]
        if len(paths) != 3:
            return False, "a theta needs exactly three paths"
        if x == y or g.has_edge(x, y):
            return False, "theta ends must be distinct and nonadjacent"
        interiors = []
        for p in paths:
            if p[0] != x or p[-1] != y:
                return False, f"path {p!r} does not run from {x!r} to {y!r}"
            if len(p) < 3:
                return False, f"path {p!r} has length < 2"
            if len(set(p)) != len(p):
                return False, f"path {p!r} repeats a vertex"
            for u, v in zip(p, p[1:]):
                if not g.has_edge(u, v):
                    return False, f"({u!r}, {v!r}) is not an edge"
            interiors.append(set(p[1:-1]))
        for i, j in itertools.combinations(range(3), 2):
            if interiors[i] & interiors[j]:
                return False, "paths share an interior vertex"
            if not _induces_cycle(g, set(paths[i]) | set(paths[j])):
                return False, (f"paths {i + 1} and {j + 1} do not together "
                               f"induce a hole")
        return True, "ok"
    if what == "wheel":
        hole = list(cert["hole"])
        hub = cert["hub"]
        if hub in hole:
            return False, "hub lies on the hole"
        if not _induces_cycle(g, hole):
            return False, "claimed hole does not induce a cycle of length >= 4"
        spokes = g.adj(hub) & set(hole)
        if len(spokes) < 3:
            return False, f"hub has only {len(spokes)} neighbors on the hole"
        return True, "ok"
    raise InputError(f"unknown forbidden-witness kind {what!r}")
