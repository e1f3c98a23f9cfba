import itertools
import random

from thetawheel.graphs import Graph, components, connected
from thetawheel.oracles import check_certificate
from thetawheel.detect import find_forbidden
from thetawheel.generate import random_basic, flat_paths, compose_2join, corpus_instances
from thetawheel.decompose import (
    find_star_cutset, minimal_separators, clique_minimal_separators,
    find_clique_cutset, clique_cutset_tree, Split, is_2join,
    is_consistent_split, find_2join, minimally_sided_2join, blocks, build_TG,
    _is_path_graph,
)

fig1 = Graph(
    ["a", "b", "c", "a1", "a2", "b1", "b2", "c1", "c2"],
    [("a", "b"), ("a", "c"), ("b", "c"), ("a", "a1"), ("a", "a2"),
     ("b", "b1"), ("b", "b2"), ("c", "c1"), ("c", "c2"),
     ("a1", "b1"), ("a2", "c1"), ("b2", "c2")],
    name="fig1")

prism = Graph(
    ["u1", "u2", "u3", "v1", "v2", "v3"],
    [("u1", "u2"), ("u1", "u3"), ("u2", "u3"),
     ("v1", "v2"), ("v1", "v3"), ("v2", "v3"),
     ("u1", "v1"), ("u2", "v2"), ("u3", "v3")],
    name="prism")


def brute_star_cutset(g):
    vs = sorted(g.vertices)
    for r in range(1, g.n - 1):
        for sub in itertools.combinations(vs, r):
            s = set(sub)
            if len(components(g, set(vs) - s)) < 2:
                continue
            if not connected(g, set(vs) - s) and any(
                    s - {c} <= g.adj(c) for c in s):
                return frozenset(s)
    return None


def brute_minimal_separators(g):
    vs = sorted(g.vertices)
    out = set()
    for r in range(1, g.n - 1):
        for sub in itertools.combinations(vs, r):
            s = set(sub)
            comps = components(g, set(vs) - s)
            full = [c for c in comps if {u for v in c for u in g.adj(v)} - c == s]
            if len(full) >= 2:
                out.add(frozenset(s))
    return out


def brute_has_2join(g):
    if g.n < 6 or not connected(g):
        return None
    vs = sorted(g.vertices)
    for r in range(3, g.n - 2):
        for sub in itertools.combinations(vs, r):
            x1 = frozenset(sub)
            x2 = frozenset(set(vs) - x1)
            crossing = {}
            for v in x1:
                nb = g.adj(v) & x2
                if nb:
                    crossing[v] = nb
            groups = set(crossing.values())
            if len(groups) != 2:
                continue
            n1, n2 = sorted(groups, key=sorted)
            if n1 & n2:
                continue
            a1 = frozenset(v for v, nb in crossing.items() if nb == n1)
            b1 = frozenset(v for v, nb in crossing.items() if nb == n2)
            # crossing must be complete from both sides
            split = Split(x1, a1, b1, x2, n1, n2)
            ok, _ = is_2join(g, split)
            if ok:
                return split
    return None


random.seed(5)

# star cutset: exact vs brute on small random graphs
for trial in range(300):
    n = random.randint(3, 8)
    vs = [f"v{i}" for i in range(n)]
    edges = [e for e in itertools.combinations(vs, 2) if random.random() < 0.45]
    g = Graph(vs, edges, name=f"r{trial}")
    mine = find_star_cutset(g)
    brute = brute_star_cutset(g)
    assert (mine is None) == (brute is None), (trial, mine, brute)
    if mine is not None:
        rest = set(vs) - mine
        assert rest and len(components(g, rest)) >= 2, (trial, mine)
        assert any(mine - {c} <= g.adj(c) for c in mine), (trial, mine)
print("star cutset vs brute: ok")

# minimal separators: exact vs brute
for trial in range(200):
    n = random.randint(3, 8)
    vs = [f"v{i}" for i in range(n)]
    edges = [e for e in itertools.combinations(vs, 2) if random.random() < 0.5]
    g = Graph(vs, edges, name=f"s{trial}")
    assert minimal_separators(g) == brute_minimal_separators(g), trial
print("minimal separators vs brute: ok")

# clique cutset on fig1
got = find_clique_cutset(fig1)
assert got is not None
k, (a, k2, b) = got
assert k == k2
ok, why = check_certificate("clique-cutset", fig1,
                            {"K": sorted(k), "A": sorted(a), "B": sorted(b)})
assert ok, why
assert find_clique_cutset(fig1.subgraph(a | k)) is None  # atom side
tree = clique_cutset_tree(fig1)
lvs = tree.leaves()
assert len(lvs) <= fig1.n
for leaf in lvs:
    assert find_clique_cutset(leaf.graph) is None
print("fig1 clique cutset + tree: ok,", len(lvs), "leaves, depth", tree.depth())

# prism: no cutsets, no 2-join
assert find_star_cutset(prism) is None
assert find_clique_cutset(prism) is None
assert find_2join(prism) is None
print("prism: no star cutset, no clique cutset, no 2-join: ok")

# find_2join vs brute on small random graphs (sparse-ish to allow joins)
agree = found_some = 0
for trial in range(250):
    n = random.randint(6, 9)
    vs = [f"v{i}" for i in range(n)]
    edges = [e for e in itertools.combinations(vs, 2) if random.random() < 0.3]
    g = Graph(vs, edges, name=f"j{trial}")
    mine = find_2join(g)
    brute = brute_has_2join(g)
    assert (mine is None) == (brute is None), (trial, mine, brute)
    if mine is not None:
        ok, why = is_2join(g, mine)
        assert ok, (trial, why)
        found_some += 1
    agree += 1
print(f"find_2join vs brute: ok ({found_some} of {agree} had one)")

# corpus compositions: planted splits are at least almost 2-joins; real
# 2-joins whenever the sides are not degenerate
built = real = 0
for name, g, meta in corpus_instances(3, 60, kinds=("compose",)):
    built += 1
    planted = Split.from_dict(meta["split"])
    ok, why = is_2join(g, planted)
    if ok:
        real += 1
        found = find_2join(g)
        assert found is not None, name
        okf, whyf = is_2join(g, found)
        assert okf, (name, whyf)
print(f"corpus compose: {built} built, {real} planted real 2-joins, all found")
assert real >= 10


# members of the class with no clique cutset and a 2-join: line graphs of
# theta-shaped chordless roots composed along branch images
from thetawheel.graphs import line_graph


def theta_root(p, q, r, tag=""):
    vs = [f"{tag}x", f"{tag}y"]
    edges = []
    for label, length in (("p", p), ("q", q), ("r", r)):
        prev = f"{tag}x"
        for i in range(1, length):
            v = f"{tag}{label}{i}"
            vs.append(v)
            edges.append((prev, v))
            prev = v
        edges.append((prev, f"{tag}y"))
    return Graph(vs, edges, name=f"theta{tag}")


def branch_socket(lg, length=4):
    for path in flat_paths(lg):
        if len(path) == length:
            return list(path)
    raise AssertionError("no socket")


t1 = line_graph(theta_root(2, 4, 4, "a")).image
t2 = line_graph(theta_root(2, 2, 4, "b")).image
t3 = line_graph(theta_root(2, 2, 4, "c")).image
assert find_forbidden(t1) is None and find_clique_cutset(t1) is None

g, cert = compose_2join(t1, branch_socket(t1), t2, branch_socket(t2))
assert find_forbidden(g) is None
assert find_clique_cutset(g) is None and find_star_cutset(g) is None
planted = Split.from_dict(cert)
ok, why = is_2join(g, planted)
assert ok, why
okc, whyc = is_consistent_split(g, planted)
assert okc, whyc
found = find_2join(g)
okc, whyc = is_consistent_split(g, found)
assert okc, whyc
ms = minimally_sided_2join(g)
assert ms is not None and len(ms.a1) >= 2 and len(ms.b1) >= 2
tree = build_TG(g)
print("one theta compose: n =", g.n, "tree depth", tree.depth)
for leaf, mpaths in tree.leaves():
    assert find_star_cutset(leaf) is None
    assert find_2join(leaf) is None
    assert find_forbidden(leaf) is None

# chain a third piece for depth 2, using the surviving long branch of t1
gg, cert2 = compose_2join(g, branch_socket(g), t3, branch_socket(t3))
assert find_forbidden(gg) is None
assert find_clique_cutset(gg) is None and find_star_cutset(gg) is None
tree2 = build_TG(gg)
print("chained compose: n =", gg.n, "tree depth", tree2.depth)
assert tree2.depth >= 2
for leaf, mpaths in tree2.leaves():
    assert find_star_cutset(leaf) is None
    assert find_2join(leaf) is None
    assert find_forbidden(leaf) is None
    for path in mpaths:
        assert all(leaf.has_vertex(v) for v in path)

# same with the stable set flavor (marker independence enforced)
tree3 = build_TG(gg, use_minimally_sided=False)
assert tree3.independent
tree4 = build_TG(gg, use_minimally_sided=True)
assert not tree4.independent

# blocks round trip on the planted split: the recovered g1 block with a
# marker of the socket's length is isomorphic to the original t1 piece
import networkx as nx
from thetawheel.graphs import to_networkx

sock = branch_socket(t2)
g5, cert5 = compose_2join(t1, branch_socket(t1), t2, sock)
pair = blocks(g5, Split.from_dict(cert5), k=len(sock) - 1, tag="rt")
assert nx.is_isomorphic(to_networkx(pair.g2), to_networkx(t2))
assert nx.is_isomorphic(to_networkx(pair.g1), to_networkx(t1))
print("blocks round trip: ok")
print("all decompose smoke tests passed")
