"""Throwaway smoke for stable.py against brute oracles."""
import itertools
import random
from fractions import Fraction

from thetawheel.graphs import Graph, line_graph
from thetawheel.oracles import brute_alpha, brute_max_weight_matching, check_certificate
from thetawheel.stable import (GemExtension, GemWeights, build_gem_block,
                               gem_weights, max_weight_matching, mwss,
                               mwss_basic_ext, mwss_D, root_graph)
from thetawheel.decompose import find_2join, is_consistent_split
from thetawheel.errors import InputError
from thetawheel import detect

ok = fail = 0


def check(label, cond):
    global ok, fail
    if cond:
        ok += 1
    else:
        fail += 1
        print("FAIL:", label)


# ---- fixtures
def fig1():
    vs = "a b c a1 a2 b1 b2 c1 c2".split()
    es = [("a", "b"), ("a", "c"), ("b", "c"), ("a", "a1"), ("a", "a2"),
          ("b", "b1"), ("b", "b2"), ("c", "c1"), ("c", "c2"),
          ("a1", "b1"), ("a2", "c1"), ("b2", "c2")]
    return Graph(vs, es, name="fig1")


def prism():
    return Graph("u1 u2 u3 v1 v2 v3".split(),
                 [("u1", "u2"), ("u2", "u3"), ("u1", "u3"),
                  ("v1", "v2"), ("v2", "v3"), ("v1", "v3"),
                  ("u1", "v1"), ("u2", "v2"), ("u3", "v3")], name="prism")


def theta_root(p, q, r):
    """Chordless theta-shaped root: three internally disjoint x-y paths."""
    vs, es = ["x", "y"], []
    for tag, ln in (("p", p), ("q", q), ("r", r)):
        prev = "x"
        for i in range(ln - 1):
            v = f"{tag}{i}"
            vs.append(v)
            es.append((prev, v))
            prev = v
        es.append((prev, "y"))
    return Graph(vs, es, name=f"theta{p}{q}{r}")


def compose_on_branch(g1, g2):
    """Glue two line graphs of thetas on a length-4 branch image socket."""
    from thetawheel.decompose import Split
    # find a flat path of length 3 in each (image of a length-4 branch)
    def socket(g):
        from thetawheel.graphs import is_flat_path
        for quad in itertools.permutations(sorted(g.vertices), 4):
            if is_flat_path(g, quad):
                return quad
        raise AssertionError("no socket")
    s1, s2 = socket(g1), socket(g2)
    # rename g2 apart
    compose_on_branch.k += 1
    m = {v: f"b{compose_on_branch.k}:" + v for v in g2.vertices}
    g2r = g2.relabel(m)
    s2 = tuple(m[v] for v in s2)
    vs = [v for v in g1.vertices if v not in s1[1:3]] + \
         [v for v in g2r.vertices if v not in s2[1:3]]
    es = [e for e in g1.edges() if not (set(e) & set(s1[1:3]))] + \
         [e for e in g2r.edges() if not (set(e) & set(s2[1:3]))]
    # cross edges: ends of each socket take over the other's attachment
    es.append((s1[0], s2[0]))
    es += [(s1[0], v) for v in g2r.adj(s2[1]) if v != s2[0] and v != s2[2]]
    es.append((s1[3], s2[3]))
    es += [(s1[3], v) for v in g2r.adj(s2[2]) if v != s2[3] and v != s2[1]]
    return Graph(vs, es, name=f"{g1.name}+{g2.name}")


compose_on_branch.k = 0


# ---- matching examples
tri = Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
w, m = max_weight_matching(tri)
check("triangle matching weight 1", w == 1 and len(m) == 1)
c4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
w, m = max_weight_matching(c4, {("a", "b"): 1, ("b", "c"): 2,
                                ("c", "d"): 1, ("a", "d"): 2})
check("C4 weighted matching 4", w == 4)
rng = random.Random("mwm-smoke")
for t in range(40):
    n = rng.randrange(2, 9)
    vs = [f"v{i}" for i in range(n)]
    es = [e for e in itertools.combinations(vs, 2) if rng.random() < 0.45]
    g = Graph(vs, es)
    ew = {e: Fraction(rng.randrange(0, 9), rng.randrange(1, 4)) for e in g.edges()}
    want, _ = brute_max_weight_matching(g, ew)
    got, mm = max_weight_matching(g, ew)
    check(f"random matching {t}", got == want)
    # matched set is a matching
    used = [v for e in mm for v in e]
    check(f"random matching {t} disjoint", len(used) == len(set(used)))

# ---- root_graph
rr = root_graph(prism())
check("prism root K23", sorted(rr.root.degree(v) for v in rr.root.vertices) == [2, 2, 2, 3, 3])
check("prism root edge count", rr.root.m == 6)
rr = root_graph(tri)
check("triangle root K13", rr.root.m == 3 and max(rr.root.degree(v) for v in rr.root.vertices) == 3)
claw = Graph("uabc", [("u", "a"), ("u", "b"), ("u", "c")])
try:
    root_graph(claw)
    check("claw rejected", False)
except InputError:
    check("claw rejected", True)
# a line graph with diamonds (needs the Krausz search): L(K4)
k4 = Graph("1234", list(itertools.combinations("1234", 2)))
lk4 = line_graph(k4).image
check("L(K4) via detect is None (diamonds)", detect.root_graph(lk4) is None)
rr = root_graph(lk4)
lm = line_graph(rr.root)
import networkx as nx
from thetawheel.graphs import to_networkx
check("L(K4) root round trip", nx.is_isomorphic(to_networkx(lm.image), to_networkx(lk4)))
# round trip on random triangle-free chordless roots handled by detect
for t in range(10):
    root = theta_root(2, rng.randrange(2, 5), rng.randrange(3, 6))
    img = line_graph(root).image
    rr = root_graph(img)
    check(f"theta root round trip {t}",
          nx.is_isomorphic(to_networkx(rr.root), to_networkx(root)))

# ---- basic solves
cert = mwss_basic_ext(prism())
check("prism alpha 2", cert.weight == 2)
check("prism cert", check_certificate("stable-set", prism(), cert.as_dict())[0])
# 7-vertex P-graph fixture: claw center k with three limbs of length 2
pg = Graph("k p1 p2 p3 q1 q2 q3".split(),
           [("k", "p1"), ("p1", "q1"), ("k", "p2"), ("p2", "q2"),
            ("k", "p3"), ("p3", "q3"), ("q1", "q2"), ("q2", "q3"), ("q1", "q3")],
           name="pg7")
cert = mwss_basic_ext(pg)
check("P-graph 7 alpha", cert.weight == brute_alpha(pg)[0])
# extension fixture with heavy center
flat = None
from thetawheel.graphs import is_flat_path
base = line_graph(theta_root(2, 4, 4)).image
for quad in itertools.permutations(sorted(base.vertices), 4):
    if is_flat_path(base, quad):
        flat = quad
        break
ext = GemExtension(base, (flat,), ("z",), {"z": Fraction(10)})
gg = ext.graph()
cert = mwss_basic_ext(ext)
check("extension heavy center in optimum", "z" in cert.stable_set)
check("extension alpha matches brute", cert.weight == brute_alpha(gg)[0])
check("extension cert", check_certificate("stable-set", gg, cert.as_dict())[0])

# ---- gem identity on theta compositions
g = compose_on_branch(line_graph(theta_root(2, 4, 4)).image,
                      line_graph(theta_root(2, 2, 4)).image)
split = find_2join(g)
check("composition has 2-join", split is not None)
if split is not None:
    okc, why = is_consistent_split(g, split)
    check(f"composition split consistent ({why})", okc)
    gw = gem_weights(g, split)
    blk = build_gem_block(g, split, gw)
    check("gem weights nonneg", all(x >= 0 for x in gw.block_weights()))
    check("gem identity", brute_alpha(blk)[0] == brute_alpha(g)[0] + gw.d)
    c1 = split.x1 - split.a1 - split.b1
    if not c1:
        check("degenerate C1 c=0", gw.c == 0)

# ---- mwss_D on compositions, unit and rational weights
def check_solver(g, label, weights=None):
    gg = g if weights is None else g.with_weights(weights)
    cert = mwss_D(gg)
    want = brute_alpha(gg)[0]
    check(f"{label} value", cert.weight == want)
    check(f"{label} cert", check_certificate("stable-set", gg, cert.as_dict())[0])

check_solver(fig1().subgraph(fig1().vertices), "fig1-direct-D-skip", None) if False else None
g1 = compose_on_branch(line_graph(theta_root(2, 4, 4)).image,
                       line_graph(theta_root(2, 2, 4)).image)
check_solver(g1, "depth1 unit")
rw = {v: Fraction(rng.randrange(0, 7), rng.randrange(1, 3)) for v in g1.vertices}
check_solver(g1, "depth1 rational", rw)
g2 = compose_on_branch(g1, line_graph(theta_root(2, 2, 4)).image)
from thetawheel.decompose import build_TG
t = build_TG(g2.with_weights({v: Fraction(1) for v in g2.vertices}))
print("depth of chained composition:", t.depth)
check_solver(g2, "depth2 unit")
rw = {v: Fraction(rng.randrange(0, 7), rng.randrange(1, 3)) for v in g2.vertices}
check_solver(g2, "depth2 rational", rw)
print("trace of depth2:", mwss_D(g2).trace)

# ---- mwss full
cert = mwss(fig1())
check("fig1 alpha 4", cert.weight == 4)
check("fig1 cert", check_certificate("stable-set", fig1(), cert.as_dict())[0])
# two prisms glued on a vertex
pr2 = prism().relabel({v: "w" + v for v in prism().vertices})
glue = Graph(list(prism().vertices) + [v for v in pr2.vertices if v != "wu1"],
             list(prism().edges()) +
             [tuple(sorted(("u1" if x == "wu1" else x,
                            "u1" if y == "wu1" else y)))
              for x, y in pr2.edges()], name="glued")
cert = mwss(glue)
check("glued prisms alpha", cert.weight == brute_alpha(glue)[0])
# a tree
tvs = [f"t{i}" for i in range(11)]
tes = [(f"t{(i - 1) // 2}", f"t{i}") for i in range(1, 11)]
tg = Graph(tvs, tes)
cert = mwss(tg)
check("tree alpha", cert.weight == brute_alpha(tg)[0])
# disconnected
dis = Graph("abcd", [("a", "b"), ("c", "d")])
cert = mwss(dis)
check("disconnected alpha 2", cert.weight == 2)
# weighted clique-tree composition
gw2 = glue.with_weights({v: Fraction(rng.randrange(0, 5), rng.randrange(1, 3))
                         for v in glue.vertices})
cert = mwss(gw2)
check("glued weighted", cert.weight == brute_alpha(gw2)[0])

print(f"\n{ok} ok, {fail} failed")
