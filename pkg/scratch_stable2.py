"""Corpus-wide cross-validation of mwss against brute_alpha."""
import itertools
import random
from fractions import Fraction

from thetawheel.generate import corpus_instances, random_basic, random_weights, flat_paths
from thetawheel.oracles import brute_alpha, check_certificate
from thetawheel.stable import GemExtension, mwss, mwss_basic_ext, mwss_D
from thetawheel.decompose import find_clique_cutset, find_2join, build_TG

ok = fail = 0


def check(label, cond):
    global ok, fail
    if cond:
        ok += 1
    else:
        fail += 1
        print("FAIL:", label)


# 60 mixed corpus members up to 22 vertices, all four kinds
for name, g, meta in corpus_instances(7, 60, min_n=4, max_n=22):
    if g.n > 24:
        continue
    cert = mwss(g)
    want = brute_alpha(g)[0]
    check(f"{name} n={g.n} value", cert.weight == want)
    check(f"{name} cert", check_certificate("stable-set", g, cert.as_dict())[0])

# basic members with random weights straight into mwss_basic_ext
for s in range(25):
    inst = random_basic(random.Random(f"s{s}").randint(4, 18), 900 + s)
    g = random_weights(inst.graph, 31 * s + 5)
    cut = find_clique_cutset(g)
    cert = mwss(g)
    check(f"basic+w {s} value", cert.weight == brute_alpha(g)[0])

# gem extensions of basic members (when a flat path exists)
hit = 0
for s in range(40):
    if hit >= 12:
        break
    inst = random_basic(random.Random(f"e{s}").randint(7, 16), 1700 + s)
    g = inst.graph
    fps = flat_paths(g, 3)
    if not fps:
        continue
    hit += 1
    rng = random.Random(f"w{s}")
    ext = GemExtension(g, (fps[0],), (f"z{s}",),
                       {f"z{s}": Fraction(rng.randrange(0, 6))})
    gg = ext.graph()
    cert = mwss_basic_ext(ext)
    check(f"ext {s} value", cert.weight == brute_alpha(gg)[0])
    check(f"ext {s} cert", check_certificate("stable-set", gg, cert.as_dict())[0])
print("extensions exercised:", hit)

# mwss_D directly on 2-join corpus members that have no clique cutset
deep = 0
for name, g, meta in corpus_instances(13, 40, min_n=6, max_n=20, kinds=("compose",)):
    if find_clique_cutset(g) is not None or g.n > 24:
        continue
    gful = g.with_weights({v: Fraction(1) for v in g.vertices})
    if find_2join(gful) is not None:
        deep = max(deep, build_TG(gful).depth)
    cert = mwss_D(g)
    check(f"{name} D value", cert.weight == brute_alpha(g)[0])
    check(f"{name} D cert", check_certificate("stable-set", g, cert.as_dict())[0])
print("max T_G depth seen:", deep)

print(f"\n{ok} ok, {fail} failed")
