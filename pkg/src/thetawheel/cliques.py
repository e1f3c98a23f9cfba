"""Maximum weight clique and clique coloring via bisimplicial elimination.

In this class every induced subgraph keeps a bisimplicial vertex (one
whose neighborhood is a disjoint union of at most two anticomplete
cliques), which gives an elimination scheme: peeling such vertices one by
one solves maximum weight clique exactly and yields a 3-clique-coloring.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClassViolationError, InputError
from .graphs import Graph, components


def _split_neighborhood(g, v, within):
    """Components of N(v) inside `within`, or None if not bisimplicial."""
    nb = g.adj(v) & within
    comps = components(g, nb)
    if len(comps) > 2:
        return None
    for c in comps:
        if not g.is_clique(c):
            return None
    comps += [frozenset()] * (2 - len(comps))
    return comps[0], comps[1]


def is_bisimplicial(g, v):
    """Whether N(v) is a disjoint union of at most 2 anticomplete cliques."""
    return _split_neighborhood(g, v, frozenset(g.vertices)) is not None


def find_bisimplicial(g, avoid=()):
    """Lex-least bisimplicial vertex of g outside `avoid`, or None.

    `avoid` must be a clique: for a clique K that is not all of the graph,
    membership in the class guarantees a bisimplicial vertex outside K.
    """
    avoid = frozenset(avoid)
    unknown = avoid - set(g.vertices)
    if unknown:
        raise InputError(f"unknown vertices {sorted(unknown)!r}")
    if not g.is_clique(avoid):
        raise InputError("the set to avoid must be a clique")
    everything = frozenset(g.vertices)
    for v in g.vertices:
        if v in avoid:
            continue
        if _split_neighborhood(g, v, everything) is not None:
            return v
    return None


@dataclass(frozen=True)
class CliqueCertificate:
    """A maximum weight clique plus the elimination order that proves it."""

    clique: frozenset
    weight: Fraction
    elimination_order: tuple

    def as_dict(self):
        return {"vertices": sorted(self.clique), "weight": self.weight,
                "elimination_order": list(self.elimination_order)}


def max_weight_clique(g):
    """A maximum weight clique of a graph in the class.

    Repeatedly takes the lex-least bisimplicial vertex v of the residual
    graph: any clique through v lies in {v} + K1 or {v} + K2, so those two
    are weighed and v is discarded.  Raises ClassViolationError when some
    residual graph has no bisimplicial vertex, which cannot happen for
    members of the class.
    """
    best = None
    best_weight = Fraction(0)
    order = []
    residual = g
    left = set(g.vertices)
    while residual.n:
        v = find_bisimplicial(residual)
        if v is None:
            raise ClassViolationError(
                "an induced subgraph has no bisimplicial vertex",
                witness={"vertices": sorted(left)})
        k1, k2 = _split_neighborhood(residual, v, frozenset(residual.vertices))
        for side in (k1, k2):
            cand = {v} | side
            weight = sum((g.weight(u) for u in cand), Fraction(0))
            if best is None or weight > best_weight:
                best = frozenset(cand)
                best_weight = weight
        order.append(v)
        left.discard(v)
        residual = residual.without([v])
    if best is None:
        best = frozenset()
    return CliqueCertificate(best, best_weight, tuple(order))


def clique_color_3(g):
    """A coloring with colors in {1, 2, 3} making every maximal clique
    of size at least 2 bichromatic.

    Eliminates bisimplicial vertices, then colors in reverse: when v was
    eliminated with neighborhood cliques K1, K2 in the residual, every
    maximal clique in which v comes first is exactly {v} + K1 or {v} + K2,
    so a color different from one vertex of each part suffices.
    """
    stages = []
    residual = g
    left = set(g.vertices)
    while residual.n:
        v = find_bisimplicial(residual)
        if v is None:
            raise ClassViolationError(
                "an induced subgraph has no bisimplicial vertex",
                witness={"vertices": sorted(left)})
        k1, k2 = _split_neighborhood(residual, v, frozenset(residual.vertices))
        stages.append((v, k1, k2))
        left.discard(v)
        residual = residual.without([v])
    colors = {}
    for v, k1, k2 in reversed(stages):
        forbidden = {colors[min(side)] for side in (k1, k2) if side}
        colors[v] = min({1, 2, 3} - forbidden)
    return colors
