"""Exact rainbow S-tree search in an edge-colored K_{2,t} for |S| = 3.

A minimal S-tree in K_{2,t} never contains a W-vertex outside S of degree 1
(it could be pruned), so every W-vertex outside S has degree 2. Two such
vertices would close the 4-cycle u1-w'-u2-w'', hence at most one appears.
Likewise at most one W-vertex has degree 2 at all. This leaves three shape
families, tried in order of edge count:

    hub      every S-member in W hangs off a single u_s            |S∩W| edges
    bridge   an S-member j in W joins u1 and u2, the rest hang     |S∩W| + 1 edges
             off either side
    extra    a vertex w' outside S joins u1 and u2, every          |S∩W| + 2 edges
             S-member in W hangs off either side

Inside a family sub-shapes are tried in a fixed order and the first rainbow one
wins, so the returned witness has minimum edge count and is deterministic.
"""

from collections import defaultdict
from itertools import product

import networkx as nx

from rainbow_index.core import BipartiteColoring, ColoringError, RainbowTreeWitness, VertexTriple


class WitnessError(RuntimeError):
    """Raised when a witness produced by the shape search fails independent validation."""


def pair_index(codes) -> dict[tuple[int, int], tuple[int, ...]]:
    """Map each unordered pair of distinct colors to the W-vertices whose code carries it."""
    index = defaultdict(list)
    for w, (a1, a2) in enumerate(codes):
        if a1 != a2:
            index[(min(a1, a2), max(a1, a2))].append(w)
    return {pair: tuple(ws) for pair, ws in index.items()}


def _first_extra(pairs, used, members):
    best = None
    for (a, b), ws in pairs.items():
        if a in used or b in used:
            continue
        for w in ws:
            if w not in members:
                if best is None or w < best:
                    best = w
                break
    return best


def find_tree(codes, t: int, members, pairs) -> tuple[tuple[int, int, int], ...] | None:
    """Edges (w, u, color) of the minimum rainbow tree containing `members`, or None.

    Args:
        codes: Color codes of w_1..w_t.
        t (int): Number of W-vertices.
        members: Three distinct vertex ids.
        pairs: `pair_index(codes)`.
    """
    w_members = [v for v in members if v < t]
    u_sides = {v - t for v in members if v >= t}

    for s in (0, 1):
        if u_sides <= {s}:
            colors = [codes[w][s] for w in w_members]
            if len(set(colors)) == len(colors):
                return tuple((w, t + s, codes[w][s]) for w in w_members)

    for j in w_members:
        others = [w for w in w_members if w != j]
        for sides in product((0, 1), repeat=len(others)):
            colors = [codes[j][0], codes[j][1]] + [codes[w][s] for w, s in zip(others, sides)]
            if len(set(colors)) == len(colors):
                hanging = tuple((w, t + s, codes[w][s]) for w, s in zip(others, sides))
                return ((j, t, codes[j][0]), (j, t + 1, codes[j][1])) + hanging

    member_set = set(members)
    for sides in product((0, 1), repeat=len(w_members)):
        used = [codes[w][s] for w, s in zip(w_members, sides)]
        if len(set(used)) != len(used):
            continue
        extra = _first_extra(pairs, set(used), member_set)
        if extra is not None:
            hanging = tuple((w, t + s, codes[w][s]) for w, s in zip(w_members, sides))
            return ((extra, t, codes[extra][0]), (extra, t + 1, codes[extra][1])) + hanging
    return None


def fast_check(codes, t: int, k: int, members) -> bool | None:
    """Sufficient conditions for a rainbow tree read off the codes alone; None when undecided."""
    w_members = [v for v in members if v < t]
    if len(w_members) == 3:
        x, y, z = (codes[w] for w in w_members)
        for s in (0, 1):
            if x[s] != y[s] and x[s] != z[s] and y[s] != z[s]:
                return True
        if k >= 4 and len({*x, *y, *z}) >= 4:
            return True
        return None
    if len(w_members) == 2:
        x, y = codes[w_members[0]], codes[w_members[1]]
        # both coordinates differ, or at least three colors between the two codes
        if (x[0] != y[0] and x[1] != y[1]) or len({*x, *y}) >= 3:
            return True
        return None
    a1, a2 = codes[w_members[0]]
    return True if a1 != a2 else None


def _check_triple(coloring: BipartiteColoring, triple: VertexTriple):
    if triple.t != coloring.t:
        raise ColoringError(f"Triple drawn from K_2,{triple.t} used with a coloring of K_2,{coloring.t}")


def validate_witness(coloring: BipartiteColoring, triple: VertexTriple, witness: RainbowTreeWitness) -> None:
    """Check a witness against the definition of a rainbow S-tree, independently of the shape search.

    Raises:
        WitnessError: If any property of a rainbow S-tree in K_{2,t} is violated.
    """
    t = coloring.t
    graph = nx.Graph()
    for w, u, color in witness.edges:
        if not (0 <= w < t and u in (t, t + 1)):
            raise WitnessError(f"Edge ({w}, {u}) is not an edge of K_2,{t}")
        if coloring.codes[w][u - t] != color:
            raise WitnessError(f"Edge ({w}, {u}) carries color {coloring.codes[w][u - t]}, not {color}")
        graph.add_edge(w, u)
    if not nx.is_tree(graph):
        raise WitnessError(f"Edges {witness.edges} do not form a tree")
    if len(set(witness.colors())) != len(witness):
        raise WitnessError(f"Tree {witness.edges} repeats a color")
    if not set(triple.members) <= set(graph.nodes):
        raise WitnessError(f"Tree {witness.edges} misses part of {triple.members}")
    extras = [v for v in graph.nodes if v < t and v not in triple.members]
    if len(extras) > 1 or any(graph.degree(v) != 2 for v in extras):
        raise WitnessError(f"Tree {witness.edges} has a superfluous W-vertex")


def has_rainbow_tree(coloring: BipartiteColoring, triple: VertexTriple) -> RainbowTreeWitness | None:
    """Minimum-edge rainbow tree of K_{2,t} containing the triple, or None if there is none.

    The decision is exact: the hub, bridge and extra shape families cover every
    minimal tree of K_{2,t} spanning three vertices.
    """
    _check_triple(coloring, triple)
    edges = find_tree(coloring.codes, coloring.t, triple.members, pair_index(coloring.codes))
    if edges is None:
        return None
    witness = RainbowTreeWitness(edges)
    validate_witness(coloring, triple, witness)
    return witness


def fast_tree_check(coloring: BipartiteColoring, triple: VertexTriple) -> bool | None:
    """Return True when a sufficient condition for a rainbow S-tree fires, None ("unknown") otherwise.

    Conditions by |S∩W|:
        3: the codes take three distinct values in one coordinate, or (for k >= 4) use at least four colors.
        2: the two codes differ in both coordinates, or use at least three colors.
        1: the code has two distinct entries.
    """
    _check_triple(coloring, triple)
    return fast_check(coloring.codes, coloring.t, coloring.k, triple.members)
