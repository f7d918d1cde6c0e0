"""Brute-force rainbow S-tree oracle for arbitrary small edge-colored graphs.

Knows nothing about K_{2,t}: it tries every edge subset, smallest first, and
keeps the first one that is rainbow, acyclic, connected and covers S.
"""

from itertools import combinations

from networkx.utils import UnionFind

from rainbow_index.core import GenericColoredGraph, RainbowTreeWitness

GENERIC_EDGE_LIMIT = 20


class GraphSizeError(ValueError):
    """Raised when a graph is too large for subset enumeration."""


def _is_tree_over(edges, size: int, targets) -> bool:
    vertices = {v for a, b, _ in edges for v in (a, b)}
    if len(vertices) != size + 1 or not targets <= vertices:
        return False
    # size edges on size+1 vertices: a tree iff acyclic
    components = UnionFind()
    for a, b, _ in edges:
        if components[a] == components[b]:
            return False
        components.union(a, b)
    return True


def generic_has_rainbow_tree(
    graph: GenericColoredGraph, targets, edge_limit: int = GENERIC_EDGE_LIMIT
) -> RainbowTreeWitness | None:
    """Smallest rainbow tree of `graph` whose vertex set contains `targets`, or None.

    Args:
        graph (GenericColoredGraph): Graph to search.
        targets: At least two vertex ids.
        edge_limit (int): Refuse graphs with more edges than this.

    Raises:
        GraphSizeError: If the graph has more than `edge_limit` edges.
    """
    targets = frozenset(targets)
    if len(targets) < 2:
        raise ValueError("The target set needs at least two vertices")
    if not all(0 <= v < graph.n for v in targets):
        raise ValueError(f"Target set {sorted(targets)} is not inside 0..{graph.n - 1}")
    if len(graph.edges) > edge_limit:
        raise GraphSizeError(f"{len(graph.edges)} edges exceed the oracle limit of {edge_limit}")

    max_size = min(graph.n - 1, len({color for _, _, color in graph.edges}))
    for size in range(1, max_size + 1):
        for subset in combinations(graph.edges, size):
            if len({color for _, _, color in subset}) != size:
                continue
            if _is_tree_over(subset, size, targets):
                return RainbowTreeWitness(subset)
    return None
