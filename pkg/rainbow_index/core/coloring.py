"""Domain types for edge colorings of the complete bipartite graph K_{2,t}.

A coloring of K_{2,t} is fully described by one color code per W-vertex: the
ordered pair (c(u1 w), c(u2 w)). Vertices are numbered internally as

    w_1 .. w_t  ->  0 .. t-1
    u_1, u_2    ->  t, t+1

so that lexicographic order on vertex ids puts W-only triples first. The labels
"w1".."wt", "u1", "u2" are used for all input and output.
"""

import json
import numbers
from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, NamedTuple


class ColoringError(ValueError):
    """Raised for any malformed coloring, vertex label or coloring document."""


class ColorCode(NamedTuple):
    """Colors of the edges (u1 w, u2 w) for a single W-vertex w."""

    a1: int
    a2: int


def _as_code(code) -> ColorCode:
    try:
        a1, a2 = code
    except (TypeError, ValueError):
        raise ColoringError(f"A color code must be a pair of colors, got {code!r}")
    if not all(isinstance(a, numbers.Integral) and not isinstance(a, bool) for a in (a1, a2)):
        raise ColoringError(f"Colors must be integers, got {code!r}")
    return ColorCode(int(a1), int(a2))


@dataclass(frozen=True)
class BipartiteColoring:
    """An edge coloring of K_{2,t} with a declared palette 1..k.

    codes[i] is the color code of w_{i+1}.
    """

    t: int
    k: int
    codes: tuple[ColorCode, ...]

    def __post_init__(self):
        if self.t < 1:
            raise ColoringError(f"t must be at least 1, got {self.t}")
        if self.k < 1:
            raise ColoringError(f"k must be at least 1, got {self.k}")
        codes = tuple(_as_code(code) for code in self.codes)
        if len(codes) != self.t:
            raise ColoringError(f"Expected {self.t} color codes, got {len(codes)}")
        for i, code in enumerate(codes):
            if not (1 <= code.a1 <= self.k and 1 <= code.a2 <= self.k):
                raise ColoringError(f"Code {tuple(code)} of w{i + 1} uses a color outside 1..{self.k}")
        object.__setattr__(self, "codes", codes)

    def to_document(self) -> dict:
        return {"t": self.t, "k": self.k, "codes": [list(code) for code in self.codes]}


def make_coloring(t: int, k: int, codes: Iterable) -> BipartiteColoring:
    """Build a validated coloring of K_{2,t} from `t` color codes over 1..k.

    Args:
        t (int): Number of W-vertices.
        k (int): Declared palette size.
        codes: Sequence of pairs (a1, a2); the i-th pair belongs to w_{i+1}.

    Raises:
        ColoringError: If the number of codes differs from t or a color lies outside 1..k.
    """
    return BipartiteColoring(t=t, k=k, codes=tuple(codes))


def colors_used(coloring: BipartiteColoring) -> frozenset[int]:
    """The distinct colors appearing on at least one edge."""
    return frozenset(chain.from_iterable(coloring.codes))


def coloring_to_json(coloring: BipartiteColoring) -> str:
    return json.dumps(coloring.to_document())


def coloring_from_document(document) -> BipartiteColoring:
    if not isinstance(document, dict) or not {"t", "k", "codes"} <= document.keys():
        raise ColoringError('A coloring document needs the keys "t", "k" and "codes"')
    t, k, codes = document["t"], document["k"], document["codes"]
    if not all(isinstance(n, int) and not isinstance(n, bool) for n in (t, k)) or not isinstance(codes, list):
        raise ColoringError("Malformed coloring document")
    return make_coloring(t, k, codes)


def coloring_from_json(text: str) -> BipartiteColoring:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ColoringError(f"Coloring document is not valid JSON: {e}")
    return coloring_from_document(document)


def vertex_label(v: int, t: int) -> str:
    if 0 <= v < t:
        return f"w{v + 1}"
    if v in (t, t + 1):
        return f"u{v - t + 1}"
    raise ColoringError(f"Vertex id {v} out of range for K_2,{t}")


def parse_vertex(label: str, t: int) -> int:
    """Inverse of `vertex_label`."""
    label = str(label).strip().lower()
    try:
        index = int(label[1:])
    except ValueError:
        raise ColoringError(f"Unknown vertex label {label!r}")
    if label.startswith("w") and 1 <= index <= t:
        return index - 1
    if label.startswith("u") and index in (1, 2):
        return t + index - 1
    raise ColoringError(f"Vertex {label!r} is not a vertex of K_2,{t}")


@dataclass(frozen=True)
class VertexTriple:
    """Three distinct vertices of K_{2,t}, kept sorted by vertex id."""

    t: int
    members: tuple[int, int, int]
    kind: int = field(init=False)

    def __post_init__(self):
        members = tuple(sorted(self.members))
        if len(members) != 3 or len(set(members)) != 3:
            raise ColoringError(f"A triple needs three distinct vertices, got {self.members}")
        if members[0] < 0 or members[-1] > self.t + 1:
            raise ColoringError(f"Triple {self.members} is not contained in K_2,{self.t}")
        object.__setattr__(self, "members", members)
        # |S ∩ W|
        object.__setattr__(self, "kind", sum(1 for v in members if v < self.t))

    @classmethod
    def from_labels(cls, labels: Iterable[str], t: int) -> "VertexTriple":
        return cls(t, tuple(parse_vertex(label, t) for label in labels))

    def labels(self) -> list[str]:
        return [vertex_label(v, self.t) for v in self.members]


@dataclass(frozen=True)
class RainbowTreeWitness:
    """A tree of K_{2,t} given by its edges (w, u, color), w a W-vertex id and u in {t, t+1}."""

    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(edge) for edge in self.edges)))

    def __len__(self):
        return len(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(chain.from_iterable((w, u) for w, u, _ in self.edges))

    def colors(self) -> list[int]:
        return [color for _, _, color in self.edges]

    def to_labels(self, t: int) -> list[tuple[str, str, int]]:
        return [(vertex_label(w, t), vertex_label(u, t), color) for w, u, color in self.edges]


@dataclass(frozen=True)
class GenericColoredGraph:
    """A small simple graph on vertices 0..n-1 with one positive color per edge."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        edges = tuple(tuple(edge) for edge in self.edges)
        seen = set()
        for a, b, color in edges:
            if a == b:
                raise ColoringError(f"Loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ColoringError(f"Edge ({a}, {b}) leaves the vertex range 0..{self.n - 1}")
            if color < 1:
                raise ColoringError(f"Edge colors must be positive, got {color}")
            key = frozenset((a, b))
            if key in seen:
                raise ColoringError(f"Multi-edge between {a} and {b}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_coloring(cls, coloring: BipartiteColoring) -> "GenericColoredGraph":
        """K_{2,t} with the same vertex ids as the coloring, edges oriented (w, u, color)."""
        t = coloring.t
        edges = [(w, t + side, code[side]) for w, code in enumerate(coloring.codes) for side in (0, 1)]
        return cls(t + 2, tuple(edges))
