from .coloring import (
    BipartiteColoring,
    ColorCode,
    ColoringError,
    GenericColoredGraph,
    RainbowTreeWitness,
    VertexTriple,
    coloring_from_document,
    coloring_from_json,
    coloring_to_json,
    colors_used,
    make_coloring,
    parse_vertex,
    vertex_label,
)
