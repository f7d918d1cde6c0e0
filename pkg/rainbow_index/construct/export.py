import pydot

from rainbow_index.core import BipartiteColoring, RainbowTreeWitness, vertex_label

DOT_PALETTE = "paired12"
DOT_PALETTE_CYCLE = 12


def palette_color(color: int) -> str:
    """Index into the Graphviz color scheme, cycling after DOT_PALETTE_CYCLE colors."""
    return str((color - 1) % DOT_PALETTE_CYCLE + 1)


def coloring_to_dot(coloring: BipartiteColoring, witness: RainbowTreeWitness | None = None) -> str:
    """Render the colored K_{2,t} as a DOT graph.

    Every edge carries its color id as label. Edges of `witness`, if given, are drawn bold.
    """
    t = coloring.t
    graph = pydot.Dot(f"K_2_{t}", graph_type="graph", rankdir="LR")
    for v in range(t, t + 2):
        graph.add_node(pydot.Node(vertex_label(v, t), shape="box"))
    for w in range(t):
        graph.add_node(pydot.Node(vertex_label(w, t), shape="circle"))

    highlighted = set() if witness is None else {(w, u) for w, u, _ in witness.edges}
    for w, code in enumerate(coloring.codes):
        for side, color in enumerate(code):
            u = t + side
            graph.add_edge(
                pydot.Edge(
                    vertex_label(u, t),
                    vertex_label(w, t),
                    colorscheme=DOT_PALETTE,
                    color=palette_color(color),
                    label=str(color),
                    penwidth=3 if (w, u) in highlighted else 1,
                )
            )
    return graph.to_string()
