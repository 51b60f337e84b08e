"""The McKay correspondence.

Tensoring with the natural 2-dimensional representation W defines a graph on
the irreducibles.  For each finite subgroup of SU(2) this graph is an
extended Dynkin diagram, removing the trivial representation leaves the
ordinary Dynkin diagram, and the dimensions are the null vector of the
Cartan matrix.  The group order is the sum of their squares.
"""

from quatmckay import analyze, build_group, classify, order_from_diagram, reduced

print(f"{'group':>5} {'order':>5}  {'McKay graph':<10} {'reduced':<7} dims")
for spec in ["C2", "C5", "D1", "D2", "D4", "2T", "2O", "2I"]:
    g = build_group(spec)
    graph = analyze(g).graph
    full = classify(graph.adjacency())
    red = classify(reduced(graph).adjacency()) if len(graph) > 1 else "-"
    dims = sorted(graph.dims.tolist())
    print(f"{spec:>5} {g.order:5d}  {str(full):<10} {str(red):<7} {dims}")
    assert order_from_diagram(graph.adjacency(), 2) == g.order

# The graph of the binary dihedral group of order 4 is a 4-cycle: D~3 and A~3
# are the same diagram.
