"""Finite subgroups of SU(2) x SU(2) and their two-coloured McKay graphs.

SU(2) x SU(2) double covers SO(4), and the natural representation there
splits as W1 + W2.  Colouring each edge by the summand it comes from gives
two graphs on the same vertices.  Each colour is a disjoint union of
extended Dynkin diagrams, every colour-1 component meets every colour-2
component, and the dimensions on each component are a multiple of its null
vector.  Products give a grid of two diagrams; diagonals give one diagram
with every edge doubled.
"""

import io

from quatmckay import analyze, build_group, detect_doubled, detect_product, emit_dot, verify_so4
from quatmckay.diagram import classify_components

for spec in ["prod(2T,C4)", "diag(2O)", "gens:goursat_c8_twist.json", "gens:goursat_2i_a5.json"]:
    g = build_group(spec)
    an = analyze(g)
    rep = verify_so4(g, an)
    gr = an.graph
    c1 = [str(t) for _, t in classify_components(gr.adjacency(1))]
    c2 = [str(t) for _, t in classify_components(gr.adjacency(2))]
    prod = detect_product(gr)
    print(f"{spec}: order {g.order}, {len(gr)} irreducibles, suite {'pass' if rep.passed else 'FAIL'}")
    print(f"  colour 1: {c1}")
    print(f"  colour 2: {c2}")
    print(f"  product: {None if prod is None else (str(prod.first), str(prod.second))}, doubled: {detect_doubled(gr)}")

buf = io.StringIO()
emit_dot(analyze(build_group("diag(2T)")).graph, buf)
print("\nDOT for diag(2T): every pair is joined by a red and a blue edge")
print(buf.getvalue())
