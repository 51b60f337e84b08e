"""Splitting the McKay graph by the central element -1.

When -1 is in G it acts on each irreducible as +1 or -1.  W is odd, so
tensoring with W flips the sign and every edge joins the two classes.  The
even irreducibles are the representations of the rotation group G/{+-1},
which is why each side has total squared dimension |G|/2.
"""

from quatmckay import analyze, build_group, parity_bipartition

for spec in ["2I", "2O", "D3", "C6"]:
    graph = analyze(build_group(spec)).graph
    plus, minus = parity_bipartition(graph)
    even = sorted(int(graph.dims[i]) for i in plus)
    odd = sorted(int(graph.dims[i]) for i in minus)
    print(f"{spec}: even {even} (sum sq {sum(d * d for d in even)}), odd {odd} (sum sq {sum(d * d for d in odd)})")
