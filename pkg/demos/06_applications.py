"""Consequences for finite subgroups of SO(4).

The labelled-diagram structure limits the irreducible dimensions of a
finite subgroup of SU(2) x SU(2): they are products of one label from each
colour, so at most 6 * 6 = 36, with prime factors 2, 3 and 5 only, and an
odd dimension above 1 forces a 3.  The last rule shows that S5, with
dimensions (1,1,4,4,5,5,6), cannot act faithfully on R^4 through SO(4).
"""

from quatmckay import analyze, build_group, check_dimension_multiset, verify_applications

for spec in ["prod(2I,2I)", "prod(2T,2T)", "prod(2O,2I)", "diag(C4)"]:
    g = build_group(spec)
    an = analyze(g)
    rep = verify_applications(g, an)
    print(f"{spec}: max dimension {max(an.table.degrees)}, rules {'hold' if rep.passed else 'FAIL'}")

rep = check_dimension_multiset([1, 1, 4, 4, 5, 5, 6])
print("S5 dimension multiset:", "allowed" if rep.passed else f"rejected ({rep.first_failure})")
