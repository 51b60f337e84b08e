"""The diagram catalog and the positive-vector criterion.

A connected graph's Cartan matrix 2I - A is positive definite exactly when
some positive vector x has Cx > 0 (Dynkin), positive semidefinite and
singular exactly when some positive x has Cx = 0 (extended Dynkin), and
indefinite otherwise.  The Perron vector of A is such a witness.
"""

import numpy as np

from quatmckay import canonical_null_vector, catalog, classify, definiteness
from quatmckay.diagram import cartan, catalog_graph, perron_vector

for t in catalog(9):
    if t.is_extended:
        a = catalog_graph(t)
        x = canonical_null_vector(t)
        assert not np.any(cartan(a) @ x)
        print(f"{str(t):<9} null vector {x.tolist()}  Perron eigenvalue {perron_vector(a).eigenvalue:.6f}")

rng = np.random.default_rng(1)
a = np.triu(rng.integers(0, 2, (6, 6)), 1)
a = a + a.T
a[np.arange(5), np.arange(1, 6)] = a[np.arange(1, 6), np.arange(5)] = 1
print("\nrandom connected graph:", classify(a), definiteness(cartan(a)).value)
