import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatmckay import groups as G
from quatmckay import quat


def brute_closure(gens, limit=2000):
    """Naive closure oracle: multiply everything by everything until stable."""
    elems = [quat.embed((1.0, 0.0, 0.0, 0.0))] + [np.asarray(g, dtype=float) for g in gens]
    while True:
        new = list(elems)
        for a in elems:
            for b in elems:
                c = quat.pair_mul(a, b)
                if not any(np.abs(c - e).max() < 1e-6 for e in new):
                    new.append(c)
        if len(new) == len(elems):
            return np.array(elems)
        elems = new
        assert len(elems) < limit


def same_set(a, b):
    if len(a) != len(b):
        return False
    return all(np.abs(b - x).max(axis=1).min() < 1e-6 for x in a)


@pytest.mark.parametrize("n", [1, 2, 4, 7])
def test_cyclic(n):
    g = G.cyclic(n)
    assert g.order == n
    assert g.ambient == G.SU2
    assert (G.central_minus_one(g) is not None) == (n % 2 == 0)
    if n == 4:
        assert same_set(g.elements[:, :4], np.array([[1, 0, 0, 0], [-1, 0, 0, 0], [0, 1, 0, 0], [0, -1, 0, 0]]))


@pytest.mark.parametrize("n, order", [(1, 4), (2, 8), (3, 12), (5, 20)])
def test_binary_dihedral_against_oracle(n, order):
    g = G.binary_dihedral(n)
    assert g.order == order
    assert same_set(g.elements, brute_closure(g.generators))


def test_quaternion_group():
    g = G.binary_dihedral(2)
    units = np.vstack([np.eye(4), -np.eye(4)])
    assert same_set(g.elements[:, :4], units)


@pytest.mark.parametrize("build, order, classes", [
    (G.binary_tetrahedral, 24, 7),
    (G.binary_octahedral, 48, 8),
    (G.binary_icosahedral, 120, 9),
])
def test_polyhedral(build, order, classes):
    g = build()
    assert g.order == order
    assert same_set(g.elements, brute_closure(g.generators))
    assert len(G.conjugacy_classes(g)) == classes
    assert g.minus_one_index is not None


def test_products_and_diagonals():
    c2 = G.cyclic(2)
    assert G.product(c2, c2).order == 4
    assert G.product(G.binary_tetrahedral(), G.binary_icosahedral()).order == 2880
    d = G.diagonal(c2)
    assert same_set(d.elements, np.array([[1, 0, 0, 0, 1, 0, 0, 0], [-1, 0, 0, 0, -1, 0, 0, 0]]))
    assert G.diagonal(G.binary_tetrahedral()).order == 24
    assert G.diagonal(G.binary_icosahedral()).order == 120
    assert G.central_minus_one(G.diagonal(G.binary_tetrahedral())) is not None
    assert G.central_minus_one(G.product(c2, G.cyclic(4))) is not None
    assert G.central_minus_one(G.cyclic(3)) is None


def test_product_of_icosahedral():
    g = G.product(G.binary_icosahedral(), G.binary_icosahedral())
    assert g.order == 14400
    assert len(G.conjugacy_classes(g)) == 81


def test_from_generators_examples():
    assert G.from_generators([]).order == 1
    g = G.from_generators([quat.embed((0, 1, 0, 0))])
    assert g.order == 4 and g.ambient == G.SU2
    w = quat.from_angle(np.pi / 3)
    d = G.from_generators([np.concatenate([w, w])])
    assert d.order == 6 and d.ambient == G.SU2xSU2
    assert same_set(d.elements, brute_closure(d.generators))


def test_from_generators_errors():
    with pytest.raises(G.GroupError):
        G.from_generators([[1, 1, 0, 0, 1, 0, 0, 0]])
    with pytest.raises(G.GroupError):
        G.from_generators([quat.embed(quat.from_angle(1.0))], cap=500)  # irrational angle never closes
    with pytest.raises(G.GroupError):
        G.from_generators([], cap=G.ORDER_CAP + 1)


@pytest.mark.parametrize("bad", [0, G.MAX_CYCLIC + 1])
def test_cyclic_range(bad):
    with pytest.raises(G.GroupError):
        G.cyclic(bad)


def test_product_rejects_pairs():
    c2 = G.cyclic(2)
    with pytest.raises(G.GroupError):
        G.product(G.diagonal(c2), c2)
    with pytest.raises(G.GroupError):
        G.diagonal(G.diagonal(c2))
    with pytest.raises(G.GroupError):
        G.product(G.binary_dihedral(200), G.binary_icosahedral())


def test_separation_check():
    e = np.array([quat.embed((1, 0, 0, 0)), quat.embed(quat.normalize((1, 1e-4, 0, 0)))])
    with pytest.raises(G.GroupError):
        G.check_separation(e)


def test_lookup_and_tables():
    g = G.binary_octahedral()
    assert g.identity_index == 0
    idx = g.lookup(g.elements + 1e-9)
    assert np.array_equal(idx, np.arange(g.order))
    assert int(g.lookup(quat.embed(quat.from_angle(0.123)))) == -1
    assert int(g.lookup(g.elements[3])) == 3
    inv = g.inverse()
    assert np.all(g.mul(np.arange(g.order), inv) == g.identity_index)
    with pytest.raises(ValueError):
        g.elements[0, 0] = 2.0


def test_conjugacy_partition_invariants():
    g = G.binary_icosahedral()
    part = G.conjugacy_classes(g)
    assert part.sizes.sum() == g.order
    assert list(part.classes[0]) == [g.identity_index]
    assert sorted(part.sizes.tolist()) == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    # brute force: x and y x y^-1 share a class
    inv = g.inverse()
    for y in range(0, g.order, 7):
        conj = g.mul(g.mul(np.full(g.order, y), np.arange(g.order)), np.full(g.order, inv[y]))
        assert np.array_equal(part.class_of[conj], part.class_of)


@pytest.mark.parametrize("n", [3, 8, 24])
def test_cyclic_classes_singletons(n):
    assert len(G.conjugacy_classes(G.cyclic(n))) == n


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 40), st.integers(1, 12))
def test_cyclic_and_dihedral_closed(n, m):
    for g in (G.cyclic(n), G.binary_dihedral(m)):
        G.check_closure(g)
        assert np.all(np.abs(np.sum(g.elements[:, :4] ** 2, axis=1) - 1) < 1e-9)
        assert np.allclose(g.elements[:, 4:], [1, 0, 0, 0])


def test_dihedral_class_count():
    for n in range(1, 13):
        assert len(G.conjugacy_classes(G.binary_dihedral(n))) == n + 3
