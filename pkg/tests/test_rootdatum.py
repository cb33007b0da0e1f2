import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realgrass.errors import BoundExceeded, NonFiniteType, NotFiniteType
from realgrass.lattice import IntMatrix, dot
from realgrass.rootdatum import (
    BasedRootDatum,
    CartanType,
    adjoint_datum,
    classify,
    datum_from_type,
    direct_sum,
    dominance_leq,
    dominant_representative,
    dual,
    dynkin_labels,
    enumerate_dominant,
    generate_roots,
    is_dominant,
    levi_subdatum,
    longest_weyl_element,
    simply_connected_datum,
    standard_cartan_matrix,
    torus_datum,
    two_rho_coroots,
    two_rho_roots,
    weyl_elements,
    weyl_group_order,
    weyl_orbit,
    weyl_orbit_size,
)

ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 7),
    ("B", 2), ("B", 3), ("B", 8),
    ("C", 3), ("C", 8),
    ("D", 4), ("D", 8),
    ("E", 6), ("E", 7), ("E", 8),
    ("F", 4), ("G", 2),
]


def test_generate_roots_a1():
    rs = generate_roots(adjoint_datum("A", 1))
    assert rs.roots == ((1,),)


def test_generate_roots_a2():
    rs = generate_roots(adjoint_datum("A", 2))
    assert set(rs.coords) == {(1, 0), (0, 1), (1, 1)}


def test_generate_roots_g2():
    rs = generate_roots(adjoint_datum("G", 2))
    assert rs.count == 6


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_positive_root_counts(family, rank):
    datum = adjoint_datum(family, rank)
    assert generate_roots(datum).count == datum.cartan_type().positive_root_count()


def test_classify_rank_one():
    assert classify(IntMatrix.from_rows([[2]])).label() == "A1"


def test_classify_so5_both_orders():
    b2 = standard_cartan_matrix("B", 2)
    assert classify(b2).label() == "B2"
    flipped = IntMatrix.from_rows(
        [[b2.entries[1][1], b2.entries[1][0]], [b2.entries[0][1], b2.entries[0][0]]]
    )
    assert classify(flipped).label() == "B2"


def test_classify_direct_sum():
    d = direct_sum(adjoint_datum("A", 2), adjoint_datum("A", 2))
    assert d.cartan_type().label() == "A2+A2"


def test_classify_rejects_affine():
    with pytest.raises(NotFiniteType):
        classify(IntMatrix.from_rows([[2, -2], [-2, 2]]))
    # affine D4: five nodes, one of degree 4
    rows = [[2, 0, 0, 0, -1], [0, 2, 0, 0, -1], [0, 0, 2, 0, -1], [0, 0, 0, 2, -1], [-1, -1, -1, -1, 2]]
    with pytest.raises(NotFiniteType):
        classify(IntMatrix.from_rows(rows))


def test_classify_b_vs_c_by_arrow_direction():
    assert classify(standard_cartan_matrix("B", 3)).label() == "B3"
    assert classify(standard_cartan_matrix("C", 3)).label() == "C3"
    assert classify(standard_cartan_matrix("B", 3).transpose()).label() == "C3"


def test_dual_examples():
    # adjoint A1 (coweights Z with coroot 2) dualizes to the index-2 case
    pgl2 = adjoint_datum("A", 1)
    sl2 = simply_connected_datum("A", 1)
    assert dual(pgl2) == sl2
    assert dual(dual(pgl2)) == pgl2
    assert dual(adjoint_datum("B", 2)).cartan_type().label() == "B2"
    assert dual(adjoint_datum("B", 3)).cartan_type().label() == "C3"
    t = torus_datum(3)
    assert dual(t) == t


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_dual_involutive_and_type(family, rank):
    datum = adjoint_datum(family, rank)
    assert dual(dual(datum)) == datum
    expected = {"B": "C", "C": "B"}.get(family, family) if rank > 2 else family
    assert dual(datum).cartan_type().label() == f"{expected}{rank}"


def test_dominance_reflexive():
    lam = (2, 1)
    assert dominance_leq(adjoint_datum("A", 2), lam, lam)


def test_dominance_a2():
    a2 = adjoint_datum("A", 2)
    alpha_sum = tuple(
        a + b for a, b in zip(a2.simple_coroots[0], a2.simple_coroots[1])
    )
    assert dominance_leq(a2, (0, 0), alpha_sum)


def test_dominance_pgl2_parity():
    pgl2 = adjoint_datum("A", 1)
    assert not dominance_leq(pgl2, (0,), (1,))
    assert dominance_leq(pgl2, (0,), (2,))


def test_dominance_partial_order():
    a2 = adjoint_datum("A", 2)
    pts = enumerate_dominant(a2, 4)
    for x, y in itertools.product(pts, repeat=2):
        if dominance_leq(a2, x, y) and dominance_leq(a2, y, x):
            assert x == y
    for x, y, z in itertools.product(pts[:8], repeat=3):
        if dominance_leq(a2, x, y) and dominance_leq(a2, y, z):
            assert dominance_leq(a2, x, z)


def test_dominance_brute_force_cross_check():
    # independent oracle: bounded search over nonnegative combinations of
    # the positive coroots
    for fam, rank in [("A", 2), ("B", 2), ("A", 1)]:
        datum = adjoint_datum(fam, rank)
        pos = generate_roots(dual(datum)).roots
        pts = enumerate_dominant(datum, 4)
        for x, y in itertools.product(pts[:10], repeat=2):
            diff = tuple(a - b for a, b in zip(y, x))
            found = brute_force_in_positive_cone(diff, pos, bound=8)
            assert dominance_leq(datum, x, y) == found, (fam, x, y)


def brute_force_in_positive_cone(diff, positive, bound):
    """Exhaustive search for diff as an N-combination of positive roots."""
    if all(x == 0 for x in diff):
        return True
    if bound == 0:
        return False
    for beta in positive:
        rest = tuple(a - b for a, b in zip(diff, beta))
        if brute_force_in_positive_cone(rest, positive, bound - 1):
            return True
    return False


def test_levi_subdatum():
    a3 = adjoint_datum("A", 3)
    assert levi_subdatum(a3, range(3)) == a3
    assert levi_subdatum(a3, []).semisimple_rank == 0
    assert levi_subdatum(a3, [0, 2]).cartan_type().components == (("A", 1), ("A", 1))


def test_longest_weyl_element_a1():
    pgl2 = adjoint_datum("A", 1)
    w0 = longest_weyl_element(pgl2)
    assert w0.entries == ((-1,),)
    # with a torus factor the complement stays fixed
    d = direct_sum(pgl2, torus_datum(1))
    w0 = longest_weyl_element(d)
    assert w0.entries == ((-1, 0), (0, 1))


def test_longest_weyl_element_a2_is_minus_flip():
    a2 = adjoint_datum("A", 2)
    w0 = longest_weyl_element(a2)
    assert w0.entries == ((0, -1), (-1, 0))


def test_longest_weyl_element_torus():
    assert longest_weyl_element(torus_datum(2)).is_identity()


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4), ("G", 2)])
def test_longest_weyl_element_properties(family, rank):
    datum = adjoint_datum(family, rank)
    w0 = longest_weyl_element(datum)
    assert (w0 @ w0).is_identity()
    v = two_rho_coroots(datum)
    image = w0.apply(v)
    assert all(dot(r, image) <= 0 for r in datum.simple_roots)
    # w0 sends the simple coroots to negatives of simple coroots
    neg = {tuple(-x for x in c) for c in datum.simple_coroots}
    assert {w0.apply(c) for c in datum.simple_coroots} == neg


def test_weyl_group_order_examples():
    assert weyl_group_order(adjoint_datum("A", 1)) == 2
    assert weyl_group_order(adjoint_datum("A", 2)) == 6
    assert weyl_group_order(adjoint_datum("B", 2)) == 8


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_weyl_enumeration_matches_formula(family, rank):
    datum = adjoint_datum(family, rank)
    assert len(weyl_elements(datum)) == weyl_group_order(datum)


def test_weyl_enumeration_bound():
    with pytest.raises(BoundExceeded):
        weyl_elements(adjoint_datum("A", 7), max_order=100)


def test_two_rho():
    pgl2 = adjoint_datum("A", 1)
    assert two_rho_roots(pgl2) == (1,)  # the single positive root
    a2 = adjoint_datum("A", 2)
    assert two_rho_roots(a2) == (2, 2)  # sum of three positive roots
    assert two_rho_coroots(a2) == (2, 2)
    assert two_rho_roots(torus_datum(2)) == (0, 0)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_two_rho_pairs_two_with_simples(family, rank):
    datum = adjoint_datum(family, rank)
    rho2 = two_rho_coroots(datum)
    for r in datum.simple_roots:
        assert dot(r, rho2) == 2
    rho2r = two_rho_roots(datum)
    for c in datum.simple_coroots:
        assert dot(rho2r, c) == 2


def test_dominant_representative():
    a1 = adjoint_datum("A", 1)
    lam, w = dominant_representative(a1, (5,))
    assert lam == (5,) and w.is_identity()
    lam, w = dominant_representative(a1, (-2,))
    assert lam == (2,) and w.apply((-2,)) == (2,)


def test_dominant_representative_b2_brute_force():
    b2 = adjoint_datum("B", 2)
    for v in [(-3, 1), (2, -5), (-1, -1), (4, 0)]:
        lam, w = dominant_representative(b2, v)
        assert w.apply(v) == lam
        orbit = {wm.apply(v) for wm in weyl_elements(b2)}
        doms = [x for x in orbit if is_dominant(b2, x)]
        assert doms == [lam]


def test_weyl_orbit_size_formula():
    b2 = adjoint_datum("B", 2)
    for lam in enumerate_dominant(b2, 4):
        assert weyl_orbit_size(b2, lam) == len(weyl_orbit(b2, lam))


def test_enumerate_dominant_requires_semisimple():
    with pytest.raises(BoundExceeded):
        enumerate_dominant(torus_datum(1), 3)


def test_datum_from_type():
    d = datum_from_type("A2+T1")
    assert d.rank == 3
    assert d.cartan_type().label() == "A2+T1"


def test_non_finite_datum_rejected():
    with pytest.raises((NotFiniteType, ValueError)):
        BasedRootDatum(2, ((1, 0), (0, 1)), ((2, -2), (-2, 2)))


def test_dynkin_labels():
    a2 = adjoint_datum("A", 2)
    assert dynkin_labels(a2, (3, 1)) == (3, 1)  # adjoint basis is fundamental
