import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realgrass.errors import NotInvolution, RankMismatch
from realgrass.lattice import (
    FiniteAbelianGroup,
    IntMatrix,
    Sublattice,
    fixed_sublattice,
    hermite_row_basis,
    kernel_basis,
    mat_inverse_unimodular,
    quotient,
    quotient_of_sublattices,
    quotient_representatives,
    smith_normal_form,
)


def snf_diag(m):
    _, d, _ = smith_normal_form(m)
    return [d.entries[i][i] for i in range(min(d.rows, d.cols))]


def test_snf_1x1():
    m = IntMatrix.from_rows([[2]])
    u, d, v = smith_normal_form(m)
    assert d.entries == ((2,),)
    assert (u @ m @ v) == d


def test_snf_zero_matrix():
    m = IntMatrix.zero(2, 3)
    u, d, v = smith_normal_form(m)
    assert d == m
    assert u.is_unimodular() and v.is_unimodular()


def test_snf_2x2_example():
    # U @ m @ V = diag(2, 4), verified by direct multiplication
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    u, d, v = smith_normal_form(m)
    assert snf_diag(m) == [2, 4]
    assert (u @ m @ v) == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 8).flatmap(
        lambda r: st.integers(1, 8).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-30, 30), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )
)
def test_snf_properties(rows):
    m = IntMatrix.from_rows(rows)
    u, d, v = smith_normal_form(m)
    assert (u @ m @ v) == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    diag = [d.entries[i][i] for i in range(min(d.rows, d.cols))]
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d.entries[i][j] == 0
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # zero diagonal entries come after all nonzero ones
    if 0 in diag:
        assert all(x == 0 for x in diag[diag.index(0):])


def test_fixed_sublattice_identity():
    s = fixed_sublattice(IntMatrix.identity(2))
    assert s.rank == 2
    assert s == Sublattice.full(2)


def test_fixed_sublattice_negative_identity():
    s = fixed_sublattice(IntMatrix.identity(2).neg())
    assert s.rank == 0


def test_fixed_sublattice_swap():
    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    s = fixed_sublattice(swap)
    assert s.basis == ((1, 1),)


def test_fixed_sublattice_rejects_non_involution():
    with pytest.raises(NotInvolution):
        fixed_sublattice(IntMatrix.from_rows([[2, 0], [0, 1]]))


def test_fixed_sublattice_saturated():
    # quotient by the fixed lattice has no torsion in the fixed direction
    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    s = fixed_sublattice(swap)
    q = quotient(2, s)
    assert q.invariant_factors == ()
    assert q.free_rank == 1


def test_quotient_examples():
    assert quotient(1, Sublattice.from_generators(1, [(2,)])) == FiniteAbelianGroup((2,), 0)
    assert quotient(2, Sublattice.full(2)).is_trivial
    q = quotient(2, Sublattice.from_generators(2, [(2, 0), (0, 3)]))
    assert q == FiniteAbelianGroup((6,), 0)


def test_quotient_rank_mismatch():
    with pytest.raises(RankMismatch):
        quotient(3, Sublattice.from_generators(2, [(1, 0)]))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
)
def test_quotient_invariant_under_unimodular_change(gens, fuzz):
    sub = Sublattice.from_generators(3, gens)
    if sub.rank == 0:
        return
    # build a unimodular matrix from elementary row operations encoded by fuzz
    u = IntMatrix.identity(sub.rank)
    ops = [list(r[: sub.rank]) for r in fuzz[: sub.rank]]
    rows = [list(r) for r in u.entries]
    for i, op in enumerate(ops):
        for j, c in enumerate(op):
            if i != j and j < len(rows):
                rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    u = IntMatrix.from_rows(rows)
    assert abs(u.det()) == 1
    changed = [u.entries[i] for i in range(sub.rank)]
    new_gens = []
    for row in changed:
        v = (0,) * 3
        for c, b in zip(row, sub.basis):
            v = tuple(x + c * y for x, y in zip(v, b))
        new_gens.append(v)
    sub2 = Sublattice.from_generators(3, new_gens)
    assert sub == sub2
    assert quotient(3, sub) == quotient(3, sub2)


def test_hermite_canonical():
    b1 = hermite_row_basis([(2, 4), (6, 8)])
    b2 = hermite_row_basis([(6, 8), (2, 4)])
    b3 = hermite_row_basis([(2, 4), (8, 12)])
    assert b1 == b2 == b3


def test_sublattice_coords_roundtrip():
    s = Sublattice.from_generators(3, [(2, 0, 1), (0, 3, 1)])
    v = s.from_coords((2, -1))
    assert s.coords(v) == (2, -1)
    assert s.coords((1, 0, 0)) is None


def test_sublattice_intersection():
    a = Sublattice.from_generators(2, [(2, 0), (0, 1)])
    b = Sublattice.from_generators(2, [(3, 0), (0, 1)])
    c = a.intersection(b)
    assert c.basis == ((6, 0), (0, 1))


def test_kernel_basis():
    m = IntMatrix.from_rows([[1, 2, 3]])
    ker = kernel_basis(m)
    assert len(ker) == 2
    for v in ker:
        assert m.apply(v) == (0,)


def test_quotient_of_sublattices():
    outer = Sublattice.from_generators(2, [(1, 1), (0, 2)])
    inner = Sublattice.from_generators(2, [(2, 2), (0, 4)])
    q = quotient_of_sublattices(outer, inner)
    assert q == FiniteAbelianGroup((2, 2), 0)


def test_quotient_representatives():
    sub = Sublattice.from_generators(2, [(2, 0), (0, 3)])
    reps = quotient_representatives(2, sub)
    assert len(reps) == 6
    seen = {tuple(x % 1 for x in r) for r in reps}  # just sanity on length
    cosets = set()
    for r in reps:
        cosets.add((r[0] % 2, r[1] % 3))
    assert len(cosets) == 6


def test_mat_inverse_unimodular():
    m = IntMatrix.from_rows([[1, 2], [0, 1]])
    inv = mat_inverse_unimodular(m)
    assert (m @ inv).is_identity()
