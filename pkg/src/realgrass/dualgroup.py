"""The reductive subgroup associated to a real form, computed inside the
dual group's root system.

Pipeline, all in the cocharacter lattice of the original datum (where the
dual group's roots live): the roots orthogonal to the compact-part
grading covector form a Levi subsystem; exchanged simple pairs of that
subsystem whose sum is again a root fuse into long roots; projecting and
discarding any root whose double also projects leaves a reduced system,
the root system of the associated subgroup on the projected torus
lattice.

The bracket condition "[X_a, X_{theta(a)}] nonzero" is realized
combinatorially as "a + theta(a) is again a root of the subsystem",
which is the standard root-vector fact for distinct non-opposite roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import InternalInconsistency, Mismatch
from .lattice import IntMatrix, Sublattice, Vector, dot, vec_add, vec_neg
from .realform import (
    RealForm,
    _coroot_form,
    _restricted_system,
    catalog,
    is_quasi_split,
    is_split,
    load_catalog,
    real_rank,
    restricted_roots,
    sigma,
    sigma_graded,
    small_weyl_order,
)
from .rootdatum import (
    BasedRootDatum,
    CartanType,
    classify,
    dual,
    generate_roots,
)


@dataclass(frozen=True)
class LeviData:
    """Roots orthogonal to the grading covector, with the folding data."""

    delta0: tuple[Vector, ...]            # simple system of the orthogonal Levi
    tau: tuple[tuple[Vector, Vector], ...]  # alpha -> alpha - theta(alpha) or 0
    delta1: tuple[Vector, ...]            # simple system after folding
    r0_positive: tuple[Vector, ...]
    r1_positive: tuple[Vector, ...]

    @cached_property
    def tau_map(self) -> dict:
        return dict(self.tau)


def levi_data(rf: RealForm) -> LeviData:
    """Orthogonal-Levi root data of a real form."""
    datum = rf.datum
    rs = generate_roots(dual(datum))       # positive coroots with their roots
    rho2m = rf.two_rho_m                   # grading covector (character side)
    rho2m_cochar = rf.two_rho_m_coroots
    r0_pos = tuple(a for a in rs.roots if dot(rho2m, a) == 0)
    r0_full = set(r0_pos) | {vec_neg(a) for a in r0_pos}
    sums = {vec_add(a, b) for a in r0_pos for b in r0_pos}
    delta0 = tuple(sorted(a for a in r0_pos if a not in sums))
    theta = rf.theta
    tau_pairs = []
    delta1: list[Vector] = []
    for a in delta0:
        ta = theta.apply(a)
        if vec_add(a, ta) in r0_full:
            tau_pairs.append((a, tuple(x - y for x, y in zip(a, ta))))
            fused = vec_add(a, ta)
            if fused not in delta1:
                delta1.append(fused)
        else:
            tau_pairs.append((a, (0,) * datum.rank))
            delta1.append(a)
    shifts = [t for _, t in tau_pairs if any(t)]
    r1_pos = tuple(
        b for b in r0_pos
        if dot(rs.coroot_of(b), rho2m_cochar) == 0
        and all(dot(rs.coroot_of(b), t) == 0 for t in shifts)
    )
    return LeviData(
        delta0=delta0,
        tau=tuple(tau_pairs),
        delta1=tuple(sorted(delta1)),
        r0_positive=r0_pos,
        r1_positive=r1_pos,
    )


def l1_equals_l0(rf: RealForm) -> bool:
    """True iff folding is trivial: every theta-stable component of the
    orthogonal Levi diagram contains a theta-fixed node."""
    ld = levi_data(rf)
    form = _coroot_form(rf.datum)
    nodes = list(ld.delta0)
    adj = {
        a: [b for b in nodes if b != a and form.pair(a, b) != 0] for a in nodes
    }
    theta = rf.theta
    seen: set[Vector] = set()
    criterion = True
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comp_set = set(comp)
        if {theta.apply(a) for a in comp_set} == comp_set:
            if not any(theta.apply(a) == a for a in comp_set):
                criterion = False
    all_tau_zero = all(not any(t) for _, t in ld.tau)
    if criterion != all_tau_zero:
        raise InternalInconsistency(
            "fixed-node criterion disagrees with the folding shifts"
        )
    return criterion


def xi(rf: RealForm) -> tuple[Vector, ...]:
    """Reduced projected root system: all projections of the orthogonal
    Levi's roots whose double is not itself a projection."""
    ld = levi_data(rf)
    pos_proj = [sigma(rf, a) for a in ld.r0_positive]
    proj_set = set(pos_proj)
    xi_pos = sorted(
        {v for v in pos_proj if tuple(2 * x for x in v) not in proj_set}
    )
    return tuple(sorted(xi_pos + [vec_neg(v) for v in xi_pos]))


@dataclass(frozen=True)
class AssociatedSubgroup:
    """Root datum of the reductive subgroup of the dual group attached to
    a real form: projected torus lattice, reduced root system, type."""

    torus_lattice: Sublattice          # image of sigma in the cocharacter lattice
    graded_lattice: Sublattice         # image of the graded projection
    xi: tuple[Vector, ...]             # full reduced root set, ambient coordinates
    xi_simple: tuple[Vector, ...]
    cartan_type: CartanType
    h_datum: BasedRootDatum            # roots xi in torus-lattice coordinates

    @cached_property
    def rep_datum(self) -> BasedRootDatum:
        """Datum whose dual-group representations are Ĥ-representations;
        weights live in torus-lattice coordinates."""
        return dual(self.h_datum)

    def weight_coords(self, v: Vector) -> Vector | None:
        return self.torus_lattice.coords(v)

    def rank(self) -> int:
        return self.torus_lattice.rank


def associated_subgroup(rf: RealForm) -> AssociatedSubgroup:
    """Assemble the subgroup's root datum and verify the classification
    identities (rank = real rank, Weyl order = small Weyl order)."""
    datum = rf.datum
    torus = rf.image_lattice
    n = datum.rank
    graded_gens = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        v, z = sigma_graded(rf, e)
        graded_gens.append(v + (z,))
    graded = Sublattice.from_generators(n + 1, graded_gens)
    full_xi = xi(rf)
    pos = sorted(v for v in full_xi if v > vec_neg(v))
    # positivity inherited from the ambient positive system
    ld = levi_data(rf)
    pos_proj = {sigma(rf, a) for a in ld.r0_positive}
    xi_pos = tuple(sorted(v for v in full_xi if v in pos_proj))
    sums = {vec_add(a, b) for a in xi_pos for b in xi_pos}
    simples = tuple(sorted(v for v in xi_pos if v not in sums))
    form = _coroot_form(datum)

    def pairing(x: Vector, root: Vector) -> int:
        num = 2 * form.pair(x, root)
        den = form.pair(root, root)
        if num % den:
            raise InternalInconsistency("non-integral subgroup pairing")
        return num // den

    r = torus.rank
    root_rows = []
    coroot_rows = []
    for s in simples:
        coords = torus.coords(s)
        if coords is None:
            raise InternalInconsistency("projected root outside the torus lattice")
        root_rows.append(coords)
        coroot_rows.append(tuple(pairing(b, s) for b in torus.basis))
    h_datum = BasedRootDatum(r, tuple(root_rows), tuple(coroot_rows))
    ctype = h_datum.cartan_type()
    if ctype.semisimple_rank > r:
        raise InternalInconsistency("subgroup rank exceeds torus rank")
    if sorted(generate_roots(h_datum).roots) != sorted(
        torus.coords(v) for v in xi_pos
    ):
        raise InternalInconsistency("generated subgroup roots differ from xi")
    if ctype.weyl_order() != small_weyl_order(rf):
        raise InternalInconsistency("subgroup Weyl order != small Weyl order")
    if r != real_rank(rf):
        raise InternalInconsistency("torus rank != real rank")
    doubles = {tuple(2 * x for x in v) for v in full_xi}
    if doubles & set(full_xi):
        raise InternalInconsistency("xi is not reduced")
    return AssociatedSubgroup(
        torus_lattice=torus,
        graded_lattice=graded,
        xi=full_xi,
        xi_simple=simples,
        cartan_type=ctype,
        h_datum=h_datum,
    )


def verify_fixed_point_shadow(rf: RealForm) -> bool:
    """Check that projection restricted to the folded subsystem lands
    bijectively-with-small-fibers on xi: every fiber is either one
    theta-fixed root or an exchanged pair, and nothing else projects in."""
    ld = levi_data(rf)
    full_xi = set(xi(rf))
    theta = rf.theta
    r1_full = list(ld.r1_positive) + [vec_neg(b) for b in ld.r1_positive]
    r0_full = list(ld.r0_positive) + [vec_neg(b) for b in ld.r0_positive]
    fibers: dict[Vector, list[Vector]] = {}
    for b in r1_full:
        v = sigma(rf, b)
        if v not in full_xi:
            return False
        fibers.setdefault(v, []).append(b)
    if set(fibers) != full_xi:
        return False
    for v, fib in fibers.items():
        if len(fib) == 1:
            if theta.apply(fib[0]) != fib[0]:
                return False
        elif len(fib) == 2:
            if theta.apply(fib[0]) != fib[1]:
                return False
        else:
            return False
    for b in r0_full:
        if b not in set(r1_full) and sigma(rf, b) in full_xi:
            return False
    return True


def levi_projected_system(rf: RealForm):
    """Projections of the orthogonal Levi's roots (the system whose
    non-reducedness is the classification invariant)."""
    ld = levi_data(rf)
    return _restricted_system(rf, ld.r0_positive)


@dataclass(frozen=True)
class TableRow:
    label: str
    g_type: str
    g_dual_type: str
    h_computed: str
    h_expected: str
    real_rank_computed: int
    real_rank_expected: int
    small_weyl_order: int
    xi_weyl_order: int
    quasi_split_computed: bool
    quasi_split_expected: bool
    split_computed: bool
    split_expected: bool
    nonreduced_computed: bool
    nonreduced_expected: bool

    def problems(self) -> list[str]:
        out = []
        if self.h_computed != self.h_expected:
            out.append(f"h {self.h_computed} != {self.h_expected}")
        if self.real_rank_computed != self.real_rank_expected:
            out.append("real rank")
        if self.small_weyl_order != self.xi_weyl_order:
            out.append("Weyl order")
        if self.quasi_split_computed != self.quasi_split_expected:
            out.append("quasi-split flag")
        if self.split_computed != self.split_expected:
            out.append("split flag")
        if self.nonreduced_computed != self.nonreduced_expected:
            out.append("nonreduced flag")
        return out


@dataclass(frozen=True)
class TableReport:
    rows: tuple[TableRow, ...]

    @property
    def mismatches(self) -> list[TableRow]:
        return [r for r in self.rows if r.problems()]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def raise_on_mismatch(self):
        bad = self.mismatches
        if bad:
            first = bad[0]
            raise Mismatch(
                f"{len(bad)} row(s) disagree; first: {first.label}: {first.problems()}"
            )


def classify_row(rf: RealForm, entry=None) -> TableRow:
    sub = associated_subgroup(rf)
    g_label = rf.datum.cartan_type().label()
    g_dual = dual(rf.datum).cartan_type().label()
    lev = levi_projected_system(rf)
    return TableRow(
        label=str(rf),
        g_type=g_label,
        g_dual_type=g_dual,
        h_computed=sub.cartan_type.label(),
        h_expected=entry.h_type if entry else sub.cartan_type.label(),
        real_rank_computed=real_rank(rf),
        real_rank_expected=entry.real_rank if entry else real_rank(rf),
        small_weyl_order=small_weyl_order(rf),
        xi_weyl_order=sub.cartan_type.weyl_order(),
        quasi_split_computed=is_quasi_split(rf),
        quasi_split_expected=entry.quasi_split if entry else is_quasi_split(rf),
        split_computed=is_split(rf),
        split_expected=entry.split if entry else is_split(rf),
        nonreduced_computed=not lev.reduced,
        nonreduced_expected=entry.nonreduced if entry else not lev.reduced,
    )


def classify_table1(max_rank: int = 8, path: str | None = None) -> TableReport:
    """Diff the computed classification of every catalog entry against
    its stored expectations."""
    rows = []
    for label, entry in sorted(load_catalog(path).items()):
        if entry.rank > max_rank:
            continue
        rf = catalog(label, path=path)
        rows.append(classify_row(rf, entry))
    return TableReport(tuple(rows))
