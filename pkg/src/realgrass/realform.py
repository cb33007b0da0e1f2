"""Real forms as lattice involutions with Satake metadata: the catalog,
the projections to the real coweight lattice, restricted root systems,
and the quasi-split / split / compact predicates.

The catalog ships as a structured text file and is the source of truth
for every stored involution; ``theta_from_satake`` re-derives each matrix
as the longest Weyl element of the painted Levi composed with the diagram
involution (arrow permutation on unpainted nodes, opposition involution
on each painted component), and the loader insists the two agree.

Default lattice convention: each catalog family uses the adjoint-group
datum, i.e. the cocharacter lattice is the full coweight lattice of the
root system.  Type-level outputs are isogeny-independent; component-group
outputs (see :mod:`realgrass.grcomb`) are documented as lattice-dependent.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import CatalogInvalid, InvariantViolation, NotInvolution, UnknownLabel
from .families import FamilySpec, all_family_specs, canonical_label
from .lattice import (
    IntMatrix,
    Sublattice,
    Vector,
    dot,
    fixed_sublattice,
    vec_add,
    vec_neg,
)
from .rootdatum import (
    BasedRootDatum,
    CartanType,
    adjoint_datum,
    classify_components,
    datum_from_type,
    direct_sum,
    dual,
    generate_roots,
    levi_subdatum,
    longest_weyl_element,
    torus_datum,
    two_rho_roots,
)

CATALOG_ENV_VAR = "REALGRASS_CATALOG"
CATALOG_VERSION = 1


@dataclass(frozen=True)
class SatakeData:
    """Based root datum with painted nodes and an arrow involution on the
    unpainted nodes."""

    datum: BasedRootDatum
    painted: frozenset[int]
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.datum.semisimple_rank
        touched = set()
        for a, b in self.arrows:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise InvariantViolation("bad arrow pair")
            if a in touched or b in touched:
                raise InvariantViolation("arrows must form an involution")
            touched.update((a, b))
        if touched & self.painted:
            raise InvariantViolation("painted set must be arrow-disjoint")
        if not all(0 <= i < n for i in self.painted):
            raise InvariantViolation("painted index out of range")

    @staticmethod
    def make(datum, painted, arrows) -> "SatakeData":
        return SatakeData(
            datum,
            frozenset(painted),
            tuple(sorted(tuple(sorted(a)) for a in arrows)),
        )

    def arrow_permutation(self) -> dict[int, int]:
        perm = {}
        for a, b in self.arrows:
            perm[a] = b
            perm[b] = a
        return perm


def _painted_components(sd: SatakeData) -> list[list[int]]:
    c = sd.datum.cartan_matrix().entries
    painted = sorted(sd.painted)
    seen: set[int] = set()
    comps = []
    for start in painted:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in painted:
                if y not in seen and c[x][y] != 0:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _opposition_involution(sd: SatakeData, comp: list[int]) -> dict[int, int]:
    """Permutation iota of a painted component with w0(coroot_i) equal to
    -coroot_{iota(i)} for the component's longest Weyl element."""
    levi = levi_subdatum(sd.datum, comp)
    w0 = longest_weyl_element(levi)
    out = {}
    for i in comp:
        image = w0.apply(sd.datum.simple_coroots[i])
        target = vec_neg(image)
        j = next(
            (k for k in comp if sd.datum.simple_coroots[k] == target), None
        )
        if j is None:
            raise InvariantViolation("opposition involution failed to close")
        out[i] = j
    return out


def diagram_permutation(sd: SatakeData) -> dict[int, int]:
    """Total node permutation: arrows on unpainted nodes, the opposition
    involution on each painted component, identity elsewhere."""
    n = sd.datum.semisimple_rank
    perm = {i: i for i in range(n)}
    perm.update(sd.arrow_permutation())
    for comp in _painted_components(sd):
        perm.update(_opposition_involution(sd, comp))
    c = sd.datum.cartan_matrix().entries
    for i in range(n):
        for j in range(n):
            if c[perm[i]][perm[j]] != c[i][j]:
                raise InvariantViolation(
                    "arrow/opposition permutation is not a diagram automorphism"
                )
    return perm


def _lattice_automorphism_from_permutation(
    datum: BasedRootDatum, perm: dict[int, int]
) -> IntMatrix:
    n = datum.rank
    if all(perm[i] == i for i in perm):
        return IntMatrix.identity(n)
    if datum.semisimple_rank != n:
        raise InvariantViolation(
            "nontrivial diagram involutions need a semisimple lattice; "
            "build reductive cases with product()"
        )
    # solve T @ coroot_i = coroot_{perm(i)}; the coroots are a rational
    # basis, so T = img @ cols^{-1} with coroots as matrix columns
    cols = [[Fraction(datum.simple_coroots[i][a]) for i in range(n)] for a in range(n)]
    img = [
        [Fraction(datum.simple_coroots[perm[i]][a]) for i in range(n)]
        for a in range(n)
    ]
    inv_cols = _fraction_inverse(cols)
    t = [
        [
            sum(img[a][k] * inv_cols[k][b] for k in range(n))
            for b in range(n)
        ]
        for a in range(n)
    ]
    if any(x.denominator != 1 for row in t for x in row):
        raise InvariantViolation("diagram involution does not preserve the lattice")
    m = IntMatrix.from_rows([[int(x) for x in row] for row in t])
    if not m.is_unimodular():
        raise InvariantViolation("diagram involution is not a lattice automorphism")
    return m


def _fraction_inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [r[n:] for r in aug]


def theta_from_satake(sd: SatakeData) -> IntMatrix:
    """Involution of the cocharacter lattice built as w_{0,M} composed
    with the diagram involution; validated against the real-form
    invariant suite by the caller."""
    perm = diagram_permutation(sd)
    tau = _lattice_automorphism_from_permutation(sd.datum, perm)
    w0m = longest_weyl_element(levi_subdatum(sd.datum, sorted(sd.painted)))
    theta = w0m @ tau
    if theta @ theta != IntMatrix.identity(sd.datum.rank):
        raise InvariantViolation("constructed involution does not square to 1")
    if theta != tau @ w0m:
        raise InvariantViolation("Levi part and diagram part failed to commute")
    return theta


@dataclass(frozen=True)
class RealForm:
    """A based root datum with a validated lattice involution."""

    satake: SatakeData
    theta: IntMatrix
    label: str | None = None

    @property
    def datum(self) -> BasedRootDatum:
        return self.satake.datum

    @cached_property
    def theta_dual(self) -> IntMatrix:
        """Transpose involution, acting on the character lattice."""
        return self.theta.transpose()

    @cached_property
    def two_rho_m(self) -> Vector:
        """Sum of the positive roots of the painted Levi (character side)."""
        return two_rho_roots(levi_subdatum(self.datum, sorted(self.satake.painted)))

    @cached_property
    def two_rho_m_coroots(self) -> Vector:
        from .rootdatum import two_rho_coroots

        return two_rho_coroots(levi_subdatum(self.datum, sorted(self.satake.painted)))

    @cached_property
    def real_lattice(self) -> Sublattice:
        """The fixed lattice of theta (the real coweight lattice)."""
        return fixed_sublattice(self.theta)

    @cached_property
    def image_lattice(self) -> Sublattice:
        """Image of the projection sigma inside the real lattice."""
        n = self.datum.rank
        gens = [
            sigma(self, tuple(int(i == j) for j in range(n))) for i in range(n)
        ]
        return Sublattice.from_generators(n, gens)

    def __str__(self):
        return self.label or f"<real form of {self.datum.cartan_type().label()}>"


def sigma(rf: RealForm, v: Vector) -> Vector:
    """Projection to the real coweight lattice: theta(v) + v."""
    return vec_add(rf.theta.apply(v), v)


def sigma_graded(rf: RealForm, v: Vector) -> tuple[Vector, int]:
    """Graded projection: (theta(v) + v, pairing with the painted Levi's
    positive-root sum)."""
    return sigma(rf, v), dot(rf.two_rho_m, v)


def real_rank(rf: RealForm) -> int:
    return rf.real_lattice.rank


def is_quasi_split(rf: RealForm) -> bool:
    """No painted nodes, equivalently the grading covector vanishes."""
    return not any(rf.two_rho_m)


def is_split(rf: RealForm) -> bool:
    return rf.theta.is_identity()


def is_compact(rf: RealForm) -> bool:
    return real_rank(rf) == 0


@dataclass(frozen=True)
class RestrictedRootSystem:
    """Nonzero projections of a coroot set, with preimage counts.

    The multiplicity recorded for a projected root is the number of its
    sigma-preimages among the projected coroots, not the dimension of a
    real root space; only the preimage count enters the constructions
    downstream.
    """

    ambient: Sublattice
    roots: tuple[tuple[Vector, int], ...]
    reduced: bool
    positive: tuple[Vector, ...]
    form_matrix: tuple[tuple[int, ...], ...]  # pairwise invariant products of positive roots

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.roots)

    def indivisible_positive(self) -> tuple[Vector, ...]:
        """Positive roots whose half is not itself a projected root."""
        support = {v for v, _ in self.roots}
        out = []
        for v in self.positive:
            if all(x % 2 == 0 for x in v) and tuple(x // 2 for x in v) in support:
                continue
            out.append(v)
        return tuple(out)

    def simple_system(self) -> tuple[Vector, ...]:
        """Indecomposable elements of the positive indivisible part."""
        indiv = self.indivisible_positive()
        sums = {vec_add(a, b) for a in indiv for b in indiv}
        return tuple(sorted(v for v in indiv if v not in sums))

    def cartan_type(self) -> CartanType:
        """Type of the projected system, with non-reduced components
        reported in the BC family."""
        simples = self.simple_system()
        if not simples:
            return CartanType((), self.ambient.rank)
        form = _restricted_form(self)
        k = len(simples)
        c = [
            [
                _exact_div(2 * form(simples[j], simples[i]), form(simples[i], simples[i]))
                for j in range(k)
            ]
            for i in range(k)
        ]
        comps = classify_components(IntMatrix.from_rows(c))
        support = {v for v, _ in self.roots}
        out = []
        for fam, rank, nodes in comps:
            doubled = _component_has_double(self, [simples[i] for i in nodes], support)
            out.append(("BC", rank) if doubled else (fam, rank))
        sem = sum(r for _, r in out)
        return CartanType(tuple(sorted(out)), self.ambient.rank - _span_rank(simples))

    def weyl_order(self) -> int:
        return self.cartan_type().weyl_order()


def _span_rank(vectors) -> int:
    if not vectors:
        return 0
    from .lattice import smith_normal_form

    _, d, _ = smith_normal_form(IntMatrix.from_rows(list(vectors)))
    return sum(1 for i in range(min(d.rows, d.cols)) if d.entries[i][i] != 0)


def _exact_div(a: int, b: int) -> int:
    if b == 0 or a % b:
        raise InvariantViolation("restricted Cartan number is not integral")
    return a // b


def _component_has_double(rrs: "RestrictedRootSystem", comp_simples, support) -> bool:
    # a component is non-reduced iff some support root has its double in
    # the rational span of the component's simple system
    span = _rational_span_membership(comp_simples)
    for v in support:
        if tuple(2 * x for x in v) in support and span(v):
            return True
    return False


def _rational_span_membership(vectors):
    from fractions import Fraction

    basis: list[list[Fraction]] = []
    for v in vectors:
        basis.append([Fraction(x) for x in v])
    # row echelon of the span
    rows = [r[:] for r in basis]
    pivots = []
    for r in rows:
        for p, pr in pivots:
            if r[p] != 0:
                f = r[p] / pr[p]
                r[:] = [x - f * y for x, y in zip(r, pr)]
        nz = next((i for i, x in enumerate(r) if x != 0), None)
        if nz is not None:
            pivots.append((nz, r))

    def member(v):
        r = [Fraction(x) for x in v]
        for p, pr in pivots:
            if r[p] != 0:
                f = r[p] / pr[p]
                r[:] = [x - f * y for x, y in zip(r, pr)]
        return all(x == 0 for x in r)

    return member


def _restricted_form(rrs: RestrictedRootSystem):
    index = {v: i for i, v in enumerate(rrs.positive)}

    def form(a: Vector, b: Vector) -> int:
        return rrs.form_matrix[index[a]][index[b]]

    return form


class _CorootSpaceForm:
    """Invariant symmetric form on the rational span of the coroots,
    normalized so short coroots of each component have squared length 2."""

    def __init__(self, datum: BasedRootDatum):
        from .characters import _engine, symmetrizers

        self.datum = datum
        self.eng = _engine(datum)
        self.sym = symmetrizers(datum)

    def coords(self, v: Vector):
        labels = tuple(dot(r, v) for r in self.datum.simple_roots)
        c = self.eng.coroot_coords_from_labels(labels)
        if c is None:
            return None
        # confirm v really lies in the integral coroot span
        recon = (0,) * self.datum.rank
        for x, cr in zip(c, self.datum.simple_coroots):
            recon = tuple(a + x * b for a, b in zip(recon, cr))
        return c if recon == v else None

    def pair(self, x: Vector, y: Vector) -> int:
        """(x, y) for y in the integral coroot span."""
        cy = self.coords(y)
        if cy is None:
            raise InvariantViolation("vector outside the coroot lattice")
        labels_x = tuple(dot(r, x) for r in self.datum.simple_roots)
        return sum(self.sym[j] * cy[j] * labels_x[j] for j in range(len(cy)))


@lru_cache(maxsize=None)
def _coroot_form(datum: BasedRootDatum) -> _CorootSpaceForm:
    return _CorootSpaceForm(datum)


def _restricted_system(rf: RealForm, positive_coroots) -> RestrictedRootSystem:
    # theta permutes the positive coroots outside the painted span and
    # kills the painted span, so positive coroots project onto the
    # positive half of the projected system and preimage counts mirror
    # under negation
    counts: dict[Vector, int] = {}
    for alpha in positive_coroots:
        image = sigma(rf, alpha)
        if any(image):
            counts[image] = counts.get(image, 0) + 1
    pos = tuple(sorted(counts))
    both = {v: m for v, m in counts.items()}
    both.update({vec_neg(v): m for v, m in counts.items()})
    support = set(both)
    reduced = not any(tuple(2 * x for x in v) in support for v in support)
    form = _coroot_form(rf.datum)
    fm = tuple(tuple(form.pair(a, b) for b in pos) for a in pos)
    return RestrictedRootSystem(
        ambient=rf.real_lattice,
        roots=tuple(sorted(both.items())),
        reduced=reduced,
        positive=pos,
        form_matrix=fm,
    )


def restricted_roots(rf: RealForm) -> RestrictedRootSystem:
    """Nonzero projections of the full dual-side root system (all coroots
    of the datum), with preimage multiplicities."""
    rs = generate_roots(dual(rf.datum))
    return _restricted_system(rf, rs.roots)


def small_weyl_order(rf: RealForm) -> int:
    """Order of the Weyl group of the reduced part of the projected
    system, by classification and the product formula."""
    return restricted_roots(rf).weyl_order()


def real_dominance_generators(rf: RealForm) -> tuple[Vector, ...]:
    """Generators of the positive-coroot cone intersected with the real
    lattice: the theta-fixed positive coroots plus all nonzero sigma
    images of positive coroots."""
    rs = generate_roots(dual(rf.datum))
    gens = []
    for alpha in rs.roots:
        if rf.theta.apply(alpha) == alpha:
            gens.append(alpha)
        img = sigma(rf, alpha)
        if any(img):
            gens.append(img)
    return tuple(sorted(set(gens)))


def validate_real_form(rf: RealForm, expect_real_rank: int | None = None):
    """Full invariant suite; raises InvariantViolation on any failure."""
    n = rf.datum.rank
    th = rf.theta
    if th @ th != IntMatrix.identity(n):
        raise NotInvolution("theta squared is not the identity")
    rs = generate_roots(dual(rf.datum))
    coroot_set = set(rs.all_roots())
    for alpha in rs.roots:
        if th.apply(alpha) not in coroot_set:
            raise InvariantViolation("theta does not permute the coroots")
    thd = rf.theta_dual
    rho2 = two_rho_roots(rf.datum)
    rho2m = rf.two_rho_m
    anis = tuple(a - b for a, b in zip(rho2, rho2m))
    if thd.apply(anis) != anis:
        raise InvariantViolation("theta_dual does not fix 2rho - 2rho_M")
    if thd.apply(rho2m) != vec_neg(rho2m):
        raise InvariantViolation("theta_dual does not negate 2rho_M")
    # theta stabilizes the simple system of the orthogonal Levi's roots
    ortho = [a for a in rs.roots if dot(rho2m, a) == 0]
    osums = {vec_add(a, b) for a in ortho for b in ortho}
    osimple = {a for a in ortho if a not in osums}
    if {th.apply(a) for a in osimple} != osimple:
        raise InvariantViolation("theta does not stabilize the orthogonal Levi simples")
    if expect_real_rank is not None and real_rank(rf) != expect_real_rank:
        raise InvariantViolation(
            f"fixed lattice rank {real_rank(rf)} != expected {expect_real_rank}"
        )


def product(rf1: RealForm, rf2: RealForm) -> RealForm:
    """Block-diagonal involution on the direct-sum datum."""
    d1, d2 = rf1.datum, rf2.datum
    datum = direct_sum(d1, d2)
    shift = d1.semisimple_rank
    painted = set(rf1.satake.painted) | {i + shift for i in rf2.satake.painted}
    arrows = list(rf1.satake.arrows) + [
        (a + shift, b + shift) for a, b in rf2.satake.arrows
    ]
    theta_rows = []
    for i, row in enumerate(rf1.theta.entries):
        theta_rows.append(tuple(row) + (0,) * d2.rank)
    for i, row in enumerate(rf2.theta.entries):
        theta_rows.append((0,) * d1.rank + tuple(row))
    label = None
    if rf1.label and rf2.label:
        label = f"{rf1.label} x {rf2.label}"
    return RealForm(
        SatakeData.make(datum, painted, arrows),
        IntMatrix.from_rows(theta_rows),
        label,
    )


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog record: Satake data, stored involution, expectations."""

    label: str
    cartan_class: str
    g_type: str
    rank: int
    painted: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]
    theta: IntMatrix
    real_rank: int
    h_type: str
    quasi_split: bool
    split: bool
    nonreduced: bool

    def real_form(self) -> RealForm:
        datum = datum_from_type(self.g_type)
        sd = SatakeData.make(datum, self.painted, self.arrows)
        return RealForm(sd, self.theta, self.label)


def render_catalog(entries) -> str:
    lines = [
        "# realgrass real-form catalog.",
        "# One [form] record per real form; indices are 1-based Bourbaki",
        "# node numbers, theta rows act on the adjoint coweight lattice.",
        f"catalog_version = {CATALOG_VERSION}",
        "",
    ]
    for e in entries:
        lines.append(f"[form {e.label}]")
        lines.append(f"class = {e.cartan_class}")
        lines.append(f"g_type = {e.g_type}")
        lines.append(f"rank = {e.rank}")
        lines.append("painted = " + ",".join(str(i + 1) for i in e.painted))
        lines.append(
            "arrows = " + ",".join(f"{a + 1}-{b + 1}" for a, b in e.arrows)
        )
        lines.append(
            "theta = " + ";".join(",".join(str(x) for x in row) for row in e.theta.entries)
        )
        lines.append(f"real_rank = {e.real_rank}")
        lines.append(f"h_type = {e.h_type}")
        lines.append(f"quasi_split = {'yes' if e.quasi_split else 'no'}")
        lines.append(f"split = {'yes' if e.split else 'no'}")
        lines.append(f"nonreduced = {'yes' if e.nonreduced else 'no'}")
        lines.append("[end]")
        lines.append("")
    return "\n".join(lines)


_REQUIRED_KEYS = {
    "class", "g_type", "rank", "painted", "arrows", "theta",
    "real_rank", "h_type", "quasi_split", "split", "nonreduced",
}


def parse_catalog(text: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    version = None
    label = None
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[form "):
            if label is not None:
                raise CatalogInvalid(f"line {lineno}: nested form record")
            label = line[len("[form "):-1].strip()
            fields = {}
            continue
        if line == "[end]":
            if label is None:
                raise CatalogInvalid(f"line {lineno}: stray [end]")
            entries[normalize_label(label)] = _entry_from_fields(label, fields)
            label = None
            continue
        if "=" not in line:
            raise CatalogInvalid(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if label is None:
            if key != "catalog_version":
                raise CatalogInvalid(f"line {lineno}: unknown top-level key {key!r}")
            version = int(value)
            continue
        if key not in _REQUIRED_KEYS:
            raise CatalogInvalid(f"line {lineno}: unknown field {key!r}")
        if key in fields:
            raise CatalogInvalid(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value
    if label is not None:
        raise CatalogInvalid("unterminated form record")
    if version != CATALOG_VERSION:
        raise CatalogInvalid(f"catalog_version {version!r} unsupported")
    return entries


def _entry_from_fields(label: str, fields: dict[str, str]) -> CatalogEntry:
    missing = _REQUIRED_KEYS - set(fields)
    if missing:
        raise CatalogInvalid(f"{label}: missing fields {sorted(missing)}")

    def flag(key):
        v = fields[key]
        if v not in ("yes", "no"):
            raise CatalogInvalid(f"{label}: flag {key} must be yes or no")
        return v == "yes"

    painted = tuple(
        int(x) - 1 for x in fields["painted"].split(",") if x.strip()
    )
    arrows = tuple(
        tuple(int(x) - 1 for x in pair.split("-"))
        for pair in fields["arrows"].split(",")
        if pair.strip()
    )
    theta = IntMatrix.from_rows(
        [[int(x) for x in row.split(",")] for row in fields["theta"].split(";")]
    )
    return CatalogEntry(
        label=label,
        cartan_class=fields["class"],
        g_type=fields["g_type"],
        rank=int(fields["rank"]),
        painted=tuple(sorted(painted)),
        arrows=tuple(sorted(tuple(sorted(a)) for a in arrows)),
        theta=theta,
        real_rank=int(fields["real_rank"]),
        h_type=fields["h_type"],
        quasi_split=flag("quasi_split"),
        split=flag("split"),
        nonreduced=flag("nonreduced"),
    )


def catalog_entry_from_spec(spec: FamilySpec) -> CatalogEntry:
    """Build (and validate) a catalog entry from a Satake family spec."""
    datum = adjoint_datum(spec.g_family, spec.g_rank)
    sd = SatakeData.make(datum, spec.painted, spec.arrows)
    theta = theta_from_satake(sd)
    entry = CatalogEntry(
        label=spec.label,
        cartan_class=spec.cartan_class,
        g_type=spec.g_type,
        rank=spec.g_rank,
        painted=spec.painted,
        arrows=spec.arrows,
        theta=theta,
        real_rank=spec.real_rank,
        h_type=spec.h_type,
        quasi_split=spec.quasi_split,
        split=spec.split,
        nonreduced=spec.nonreduced,
    )
    validate_real_form(entry.real_form(), expect_real_rank=spec.real_rank)
    return entry


def normalize_label(label: str) -> str:
    s = label.strip().lower().replace(" ", "")
    # tolerate a leading Cartan-class tag such as "AIII su(1,2)"
    m = re.match(r"^(ai{1,3}|aiv|bi{1,2}|ci{1,2}|di{1,3}|e[ivx]+|fi{1,2}|g)(?=[a-z])", s)
    if m and not s.startswith(("e6", "e7", "e8", "f4", "g2")):
        s = s[m.end():]
    return s


def _default_catalog_path() -> str:
    env = os.environ.get(CATALOG_ENV_VAR)
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data", "catalog.txt")


@lru_cache(maxsize=8)
def load_catalog(path: str | None = None) -> dict[str, CatalogEntry]:
    path = path or _default_catalog_path()
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def catalog_labels(path: str | None = None) -> list[str]:
    return sorted(load_catalog(path))


_SYNTHETIC = re.compile(
    r"^(split|compact)\(([a-z]\d(?:\+[a-z]\d)*)\)$|^(torus|compact_torus)\((\d+)\)$"
)


def catalog(label: str, path: str | None = None) -> RealForm:
    """Look up a validated real form by label.

    Besides the shipped file entries, the synthetic families
    ``split(<type>)``, ``compact(<type>)``, ``torus(n)`` and
    ``compact_torus(n)`` are constructed on demand.
    """
    key = normalize_label(label)
    m = _SYNTHETIC.match(key)
    if m:
        return _synthetic_form(m, key)
    entries = load_catalog(path)
    if key not in entries:
        raise UnknownLabel(f"no catalog entry for {label!r}")
    entry = entries[key]
    rf = entry.real_form()
    recomputed = theta_from_satake(rf.satake)
    if recomputed != entry.theta:
        raise CatalogInvalid(
            f"{label}: stored involution disagrees with the Satake-derived one"
        )
    validate_real_form(rf, expect_real_rank=entry.real_rank)
    return rf


def _synthetic_form(m: re.Match, key: str) -> RealForm:
    if m.group(1):
        kind, type_label = m.group(1), m.group(2).upper()
        datum = datum_from_type(type_label)
        if kind == "split":
            sd = SatakeData.make(datum, (), ())
            rf = RealForm(sd, IntMatrix.identity(datum.rank), key)
        else:
            sd = SatakeData.make(datum, range(datum.semisimple_rank), ())
            rf = RealForm(sd, theta_from_satake(sd), key)
            if real_rank(rf) != 0:
                raise InvariantViolation("compact form must have real rank 0")
        validate_real_form(rf)
        return rf
    kind, r = m.group(3), int(m.group(4))
    datum = torus_datum(r)
    sd = SatakeData.make(datum, (), ())
    theta = IntMatrix.identity(r) if kind == "torus" else IntMatrix.identity(r).neg()
    rf = RealForm(sd, theta, key)
    validate_real_form(rf)
    return rf
