"""Exact weight-multiplicity and character arithmetic for the dual group
of a based root datum.

For a datum of G, the irreducible characters computed here are those of
the group whose roots are the coroots of G; their weights live in the
cocharacter lattice.  This is the only representation theory the rest of
the package consumes.

The multiplicity engine works on Dynkin-label vectors, so every step is
integer arithmetic.  The invariant bilinear form is the symmetrized
pairing normalized so short roots of each component have squared length
2; any positive rescaling gives identical multiplicities (tested).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import BoundExceeded, NotDominant, NotWeylInvariant
from .lattice import Vector, dot, vec_add, vec_scale, vec_sub
from .rootdatum import (
    BasedRootDatum,
    coroot_coordinates,
    dominant_representative,
    dual,
    dynkin_labels,
    generate_roots,
    is_dominant,
    reflect,
    two_rho_coroots,
    two_rho_roots,
    weyl_elements,
    weyl_orbit,
    weyl_orbit_size,
)


def symmetrizers(datum: BasedRootDatum) -> tuple[int, ...]:
    """Positive integers d_i with d_i*C[j][i] = d_j*C[i][j], scaled so the
    minimum on each diagram component is 1 (short coroots get length 2)."""
    from fractions import Fraction

    n = datum.semisimple_rank
    c = datum.cartan_matrix().entries
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and c[i][j] != 0 and d[j] is None:
                    # d_j = d_i * C[j][i] / C[i][j]
                    d[j] = d[i] * c[j][i] / c[i][j]
                    comp.append(j)
                    stack.append(j)
        scale = min(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / scale
    out = []
    for x in d:
        if x.denominator != 1:
            raise ValueError("non-integral symmetrizer")
        out.append(int(x))
    return tuple(out)


class _DualWeightEngine:
    """Precomputed label-vector machinery for one datum."""

    def __init__(self, datum: BasedRootDatum):
        self.datum = datum
        self.n = datum.semisimple_rank
        self.cartan = datum.cartan_matrix().entries  # C[i][j] = <root_j, coroot_i>
        self.sym = symmetrizers(datum)
        rs = generate_roots(dual(datum))
        self.pos_coroots = rs.roots  # positive coroots, ambient cochar vectors
        self.pos_coords = rs.coords  # their simple-coroot coordinates
        # labels of coroot beta: <root_j, beta>
        self.pos_labels = tuple(
            tuple(dot(r, beta) for r in datum.simple_roots) for beta in self.pos_coroots
        )
        # form vector of beta: (x, beta) = dot(labels(x), dvec(beta))
        self.pos_dvec = tuple(
            tuple(self.sym[j] * cc[j] for j in range(self.n)) for cc in self.pos_coords
        )
        self.pos_height = tuple(sum(cc) for cc in self.pos_coords)
        # adjugate/determinant of C^T, for label -> coroot-coordinate solves
        from fractions import Fraction

        n = self.n
        det = 1
        adj_t: list[list[int]] = [[int(i == j) for j in range(n)] for i in range(n)]
        if n:
            from .lattice import IntMatrix, mat_inverse_unimodular  # noqa: F401

            ct = IntMatrix.from_rows(
                [[self.cartan[i][j] for i in range(n)] for j in range(n)]
            )
            det = ct.det()
            inv = [
                [Fraction(int(i == j)) for j in range(n)] for i in range(n)
            ]
            a = [[Fraction(x) for x in row] for row in ct.entries]
            for col in range(n):
                piv = next(i for i in range(col, n) if a[i][col] != 0)
                a[col], a[piv] = a[piv], a[col]
                inv[col], inv[piv] = inv[piv], inv[col]
                p = a[col][col]
                a[col] = [x / p for x in a[col]]
                inv[col] = [x / p for x in inv[col]]
                for i in range(n):
                    if i != col and a[i][col] != 0:
                        f = a[i][col]
                        a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                        inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
            adj_t = [[int(x * det) for x in row] for row in inv]
        self.ct_adjugate = adj_t
        self.ct_det = det
        self.partition_memo: dict = {}

    def coroot_coords_from_labels(self, diff) -> Vector | None:
        """Integer c with sum c_i * labels(coroot_i) = diff, else None."""
        d = self.ct_det
        out = []
        for i in range(self.n):
            num = sum(self.ct_adjugate[i][j] * diff[j] for j in range(self.n))
            if num % d:
                return None
            out.append(num // d)
        return tuple(out)

    def labels(self, v: Vector) -> Vector:
        return dynkin_labels(self.datum, v)

    def dominantize_labels(self, ell: Vector) -> Vector:
        cartan = self.cartan
        n = self.n
        cur = list(ell)
        while True:
            i = -1
            for k in range(n):
                if cur[k] < 0:
                    i = k
                    break
            if i < 0:
                return tuple(cur)
            t = cur[i]
            row = cartan[i]
            for j in range(n):
                cur[j] -= t * row[j]

    def form(self, ell: Vector, beta_index: int) -> int:
        return dot(ell, self.pos_dvec[beta_index])

    def form_coords(self, ell: Vector, coords) -> int:
        return sum(self.sym[j] * coords[j] * ell[j] for j in range(self.n))


@dataclass(frozen=True)
class Character:
    """Weyl-invariant character: one dominant representative per orbit.

    ``mults`` is a canonically sorted tuple of (dominant weight, positive
    multiplicity) pairs; full supports are expanded on demand.
    """

    datum: BasedRootDatum
    mults: tuple[tuple[Vector, int], ...]

    @staticmethod
    def from_dominant(datum: BasedRootDatum, d: dict) -> "Character":
        items = tuple(sorted((k, v) for k, v in d.items() if v))
        for k, v in items:
            if not is_dominant(datum, k):
                raise ValueError("non-dominant key")
            if v < 0:
                raise ValueError("negative multiplicity")
        return Character(datum, items)

    @staticmethod
    def from_weight_map(datum: BasedRootDatum, full: dict) -> "Character":
        """Build from a full weight map, checking Weyl invariance."""
        dom: dict[Vector, int] = {}
        for v, m in full.items():
            rep, _ = dominant_representative(datum, v)
            if dom.setdefault(rep, m) != m:
                raise NotWeylInvariant(f"orbit of {rep} carries unequal multiplicities")
        # verify every orbit element is present with the same multiplicity
        total = sum(full.values())
        expected = sum(weyl_orbit_size(datum, v) * m for v, m in dom.items())
        if total != expected:
            raise NotWeylInvariant("weight map misses part of a Weyl orbit")
        return Character.from_dominant(datum, dom)

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.mults)

    def multiplicity(self, v: Vector) -> int:
        rep, _ = dominant_representative(self.datum, v)
        return self.as_dict.get(rep, 0)

    def expand(self) -> dict:
        """Full weight -> multiplicity map (all Weyl translates)."""
        out: dict[Vector, int] = {}
        for v, m in self.mults:
            for w in weyl_orbit(self.datum, v):
                out[w] = m
        return out

    def total_dimension(self) -> int:
        return sum(m * weyl_orbit_size(self.datum, v) for v, m in self.mults)


@dataclass(frozen=True)
class GradedCharacter:
    """Finitely supported map (weight, Z-degree) -> positive multiplicity."""

    mults: tuple[tuple[tuple[Vector, int], int], ...]

    @staticmethod
    def from_dict(d: dict) -> "GradedCharacter":
        return GradedCharacter(tuple(sorted((k, v) for k, v in d.items() if v)))

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.mults)

    def total_mass(self) -> int:
        return sum(m for _, m in self.mults)

    def degrees(self) -> list[int]:
        return sorted({z for (_, z), _ in self.mults})

    def degree_slice(self, z: int) -> dict:
        return {v: m for (v, zz), m in self.mults if zz == z}


@lru_cache(maxsize=None)
def _engine(datum: BasedRootDatum) -> _DualWeightEngine:
    return _DualWeightEngine(datum)


def _support_offsets(datum: BasedRootDatum, lam: Vector):
    """Breadth-first enumeration of the weight support of V_lam.

    Yields pairs (offset, labels) where offset is the simple-coroot
    coordinate vector of lam - weight.  The support is exactly the set of
    weights in lam + Q whose dominant representative lies below lam, and
    it is connected under single simple-coroot steps.
    """
    eng = _engine(datum)
    n = eng.n
    lam_labels = eng.labels(lam)
    lam_l = tuple(lam_labels)

    def in_support(ell) -> bool:
        dom = eng.dominantize_labels(ell)
        # lam - dom must be a nonnegative coroot combination; its coroot
        # coordinates are determined by the labels via the Cartan matrix
        diff = [lam_l[j] - dom[j] for j in range(n)]
        coords = eng.coroot_coords_from_labels(diff)
        return coords is not None and all(x >= 0 for x in coords)

    start = (0,) * n
    seen = {start: lam_l}
    frontier = [start]
    while frontier:
        off = frontier.pop()
        ell = seen[off]
        for i in range(n):
            for sgn in (1, -1):
                noff = tuple(off[j] + sgn * int(j == i) for j in range(n))
                if noff in seen or any(x < 0 for x in noff):
                    continue
                nell = tuple(
                    ell[j] - sgn * eng.cartan[i][j] for j in range(n)
                )
                if in_support(nell):
                    seen[noff] = nell
                    frontier.append(noff)
    return seen


def _dominant_support_fast(datum: BasedRootDatum, lam: Vector) -> dict:
    """Candidate dominant support weights of V_lam, as offset -> labels.

    Closes {lam} under subtraction of positive coroots, keeping dominant
    results: covers in the dominance order on dominant weights of a coset
    differ by a positive coroot, so this reaches the whole dominant
    support.  The caller cross-checks the total dimension against the
    product formula and falls back to the exhaustive support walk if the
    closure ever came up short.
    """
    eng = _engine(datum)
    n = eng.n
    lam_l = dynkin_labels(datum, lam)
    start = (0,) * n
    seen = {start: lam_l}
    frontier = [(start, lam_l)]
    steps = list(zip(eng.pos_coords, eng.pos_labels))
    while frontier:
        off, ell = frontier.pop()
        for bc, bl in steps:
            noff = tuple(off[k] + bc[k] for k in range(n))
            if noff in seen:
                continue
            nell = tuple(ell[k] - bl[k] for k in range(n))
            if any(x < 0 for x in nell):
                continue
            seen[noff] = nell
            frontier.append((noff, nell))
    return seen


def _dominant_support_exhaustive(datum: BasedRootDatum, lam: Vector) -> dict:
    support = _support_offsets(datum, lam)
    return {off: ell for off, ell in support.items() if all(x >= 0 for x in ell)}


@lru_cache(maxsize=512)
def irreducible_character(datum: BasedRootDatum, lam: Vector) -> Character:
    """Weight multiplicities of the dual-group irreducible with highest
    weight lam, by the standard recursive multiplicity formula."""
    if not is_dominant(datum, lam):
        raise NotDominant(f"{lam} is not dominant")
    if datum.semisimple_rank == 0:
        return Character.from_dominant(datum, {lam: 1})
    result = _freudenthal(datum, lam, _dominant_support_fast(datum, lam))
    total = sum(
        m * weyl_orbit_size(datum, v) for v, m in result.items()
    )
    if total != weyl_dimension(datum, lam):
        # the fast dominant walk missed a weight; redo exhaustively
        result = _freudenthal(datum, lam, _dominant_support_exhaustive(datum, lam))
    return Character.from_dominant(datum, result)


def _freudenthal(datum: BasedRootDatum, lam: Vector, dominant_offsets: dict) -> dict:
    eng = _engine(datum)
    n = eng.n
    dominants = sorted(dominant_offsets.items(), key=lambda t: (sum(t[0]), t[0]))
    lam_l = dynkin_labels(datum, lam)
    mult_by_labels: dict[Vector, int] = {}
    result: dict[Vector, int] = {}
    for off, ell in dominants:
        if not any(off):
            mult_by_labels[ell] = 1
            result[lam] = 1
            continue
        htdiff = sum(off)
        num = 0
        for b in range(len(eng.pos_coroots)):
            hb = eng.pos_height[b]
            bl = eng.pos_labels[b]
            k = 1
            while k * hb <= htdiff:
                up = tuple(ell[j] + k * bl[j] for j in range(n))
                m = mult_by_labels.get(eng.dominantize_labels(up), 0)
                if m:
                    num += m * eng.form(up, b)
                k += 1
        denom_ell = tuple(lam_l[j] + ell[j] + 2 for j in range(n))
        denom = eng.form_coords(denom_ell, off)
        if denom <= 0:
            raise ArithmeticError("non-positive Freudenthal denominator")
        if (2 * num) % denom:
            raise ArithmeticError("non-integral multiplicity")
        m = (2 * num) // denom
        if m:
            mult_by_labels[ell] = m
            ambient = lam
            for i in range(n):
                ambient = vec_sub(ambient, vec_scale(off[i], datum.simple_coroots[i]))
            result[ambient] = m
    return result


def weyl_dimension(datum: BasedRootDatum, lam: Vector) -> int:
    """Dimension of the dual-group irreducible with highest weight lam,
    by the product formula over positive coroots."""
    if not is_dominant(datum, lam):
        raise NotDominant(f"{lam} is not dominant")
    if datum.semisimple_rank == 0:
        return 1
    eng = _engine(datum)
    ell = dynkin_labels(datum, lam)
    one = (1,) * eng.n
    num = den = 1
    for b in range(len(eng.pos_coroots)):
        num *= eng.form(tuple(x + 1 for x in ell), b)
        den *= eng.form(one, b)
    if num % den:
        raise ArithmeticError("dimension formula did not divide")
    return num // den


def kostant_multiplicity(
    datum: BasedRootDatum, lam: Vector, nu: Vector, height_bound: int = 80
) -> int:
    """Brute-force oracle: alternating Weyl sum over the exhaustive
    partition count of lam - nu into positive coroots.  Independent of
    the recursive engine; only feasible at small rank."""
    if datum.semisimple_rank > 4:
        raise BoundExceeded("oracle restricted to semisimple rank <= 4")
    if not is_dominant(datum, lam):
        raise NotDominant(f"{lam} is not dominant")
    diff = coroot_coordinates(datum, vec_sub(lam, nu))
    if diff is None or any(c.denominator != 1 for c in diff):
        return 0
    if sum(diff) > height_bound:
        raise BoundExceeded("height of lam - nu exceeds the oracle bound")
    eng = _engine(datum)
    pos = eng.pos_coords  # coordinate vectors of positive coroots
    memo = eng.partition_memo

    def partitions(target: Vector, idx: int) -> int:
        if all(x == 0 for x in target):
            return 1
        if idx == len(pos):
            return 0
        key = (target, idx)
        hit = memo.get(key)
        if hit is not None:
            return hit
        beta = pos[idx]
        total = 0
        k = 0
        cur = target
        while all(x >= 0 for x in cur):
            total += partitions(cur, idx + 1)
            k += 1
            cur = tuple(x - y for x, y in zip(target, vec_scale(k, beta)))
        memo[key] = total
        return total

    two_rho = two_rho_coroots(datum)
    total = 0
    for w, sign in weyl_elements(datum).items():
        shifted = vec_add(
            w.apply(lam),
            tuple((a - b) // 2 for a, b in zip(w.apply(two_rho), two_rho)),
        )
        coords = coroot_coordinates(datum, vec_sub(shifted, nu))
        if coords is None or any(c.denominator != 1 or c < 0 for c in coords):
            continue
        total += sign * partitions(tuple(int(c) for c in coords), 0)
    return total


@dataclass(frozen=True)
class NegativeWitness:
    """Weight (and degree, when graded) where a nonnegative decomposition
    into irreducible characters fails."""

    weight: Vector
    multiplicity: int
    degree: int | None = None


def _height_fn(datum: BasedRootDatum):
    two_rho = two_rho_roots(datum)
    return lambda v: dot(two_rho, v)


def decompose_weight_map(datum: BasedRootDatum, weights: dict):
    """Greedy highest-weight subtraction on a full weight map.

    Returns a dict {dominant weight: multiplicity} or a NegativeWitness.
    Candidates are taken in decreasing height (pairing against the sum of
    positive roots), ties broken lexicographically; correctness does not
    depend on the tie order, determinism does.
    """
    remaining = {k: v for k, v in weights.items() if v}
    ht = _height_fn(datum)
    out: dict[Vector, int] = {}
    while remaining:
        top = max(remaining, key=lambda v: (ht(v), v))
        m = remaining[top]
        if not is_dominant(datum, top) or m < 0:
            return NegativeWitness(weight=top, multiplicity=m)
        out[top] = m
        for v, mv in irreducible_character(datum, top).expand().items():
            nv = remaining.get(v, 0) - m * mv
            if nv:
                remaining[v] = nv
            else:
                remaining.pop(v, None)
    return out


def decompose_character(datum: BasedRootDatum, char):
    """Decompose a Character (or a GradedCharacter, per degree) into an
    N-multiset of irreducible characters, or report a NegativeWitness."""
    if isinstance(char, GradedCharacter):
        out: dict[tuple[Vector, int], int] = {}
        for z in char.degrees():
            piece = decompose_slice(datum, char.degree_slice(z))
            if isinstance(piece, NegativeWitness):
                return NegativeWitness(piece.weight, piece.multiplicity, z)
            for v, m in piece.items():
                out[(v, z)] = m
        return out
    if isinstance(char, Character):
        full = char.expand()
    else:
        full = dict(char)
        Character.from_weight_map(datum, full)  # raises NotWeylInvariant
    return decompose_weight_map(datum, full)


def decompose_slice(datum: BasedRootDatum, weights: dict):
    Character.from_weight_map(datum, weights)  # Weyl-invariance gate
    return decompose_weight_map(datum, weights)


def tensor_decompose(datum: BasedRootDatum, lam: Vector, mu: Vector) -> dict:
    """Multiset of dominant weights N with char(V_lam) * char(V_mu) =
    sum N(nu) char(V_nu), by greedy highest-weight subtraction."""
    for v in (lam, mu):
        if not is_dominant(datum, v):
            raise NotDominant(f"{v} is not dominant")
    a = irreducible_character(datum, lam).expand()
    b = irreducible_character(datum, mu).expand()
    if len(a) > len(b):
        a, b = b, a
    product: dict[Vector, int] = {}
    for v1, m1 in a.items():
        for v2, m2 in b.items():
            key = vec_add(v1, v2)
            product[key] = product.get(key, 0) + m1 * m2
    out = decompose_weight_map(datum, product)
    if isinstance(out, NegativeWitness):
        raise ArithmeticError(f"tensor product decomposition went negative: {out}")
    return out
