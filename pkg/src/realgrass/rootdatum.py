"""Based root data: lattices in duality, root generation, Cartan
classification, Weyl machinery, dominance order.

Conventions used throughout the package:

* A :class:`BasedRootDatum` stores simple roots in the "character-side"
  lattice and simple coroots in the "cocharacter-side" lattice, both
  Z^rank, with the standard dot product as the perfect pairing and the
  bijection given by list position.
* The Cartan matrix is ``C[i][j] = <root_j, coroot_i>``.  Node numbering
  of the standard families follows Bourbaki; for type B the short simple
  root is the last node, so ``C[n-1][n-2] = -2``, and for type C the last
  node is long, so ``C[n-2][n-1] = -2``.
* ``classify`` names each irreducible component canonically.  Rank-one
  components are always ``A1``; a rank-two double-bond component is
  always ``B2`` (the abstract B2 and C2 matrices differ only by node
  order); a rank-three simply-laced chain is ``A3``.  B versus C at rank
  >= 3 is decided by which side of the double bond holds the -2 entry,
  i.e. by arrow direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import BoundExceeded, NonFiniteType, NotFiniteType
from .lattice import IntMatrix, Vector, dot, vec_add, vec_scale, vec_sub

_FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
    "BC": lambda n: n * (n + 1),
}

_WEYL_ORDER = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "BC": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass(frozen=True)
class CartanType:
    """Multiset of irreducible families plus a torus rank."""

    components: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    def __post_init__(self):
        for fam, rank in self.components:
            if fam not in _FAMILIES:
                raise ValueError(f"unknown family {fam}")
            if fam == "E" and rank not in (6, 7, 8):
                raise ValueError("E family has ranks 6..8")
            if fam == "F" and rank != 4:
                raise ValueError("F family has rank 4")
            if fam == "G" and rank != 2:
                raise ValueError("G family has rank 2")

    @property
    def semisimple_rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.torus_rank

    def positive_root_count(self) -> int:
        return sum(_POSITIVE_ROOT_COUNT[f](r) for f, r in self.components)

    def weyl_order(self) -> int:
        out = 1
        for f, r in self.components:
            out *= _WEYL_ORDER[f](r)
        return out

    def label(self) -> str:
        parts = [f"{f}{r}" for f, r in self.components]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "+".join(parts) if parts else "T0"

    def __str__(self):
        return self.label()


def _check_cartan_shape(c: IntMatrix):
    n = c.rows
    if c.cols != n:
        raise NotFiniteType("Cartan matrix must be square")
    for i in range(n):
        if c.entries[i][i] != 2:
            raise NotFiniteType("diagonal entries must equal 2")
        for j in range(n):
            if i != j:
                if c.entries[i][j] > 0:
                    raise NotFiniteType("off-diagonal entries must be <= 0")
                if (c.entries[i][j] == 0) != (c.entries[j][i] == 0):
                    raise NotFiniteType("zero pattern must be symmetric")


def classify_components(c: IntMatrix) -> list[tuple[str, int, tuple[int, ...]]]:
    """Decompose a finite-type Cartan matrix into irreducible components.

    Returns (family, rank, nodes) with nodes in the canonical Bourbaki
    order of that family.  Raises NotFiniteType otherwise.
    """
    _check_cartan_shape(c)
    n = c.rows
    adj = {i: [j for j in range(n) if j != i and c.entries[i][j] != 0] for i in range(n)}
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))

    out = []
    for comp in comps:
        out.append(_classify_irreducible(c, adj, comp))
    out.sort(key=lambda t: (t[0], t[1], t[2]))
    return out


def _bond(c: IntMatrix, i: int, j: int) -> int:
    return c.entries[i][j] * c.entries[j][i]


def _classify_irreducible(c, adj, comp) -> tuple[str, int, tuple[int, ...]]:
    k = len(comp)
    if k == 1:
        return ("A", 1, tuple(comp))
    edges = [(i, j) for i in comp for j in adj[i] if i < j and j in comp]
    if len(edges) != k - 1:
        raise NotFiniteType("component contains a cycle")
    degrees = {i: len([j for j in adj[i] if j in comp]) for i in comp}
    if any(d > 3 for d in degrees.values()):
        raise NotFiniteType("node of degree > 3")
    triple = [(i, j) for i, j in edges if _bond(c, i, j) == 3]
    double = [(i, j) for i, j in edges if _bond(c, i, j) == 2]
    if any(_bond(c, i, j) not in (1, 2, 3) for i, j in edges):
        raise NotFiniteType("bond multiplicity out of range")
    branch = [i for i in comp if degrees[i] == 3]

    if triple:
        if k != 2 or double:
            raise NotFiniteType("triple bond only occurs in G2")
        i, j = triple[0]
        # canonical order: short root first; <long, short_coroot> = -3
        first, second = (i, j) if c.entries[i][j] == -3 else (j, i)
        return ("G", 2, (first, second))

    if double:
        if len(double) > 1 or branch:
            raise NotFiniteType("double bond pattern is not of finite type")
        ends = [i for i in comp if degrees[i] == 1]
        path = _order_path(adj, comp, ends[0])
        if k == 2:
            i, j = path
            # canonical B2: short root last; C[i][j] = -2 means root j long
            if c.entries[i][j] == -2:
                path = [j, i]
            return ("B", 2, tuple(path))
        d_pos = next(
            p for p in range(k - 1) if _bond(c, path[p], path[p + 1]) == 2
        )
        if d_pos == k - 2:
            e, f = path[-1], path[-2]
            # C[f][e] = <root_e, coroot_f>; -2 there means the end root is long
            if c.entries[f][e] == -2:
                return ("C", k, tuple(path))
            return ("B", k, tuple(path))
        if d_pos == 0:
            e, f = path[0], path[1]
            rev = list(reversed(path))
            if c.entries[f][e] == -2:
                return ("C", k, tuple(rev))
            return ("B", k, tuple(rev))
        if k == 4 and d_pos == 1:
            # canonical F4 order puts the long pair first; C[b][a] = -2
            # says root a is the long one
            if c.entries[path[2]][path[1]] == -2:
                return ("F", 4, tuple(path))
            return ("F", 4, tuple(reversed(path)))
        raise NotFiniteType("interior double bond is not of finite type")

    # simply laced
    if not branch:
        path = _order_path(adj, comp, min(i for i in comp if degrees[i] == 1))
        return ("A", k, tuple(path))
    if len(branch) > 1:
        raise NotFiniteType("more than one branch node")
    b = branch[0]
    legs = []
    for start in [j for j in adj[b] if j in comp]:
        leg = [start]
        prev = b
        while True:
            nxt = [j for j in adj[leg[-1]] if j in comp and j != prev]
            if not nxt:
                break
            prev = leg[-1]
            leg.append(nxt[0])
        legs.append(leg)
    legs.sort(key=len)
    (l1, l2, l3) = (len(legs[0]), len(legs[1]), len(legs[2]))
    if l1 == 1 and l2 == 1:
        # D_k: canonical order walks the long leg into the fork
        long_leg = legs[2]
        nodes = tuple(reversed(long_leg)) + (b,) + (legs[0][0], legs[1][0])
        return ("D", k, nodes)
    if l1 == 1 and l2 == 2 and l3 in (2, 3, 4):
        # E6, E7, E8 in Bourbaki order: chain with node 2 hanging off node 4
        chain = list(reversed(legs[1])) + [b] + legs[2]
        nodes = (chain[0], legs[0][0], chain[1], chain[2]) + tuple(chain[3:])
        return ("E", k, nodes)
    raise NotFiniteType("branch shape is not of finite type")


def _order_path(adj, comp, start):
    path = [start]
    prev = None
    while len(path) < len(comp):
        nxt = [j for j in adj[path[-1]] if j in comp and j != prev]
        if not nxt:
            raise NotFiniteType("disconnected path walk")
        prev = path[-1]
        path.append(nxt[0])
    return path


def classify(c: IntMatrix, torus_rank: int = 0) -> CartanType:
    """Cartan type of a finite-type Cartan matrix (possibly decomposable)."""
    comps = classify_components(c)
    return CartanType(tuple((f, r) for f, r, _ in comps), torus_rank)


@dataclass(frozen=True)
class BasedRootDatum:
    """Dual pair of lattices with simple roots and simple coroots in
    position-matched bijection; the pairing is the dot product."""

    rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("root/coroot lists differ in length")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank:
                raise ValueError("vector of wrong length")
        for i, (r, cr) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            if dot(r, cr) != 2:
                raise ValueError(f"<root_{i}, coroot_{i}> != 2")
        classify(self.cartan_matrix())  # raises NotFiniteType on bad input
        if self.semisimple_rank:
            from .lattice import smith_normal_form

            for vs in (self.simple_roots, self.simple_coroots):
                _, d, _ = smith_normal_form(IntMatrix.from_rows(vs))
                nonzero = sum(
                    1 for i in range(min(d.rows, d.cols)) if d.entries[i][i] != 0
                )
                if nonzero != self.semisimple_rank:
                    raise ValueError("simple vectors are linearly dependent")

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def cartan_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [
                [dot(rj, ci) for rj in self.simple_roots]
                for ci in self.simple_coroots
            ]
        )

    def cartan_type(self) -> CartanType:
        t = classify(self.cartan_matrix())
        return CartanType(t.components, self.rank - t.semisimple_rank)


def dual(datum: BasedRootDatum) -> BasedRootDatum:
    """Swap the two lattices and the two simple systems."""
    return BasedRootDatum(datum.rank, datum.simple_coroots, datum.simple_roots)


def levi_subdatum(datum: BasedRootDatum, nodes) -> BasedRootDatum:
    """Same lattices, simple systems restricted to the given node subset."""
    nodes = sorted(set(nodes))
    return BasedRootDatum(
        datum.rank,
        tuple(datum.simple_roots[i] for i in nodes),
        tuple(datum.simple_coroots[i] for i in nodes),
    )


def direct_sum(a: BasedRootDatum, b: BasedRootDatum) -> BasedRootDatum:
    za, zb = (0,) * a.rank, (0,) * b.rank
    roots = tuple(r + zb for r in a.simple_roots) + tuple(za + r for r in b.simple_roots)
    coroots = tuple(r + zb for r in a.simple_coroots) + tuple(za + r for r in b.simple_coroots)
    return BasedRootDatum(a.rank + b.rank, roots, coroots)


def torus_datum(rank: int) -> BasedRootDatum:
    return BasedRootDatum(rank, (), ())


_STANDARD_EDGES = {
    "A": lambda n: [(i, i + 1) for i in range(n - 1)],
    "B": lambda n: [(i, i + 1) for i in range(n - 1)],
    "C": lambda n: [(i, i + 1) for i in range(n - 1)],
    "D": lambda n: [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)],
    "E": lambda n: [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)],
    "F": lambda n: [(0, 1), (1, 2), (2, 3)],
    "G": lambda n: [(0, 1)],
}


def standard_cartan_matrix(family: str, rank: int) -> IntMatrix:
    """Cartan matrix of an irreducible family in Bourbaki numbering."""
    fam = family.upper()
    if fam == "A" and rank < 1 or fam != "A" and rank < 2:
        raise ValueError("rank too small")
    if fam == "D" and rank < 3:
        raise ValueError("type D starts at rank 3 here")
    if fam in ("B", "C") and rank < 2 or fam == "E" and rank not in (6, 7, 8):
        raise ValueError("bad rank")
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if fam == "D" and rank == 3:
        edges = [(0, 1), (0, 2)]
    else:
        edges = _STANDARD_EDGES[fam](rank)
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    # special bonds; remember C[i][j] = <root_j, coroot_i>, so the -2 sits
    # in the row of the short root's coroot
    if fam == "B":
        c[rank - 1][rank - 2] = -2
    elif fam == "C":
        c[rank - 2][rank - 1] = -2
    elif fam == "F":
        c[2][1] = -2
    elif fam == "G":
        c[0][1] = -3
    return IntMatrix.from_rows(c)


@lru_cache(maxsize=None)
def adjoint_datum(family: str, rank: int) -> BasedRootDatum:
    """Adjoint-group datum: the cocharacter lattice is the full coweight
    lattice, with the fundamental coweights as its standard basis."""
    c = standard_cartan_matrix(family, rank)
    roots = tuple(
        tuple(int(i == j) for j in range(rank)) for i in range(rank)
    )
    coroots = tuple(c.entries[i] for i in range(rank))
    return BasedRootDatum(rank, roots, coroots)


@lru_cache(maxsize=None)
def simply_connected_datum(family: str, rank: int) -> BasedRootDatum:
    """Simply-connected datum: the cocharacter lattice is the coroot
    lattice, with the simple coroots as its standard basis."""
    c = standard_cartan_matrix(family, rank)
    coroots = tuple(
        tuple(int(i == j) for j in range(rank)) for i in range(rank)
    )
    roots = tuple(tuple(c.entries[i][j] for i in range(rank)) for j in range(rank))
    return BasedRootDatum(rank, roots, coroots)


def datum_from_type(label: str, isogeny: str = "adjoint") -> BasedRootDatum:
    """Build a datum from a type label like ``A2``, ``B3+A1`` or ``A2+T1``."""
    builder = adjoint_datum if isogeny == "adjoint" else simply_connected_datum
    datum: BasedRootDatum | None = None
    for part in label.split("+"):
        part = part.strip()
        if part.upper().startswith("T"):
            piece = torus_datum(int(part[1:]))
        else:
            fam, rank = part[0], int(part[1:])
            piece = builder(fam, rank)
        datum = piece if datum is None else direct_sum(datum, piece)
    if datum is None:
        raise ValueError("empty type label")
    return datum


@dataclass(frozen=True)
class RootSystem:
    """Positive root/coroot pairs generated from a based root datum.

    ``coords[k]`` gives the expansion of ``roots[k]`` in the simple roots
    (equivalently of ``coroots[k]`` in the simple coroots -- reflections
    act identically on both coordinate vectors).
    """

    datum: BasedRootDatum
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    coords: tuple[Vector, ...]

    @property
    def count(self) -> int:
        return len(self.roots)

    def coroot_of(self, root: Vector) -> Vector:
        return self._root_to_coroot[root]

    def root_of(self, coroot: Vector) -> Vector:
        return self._coroot_to_root[coroot]

    @cached_property
    def _root_to_coroot(self):
        return dict(zip(self.roots, self.coroots))

    @cached_property
    def _coroot_to_root(self):
        return dict(zip(self.coroots, self.roots))

    def all_roots(self) -> list[Vector]:
        return list(self.roots) + [tuple(-x for x in r) for r in self.roots]

    def all_coroots(self) -> list[Vector]:
        return list(self.coroots) + [tuple(-x for x in r) for r in self.coroots]


_ROOT_CLOSURE_CAP = 2000


@lru_cache(maxsize=None)
def generate_roots(datum: BasedRootDatum) -> RootSystem:
    """Positive system by closure of the simple pairs under simple
    reflections.  Raises NonFiniteType if the closure exceeds the bound
    implied by the finite-type classification."""
    n = datum.semisimple_rank
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    triples = {
        (datum.simple_roots[i], datum.simple_coroots[i], basis[i]) for i in range(n)
    }
    frontier = list(triples)
    while frontier:
        root, coroot, coord = frontier.pop()
        for i in range(n):
            pr = dot(root, datum.simple_coroots[i])
            new_root = vec_sub(root, vec_scale(pr, datum.simple_roots[i]))
            new_coroot = vec_sub(
                coroot, vec_scale(dot(datum.simple_roots[i], coroot), datum.simple_coroots[i])
            )
            new_coord = tuple(
                c - pr * int(k == i) for k, c in enumerate(coord)
            )
            if all(x >= 0 for x in new_coord) and any(new_coord):
                t = (new_root, new_coroot, new_coord)
                if t not in triples:
                    triples.add(t)
                    frontier.append(t)
                    if len(triples) > _ROOT_CLOSURE_CAP:
                        raise NonFiniteType("root closure exceeded finite-type bound")
    ordered = sorted(triples, key=lambda t: (sum(t[2]), t[2]))
    expected = datum.cartan_type().positive_root_count()
    if len(ordered) != expected:
        raise NonFiniteType(
            f"closure produced {len(ordered)} positive roots, expected {expected}"
        )
    return RootSystem(
        datum,
        tuple(t[0] for t in ordered),
        tuple(t[1] for t in ordered),
        tuple(t[2] for t in ordered),
    )


@lru_cache(maxsize=None)
def two_rho_roots(datum: BasedRootDatum) -> Vector:
    """Sum of the positive roots (character side)."""
    out = (0,) * datum.rank
    for r in generate_roots(datum).roots:
        out = vec_add(out, r)
    return out


@lru_cache(maxsize=None)
def two_rho_coroots(datum: BasedRootDatum) -> Vector:
    """Sum of the positive coroots (cocharacter side)."""
    out = (0,) * datum.rank
    for r in generate_roots(datum).coroots:
        out = vec_add(out, r)
    return out


def coroot_coordinates(datum: BasedRootDatum, v: Vector) -> tuple[Fraction, ...] | None:
    """Rational coordinates of v in the simple-coroot basis, or None if v
    is outside their span."""
    n = datum.semisimple_rank
    if n == 0:
        return () if not any(v) else None
    cols = datum.simple_coroots
    rows = datum.rank
    aug = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(v[i])] for i in range(rows)]
    piv_rows = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_rows.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for row_idx, c in enumerate(piv_rows):
        sol[c] = aug[row_idx][n]
    return tuple(sol)


def dominance_leq(datum: BasedRootDatum, mu: Vector, lam: Vector) -> bool:
    """True iff lam - mu is a nonnegative integral combination of the
    positive coroots (equivalently of the simple coroots)."""
    diff = vec_sub(lam, mu)
    coords = coroot_coordinates(datum, diff)
    if coords is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coords)


def is_dominant(datum: BasedRootDatum, v: Vector) -> bool:
    return all(dot(r, v) >= 0 for r in datum.simple_roots)


def dynkin_labels(datum: BasedRootDatum, v: Vector) -> Vector:
    return tuple(dot(r, v) for r in datum.simple_roots)


def dominant_height(datum: BasedRootDatum, v: Vector) -> int:
    """Sum of the Dynkin labels; a height function on the dominant cone."""
    return sum(dynkin_labels(datum, v))


def reflection_matrix(datum: BasedRootDatum, i: int) -> IntMatrix:
    """Simple reflection acting on the cocharacter lattice."""
    n = datum.rank
    root, coroot = datum.simple_roots[i], datum.simple_coroots[i]
    return IntMatrix.from_rows(
        [
            [int(a == b) - coroot[a] * root[b] for b in range(n)]
            for a in range(n)
        ]
    )


def reflect(datum: BasedRootDatum, i: int, v: Vector) -> Vector:
    return vec_sub(v, vec_scale(dot(datum.simple_roots[i], v), datum.simple_coroots[i]))


def dominant_representative(datum: BasedRootDatum, v: Vector) -> tuple[Vector, IntMatrix]:
    """The unique dominant vector in the Weyl orbit of v, together with a
    matrix w such that w @ v is that representative."""
    w = IntMatrix.identity(datum.rank)
    cur = v
    while True:
        i = next(
            (k for k, r in enumerate(datum.simple_roots) if dot(r, cur) < 0), None
        )
        if i is None:
            return cur, w
        cur = reflect(datum, i, cur)
        w = reflection_matrix(datum, i) @ w


def longest_weyl_element(datum: BasedRootDatum) -> IntMatrix:
    """Matrix of the longest Weyl element on the cocharacter lattice."""
    if datum.semisimple_rank == 0:
        return IntMatrix.identity(datum.rank)
    v = two_rho_coroots(datum)
    _, w = dominant_representative(datum, tuple(-x for x in v))
    return w


def weyl_group_order(datum: BasedRootDatum) -> int:
    """Order of the Weyl group, by the product formula of the classified
    type.  (Explicit enumeration is kept separately as a small-rank test
    oracle; at large rank only the order is ever needed.)"""
    return datum.cartan_type().weyl_order()


def weyl_elements(datum: BasedRootDatum, max_order: int = 4000) -> dict[IntMatrix, int]:
    """All Weyl elements acting on the cocharacter lattice, mapped to
    their determinant sign.  Raises BoundExceeded past max_order."""
    gens = [reflection_matrix(datum, i) for i in range(datum.semisimple_rank)]
    ident = IntMatrix.identity(datum.rank)
    out = {ident: 1}
    frontier = [ident]
    while frontier:
        w = frontier.pop()
        for g in gens:
            nxt = g @ w
            if nxt not in out:
                out[nxt] = -out[w]
                frontier.append(nxt)
                if len(out) > max_order:
                    raise BoundExceeded("Weyl group larger than enumeration bound")
    return out


def weyl_orbit(datum: BasedRootDatum, v: Vector) -> set[Vector]:
    """Weyl orbit of a cocharacter vector."""
    pairs = list(zip(datum.simple_roots, datum.simple_coroots))
    seen = {v}
    frontier = [v]
    add = seen.add
    push = frontier.append
    while frontier:
        x = frontier.pop()
        for root, cor in pairs:
            c = sum(a * b for a, b in zip(root, x))
            if c == 0:
                continue
            y = tuple(a - c * b for a, b in zip(x, cor))
            if y not in seen:
                add(y)
                push(y)
    return seen


def weyl_orbit_size(datum: BasedRootDatum, dominant_v: Vector) -> int:
    """Orbit size of a dominant vector via the stabilizer product formula."""
    stab_nodes = [
        i for i, r in enumerate(datum.simple_roots) if dot(r, dominant_v) == 0
    ]
    stab = levi_subdatum(datum, stab_nodes)
    return weyl_group_order(datum) // weyl_group_order(stab)


def enumerate_dominant(datum: BasedRootDatum, max_height: int) -> list[Vector]:
    """All dominant cocharacters with Dynkin-label sum <= max_height.

    Requires the simple roots to span the dual lattice rationally (no
    torus directions), otherwise the set would be infinite.
    """
    n = datum.semisimple_rank
    if n != datum.rank:
        raise BoundExceeded("dominant cone is infinite in torus directions")
    if n == 0:
        return [()]
    out = []
    root_rows = [[Fraction(datum.simple_roots[i][j]) for j in range(n)] for i in range(n)]
    import copy

    def solve(labels):
        aug = [row[:] + [Fraction(labels[i])] for i, row in enumerate(copy.deepcopy(root_rows))]
        for c in range(n):
            piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
            if piv is None:
                return None
            aug[c], aug[piv] = aug[piv], aug[c]
            p = aug[c][c]
            aug[c] = [x / p for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        sol = [aug[i][n] for i in range(n)]
        if any(x.denominator != 1 for x in sol):
            return None
        return tuple(int(x) for x in sol)

    for total in range(max_height + 1):
        for labels in _compositions(total, n):
            v = solve(labels)
            if v is not None:
                out.append(v)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
