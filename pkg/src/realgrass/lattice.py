"""Exact integer-lattice linear algebra.

Everything here is arbitrary-precision integer arithmetic; no floats.
Vectors are tuples of ints.  Matrices act on column vectors, so composition
of lattice maps is matrix multiplication.  Sublattices are stored with a
Hermite-normal-form basis, which makes structural equality canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvolution, RankMismatch

Vector = tuple[int, ...]


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def vec_scale(c: int, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def dot(a: Vector, b: Vector) -> int:
    return sum(x * y for x, y in zip(a, b, strict=True))


def is_zero(a: Vector) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; `entries` is a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(tuple((0,) * cols for _ in range(rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.entries)) if other.entries else []
        return IntMatrix(
            tuple(tuple(dot(r, c) for c in ot) for r in self.entries)
        )

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(dot(r, v) for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def add(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries, strict=True)))

    def sub(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(vec_sub(a, b) for a, b in zip(self.entries, other.entries, strict=True)))

    def neg(self) -> "IntMatrix":
        return IntMatrix(tuple(vec_neg(r) for r in self.entries))

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.rows) and self.rows == self.cols

    def det(self) -> int:
        """Fraction-free Bareiss determinant."""
        n = self.rows
        if n != self.cols:
            raise ValueError("det of non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1


def mat_inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix (exact, stays integral)."""
    n = m.rows
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    inv = []
    for i in range(n):
        row = a[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        inv.append(tuple(int(x) for x in row))
    return IntMatrix(tuple(inv))


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ m @ V = D, U and V unimodular, and D
    diagonal with each diagonal entry dividing the next.

    All eliminations are 2x2 unimodular transforms: a plain shear when the
    pivot divides the target, an extended-gcd combine otherwise.  Combines
    strictly shrink the pivot, so the clear/reclear alternation terminates
    without entry blowup.
    """
    nr, nc = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_shear(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_shear(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def row_combine(t, i):
        # rows (t, i): make a[t][t] = gcd, a[i][t] = 0
        p, b = a[t][t], a[i][t]
        if p != 0 and b % p == 0:
            row_shear(i, t, b // p)
            return
        s, tt, d = _xgcd(p, b)
        new_t = [s * x + tt * y for x, y in zip(a[t], a[i])]
        new_i = [(p // d) * y - (b // d) * x for x, y in zip(a[t], a[i])]
        a[t], a[i] = new_t, new_i
        new_t = [s * x + tt * y for x, y in zip(u[t], u[i])]
        new_i = [(p // d) * y - (b // d) * x for x, y in zip(u[t], u[i])]
        u[t], u[i] = new_t, new_i

    def col_combine(t, j):
        # cols (t, j): make a[t][t] = gcd, a[t][j] = 0
        p, b = a[t][t], a[t][j]
        if p != 0 and b % p == 0:
            col_shear(j, t, b // p)
            return
        s, tt, d = _xgcd(p, b)
        for r in (a, v):
            for row in r:
                x, y = row[t], row[j]
                row[t] = s * x + tt * y
                row[j] = (p // d) * y - (b // d) * x

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            swap_cols(t, best[1])
        while True:
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    row_combine(t, i)
            if all(a[t][j] == 0 for j in range(t + 1, nc)):
                break
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    col_combine(t, j)
            if all(a[i][t] == 0 for i in range(t + 1, nr)):
                break
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    # sort zero diagonal entries to the end
    rank = min(nr, nc)
    for i in range(rank):
        if a[i][i] == 0:
            for j in range(i + 1, rank):
                if a[j][j] != 0:
                    swap_rows(i, j)
                    swap_cols(i, j)
                    break

    # enforce the divisibility chain with diag(a, b) -> diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if dj != 0 and (di == 0 or dj % di != 0):
                if di == 0:
                    swap_rows(i, i + 1)
                    swap_cols(i, i + 1)
                    changed = True
                    continue
                row_shear(i, i + 1, -1)      # row_i += row_{i+1}: picks up dj
                col_combine(i, i + 1)        # a[i][i] = gcd, clears a[i][i+1]
                q = a[i + 1][i] // a[i][i]   # gcd divides the leftover below
                row_shear(i + 1, i, q)
                if a[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True

    U = IntMatrix.from_rows(u)
    D = IntMatrix.from_rows(a)
    V = IntMatrix.from_rows(v)
    return U, D, V


def hermite_row_basis(vectors, width: int | None = None) -> tuple[Vector, ...]:
    """Canonical (row-style Hermite normal form) basis of the integer row
    span of `vectors`.  Pivots are positive, entries above a pivot are
    reduced into [0, pivot), and zero rows are dropped."""
    rows = [list(v) for v in vectors]
    if width is None:
        if not rows:
            raise ValueError("width required for empty generator list")
        width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ValueError("ragged generators")
    pending = [r for r in rows if any(r)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(width):
        live = [r for r in pending if r[col] != 0]
        rest = [r for r in pending if r[col] == 0]
        if not live:
            continue
        # fold all rows with a nonzero entry in this column into one, using
        # the determinant-1 transform [[s, t], [-b/d, a/d]] so the row span
        # is preserved exactly
        g = live[0]
        for r in live[1:]:
            a, b = g[col], r[col]
            s, t, d = _xgcd(a, b)
            new_g = [s * x + t * y for x, y in zip(g, r)]
            new_r = [(a // d) * y - (b // d) * x for x, y in zip(g, r)]
            g = new_g
            if any(new_r):
                rest.append(new_r)
        if g[col] < 0:
            g = [-x for x in g]
        basis.append(g)
        pivots.append(col)
        pending = rest
    # reduce entries above each pivot into [0, pivot)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            c = pivots[j]
            q = basis[i][c] // basis[j][c]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[j])]
    return tuple(tuple(r) for r in basis)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(s, t, d) with s*a + t*b = d = gcd(a, b) > 0."""
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return s0, t0, r0


@dataclass(frozen=True)
class Sublattice:
    """Saturable integer sublattice of Z^ambient_rank with canonical basis."""

    ambient_rank: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient_rank:
                raise RankMismatch("basis vector of wrong length")

    @staticmethod
    def from_generators(ambient_rank: int, gens) -> "Sublattice":
        basis = hermite_row_basis(gens, width=ambient_rank)
        return Sublattice(ambient_rank, basis)

    @staticmethod
    def full(ambient_rank: int) -> "Sublattice":
        return Sublattice.from_generators(
            ambient_rank, [tuple(int(i == j) for j in range(ambient_rank)) for i in range(ambient_rank)]
        )

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coords(self, v: Vector) -> Vector | None:
        """Integer coordinates of v in the basis, or None if v is outside."""
        if len(v) != self.ambient_rank:
            raise RankMismatch("vector of wrong length")
        residual = list(v)
        coeffs = []
        for b in self.basis:
            p = next((i for i, x in enumerate(b) if x != 0))
            if residual[p] % b[p] != 0:
                return None
            c = residual[p] // b[p]
            residual = [x - c * y for x, y in zip(residual, b)]
            coeffs.append(c)
        if any(residual):
            return None
        return tuple(coeffs)

    def contains(self, v: Vector) -> bool:
        return self.coords(v) is not None

    def from_coords(self, c: Vector) -> Vector:
        out = (0,) * self.ambient_rank
        for x, b in zip(c, self.basis, strict=True):
            out = vec_add(out, vec_scale(x, b))
        return out

    def intersection(self, other: "Sublattice") -> "Sublattice":
        if self.ambient_rank != other.ambient_rank:
            raise RankMismatch("ambient ranks differ")
        if not self.basis or not other.basis:
            return Sublattice(self.ambient_rank, ())
        stacked = IntMatrix.from_rows(list(self.basis) + [vec_neg(b) for b in other.basis])
        ker = left_kernel_basis(stacked)
        ra = len(self.basis)
        gens = []
        for z in ker:
            v = (0,) * self.ambient_rank
            for c, b in zip(z[:ra], self.basis):
                v = vec_add(v, vec_scale(c, b))
            gens.append(v)
        return Sublattice.from_generators(self.ambient_rank, gens)


def left_kernel_basis(m: IntMatrix) -> tuple[Vector, ...]:
    """Basis of the saturated lattice {x : x @ m = 0} (x a row vector)."""
    U, D, _ = smith_normal_form(m)
    out = []
    for i in range(m.rows):
        d = D.entries[i][i] if i < min(D.rows, D.cols) else 0
        if d == 0:
            out.append(U.entries[i])
    return hermite_row_basis(out, width=m.rows) if out else ()


def kernel_basis(m: IntMatrix) -> tuple[Vector, ...]:
    """Basis of the saturated lattice {v : m @ v = 0} (column vectors)."""
    return left_kernel_basis(m.transpose())


def fixed_sublattice(inv: IntMatrix) -> Sublattice:
    """Fixed lattice of an involution: the saturated kernel of inv - id."""
    n = inv.rows
    if inv.cols != n or (inv @ inv) != IntMatrix.identity(n):
        raise NotInvolution("matrix does not square to the identity")
    diff = inv.sub(IntMatrix.identity(n))
    return Sublattice(n, kernel_basis(diff))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant-factor presentation of a finitely generated abelian group."""

    invariant_factors: tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self):
        for i, d in enumerate(self.invariant_factors):
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if i and self.invariant_factors[i] % self.invariant_factors[i - 1] != 0:
                raise ValueError("divisibility chain violated")

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def quotient(ambient_rank: int, sub: Sublattice) -> FiniteAbelianGroup:
    """Z^ambient_rank modulo the sublattice, via Smith normal form."""
    if sub.ambient_rank != ambient_rank:
        raise RankMismatch("sublattice lives in a different ambient lattice")
    if not sub.basis:
        return FiniteAbelianGroup((), ambient_rank)
    _, D, _ = smith_normal_form(IntMatrix.from_rows(sub.basis))
    diag = [D.entries[i][i] for i in range(min(D.rows, D.cols))]
    nonzero = [d for d in diag if d != 0]
    factors = tuple(d for d in nonzero if d > 1)
    return FiniteAbelianGroup(factors, ambient_rank - len(nonzero))


def quotient_of_sublattices(outer: Sublattice, inner: Sublattice) -> FiniteAbelianGroup:
    """outer/inner for nested sublattices of the same ambient lattice."""
    coords = []
    for b in inner.basis:
        c = outer.coords(b)
        if c is None:
            raise RankMismatch("inner lattice is not contained in outer lattice")
        coords.append(c)
    return quotient(outer.rank, Sublattice.from_generators(outer.rank, coords))


def quotient_representatives(ambient_rank: int, sub: Sublattice) -> list[Vector]:
    """Coset representatives of Z^ambient_rank / sub (finite quotients only)."""
    q = quotient(ambient_rank, sub)
    if q.free_rank:
        raise RankMismatch("quotient is infinite")
    if not sub.basis:
        return [(0,) * ambient_rank] if ambient_rank == 0 else []
    _, D, V = smith_normal_form(IntMatrix.from_rows(sub.basis))
    vinv = mat_inverse_unimodular(V)
    diag = [D.entries[i][i] for i in range(min(D.rows, D.cols))]
    reps: list[Vector] = [(0,) * ambient_rank]
    for i, d in enumerate(diag):
        # x = y @ V^{-1}; coset coordinate i ranges over 0..d-1
        reps = [
            vec_add(r, vec_scale(c, vinv.entries[i]))
            for r in reps
            for c in range(d)
        ]
    return reps
