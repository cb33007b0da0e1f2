"""Satake diagrams and classification expectations for the real forms of
the simple complex Lie algebras.

Painted nodes span the anisotropic Levi factor; arrows give the diagram
involution on the unpainted nodes.  Node indices are 0-based here and in
:mod:`realform`; the catalog file uses 1-based Bourbaki numbering.  The
expectation columns (real rank, associated subgroup type, quasi-split /
split flags, non-reduced flag) come from the classical tables and are the
independent yardstick the computed pipeline is diffed against.
"""

from __future__ import annotations

from dataclasses import dataclass


def canonical_label(family: str, rank: int) -> str:
    """Canonical name of an irreducible type, collapsing the low-rank
    coincidences the classifier also collapses (C1=B1=A1, C2=B2, D3=A3)."""
    if rank == 1:
        return "A1"
    if family in ("B", "C") and rank == 2:
        return "B2"
    if family == "D" and rank == 2:
        return "A1+A1"
    if family == "D" and rank == 3:
        return "A3"
    return f"{family}{rank}"


@dataclass(frozen=True)
class FamilySpec:
    """One real form: Satake diagram plus expected classification data."""

    label: str
    cartan_class: str  # AI, AII, AIII, BI, CI, CII, DI, DIII, EI..EIX, FI, FII, G
    g_family: str
    g_rank: int
    painted: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]
    real_rank: int
    h_type: str
    quasi_split: bool
    split: bool
    nonreduced: bool

    @property
    def g_type(self) -> str:
        """Raw datum-defining type (the canonical label may differ at the
        low-rank coincidences, e.g. the C2 datum classifies as B2)."""
        return f"{self.g_family}{self.g_rank}"


def _spec(label, cls, fam, rank, painted, arrows, rr, h, qs, split, nonred):
    return FamilySpec(
        label, cls, fam, rank, tuple(sorted(painted)),
        tuple(sorted(tuple(sorted(a)) for a in arrows)),
        rr, h, qs, split, nonred,
    )


def sl_real(n: int) -> FamilySpec:
    """sl(n,R), split form of A_{n-1}."""
    return _spec(f"sl({n},R)", "AI", "A", n - 1, [], [], n - 1,
                 canonical_label("A", n - 1), True, True, False)


def su_star(two_n: int) -> FamilySpec:
    """su*(2n) = sl(n,H); A_{2n-1} with alternate nodes painted."""
    n = two_n // 2
    if two_n % 2 or n < 2:
        raise ValueError("su* needs an even argument >= 4")
    painted = list(range(0, 2 * n - 1, 2))
    return _spec(f"su*({two_n})", "AII", "A", 2 * n - 1, painted, [], n - 1,
                 canonical_label("A", n - 1), False, False, False)


def su(p: int, q: int) -> FamilySpec:
    """su(p,q), p <= q; arrows fold the diagram, the middle chain of the
    anisotropic part is painted."""
    if not 1 <= p <= q:
        raise ValueError("need 1 <= p <= q")
    n = p + q
    last = p - 1 if p == q else p
    arrows = [(j, n - 2 - j) for j in range(last) if j != n - 2 - j]
    painted = list(range(p, q - 1))
    return _spec(
        f"su({p},{q})", "AIII", "A", n - 1, painted, arrows, p,
        canonical_label("C", p), q - p <= 1, p == q == 1, (p + q) % 2 == 1,
    )


def so_odd(p: int, q: int) -> FamilySpec:
    """so(p,q) with p+q odd, p < q; tail of the B diagram painted."""
    if p >= q or (p + q) % 2 == 0 or p < 1:
        raise ValueError("need p < q, p+q odd")
    n = (p + q - 1) // 2
    painted = list(range(p, n))
    return _spec(
        f"so({p},{q})", "BI", "B", n, painted, [], p,
        canonical_label("C", p), p == n, p == n, False,
    )


def sp_real(n: int) -> FamilySpec:
    """sp(n,R), split form of C_n."""
    return _spec(f"sp({n},R)", "CI", "C", n, [], [], n,
                 canonical_label("B", n), True, True, False)


def sp(p: int, q: int) -> FamilySpec:
    """sp(p,q), p <= q; alternate painting, tail painted when p < q."""
    if not 1 <= p <= q:
        raise ValueError("need 1 <= p <= q")
    n = p + q
    if p == q:
        painted = list(range(0, n - 1, 2))
    else:
        painted = list(range(0, 2 * p - 1, 2)) + list(range(2 * p, n))
    return _spec(
        f"sp({p},{q})", "CII", "C", n, painted, [], p,
        canonical_label("C", p), False, False, False,
    )


def so_even(p: int, q: int) -> FamilySpec:
    """so(p,q) with p+q even, p <= q, complexification D_n (n >= 3)."""
    if p > q or (p + q) % 2 or p < 1:
        raise ValueError("need p <= q, p+q even")
    n = (p + q) // 2
    if n < 3:
        raise ValueError("complexification is not simple below D3")
    if p == n:
        painted, arrows = [], []
    elif p == n - 1:
        painted, arrows = [], [(n - 2, n - 1)]
    else:
        painted, arrows = list(range(p, n)), []
    h = canonical_label("D", n) if p == n else canonical_label("B", p)
    return _spec(
        f"so({p},{q})", "DI", "D", n, painted, arrows, p,
        h, p >= n - 1, p == n, False,
    )


def so_star(two_n: int) -> FamilySpec:
    """so*(2n), D_n with alternate painting (n >= 3)."""
    n = two_n // 2
    if two_n % 2 or n < 3:
        raise ValueError("so* needs an even argument >= 6")
    if n % 2 == 0:
        painted, arrows = list(range(0, n - 1, 2)), []
        rr = n // 2
    else:
        painted, arrows = list(range(0, n - 2, 2)), [(n - 2, n - 1)]
        rr = (n - 1) // 2
    return _spec(f"so*({two_n})", "DIII", "D", n, painted, arrows, rr,
                 canonical_label("C", n // 2), False, False, False)


def _exceptional(label, cls, fam, rank, painted_1based, arrows_1based, rr, h,
                 qs=False, split=False):
    return _spec(
        label, cls, fam, rank,
        [i - 1 for i in painted_1based],
        [(a - 1, b - 1) for a, b in arrows_1based],
        rr, h, qs, split, False,
    )


EXCEPTIONAL_FORMS = (
    _exceptional("e6(6)", "EI", "E", 6, [], [], 6, "E6", True, True),
    _exceptional("e6(2)", "EII", "E", 6, [], [(1, 6), (3, 5)], 4, "F4", True),
    _exceptional("e6(-14)", "EIII", "E", 6, [3, 4, 5], [(1, 6)], 2, "B2"),
    _exceptional("e6(-26)", "EIV", "E", 6, [2, 3, 4, 5], [], 2, "A2"),
    _exceptional("e7(7)", "EV", "E", 7, [], [], 7, "E7", True, True),
    _exceptional("e7(-5)", "EVI", "E", 7, [2, 5, 7], [], 4, "F4"),
    _exceptional("e7(-25)", "EVII", "E", 7, [2, 3, 4, 5], [], 3, "C3"),
    _exceptional("e8(8)", "EVIII", "E", 8, [], [], 8, "E8", True, True),
    _exceptional("e8(-24)", "EIX", "E", 8, [2, 3, 4, 5], [], 4, "F4"),
    _exceptional("f4(4)", "FI", "F", 4, [], [], 4, "F4", True, True),
    _exceptional("f4(-20)", "FII", "F", 4, [1, 2, 3], [], 1, "A1"),
    _exceptional("g2(2)", "G", "G", 2, [], [], 2, "G2", True, True),
)


def all_family_specs(max_rank: int = 8) -> list[FamilySpec]:
    """Every catalog form whose family parameter n is at most max_rank."""
    out: list[FamilySpec] = []
    for n in range(2, max_rank + 1):
        out.append(sl_real(n))
    for n in range(2, max_rank + 1):
        out.append(su_star(2 * n))
    for total in range(2, max_rank + 1):
        for p in range(1, total // 2 + 1):
            out.append(su(p, total - p))
    for n in range(2, max_rank + 1):
        for p in range(1, n + 1):
            out.append(so_odd(p, 2 * n + 1 - p))
    for n in range(2, max_rank + 1):
        out.append(sp_real(n))
    for total in range(2, max_rank + 1):
        for p in range(1, total // 2 + 1):
            out.append(sp(p, total - p))
    for n in range(3, max_rank + 1):
        for p in range(1, n + 1):
            out.append(so_even(p, 2 * n - p))
    for n in range(3, max_rank + 1):
        out.append(so_star(2 * n))
    out.extend(e for e in EXCEPTIONAL_FORMS if e.g_rank <= max_rank)
    return out
