"""Graded Betti numbers of Stanley-Reisner rings through Hochster's formula."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bits import full, members, size, submasks
from .complex import SimplicialComplex, induced_subcomplex
from .errors import CapExceeded, ValidationError
from .homology import Q, Field, reduced_homology
from .ideals import MonomialIdeal, complex_of

BETTI_VERTEX_CAP = 12
POLYMATROID_VERTEX_CAP = 8

OF_QUOTIENT = "R/I"
OF_IDEAL = "I"


@dataclass(frozen=True)
class BettiTable:
    entries: dict = dc_field(hash=False)  # (i, j) -> beta_{i,j}, nonzero only
    convention: str = OF_QUOTIENT

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def row_degrees(self, i: int) -> list[int]:
        return sorted(j for (a, j) in self.entries if a == i)

    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def of_ideal(self) -> BettiTable:
        """Shift to the table of I: beta_{i,j}(I) = beta_{i+1,j}(R/I)."""
        if self.convention != OF_QUOTIENT:
            raise ValidationError("already an ideal table")
        return BettiTable(
            {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1}, OF_IDEAL
        )

    def to_json(self) -> dict:
        return {f"({i},{j})": v for (i, j), v in sorted(self.entries.items())}

    def macaulay_rows(self) -> str:
        """Macaulay2-style display: columns i, rows j - i."""
        if not self.entries:
            return "(zero table)"
        cols = range(0, self.max_index() + 1)
        shifts = sorted({j - i for i, j in self.entries})
        width = max(4, max(len(str(v)) for v in self.entries.values()) + 1)
        lines = ["      " + "".join(f"{i:>{width}}" for i in cols)]
        lines.append("total:" + "".join(f"{self.total(i):>{width}}" for i in cols))
        for k in range(shifts[0], shifts[-1] + 1):
            cells = "".join(
                f"{(self[(i, i + k)] or '.'):>{width}}" for i in cols
            )
            lines.append(f"{k:>5}:" + cells)
        return "\n".join(lines)


def graded_betti(
    c: SimplicialComplex, field: Field = Q, cap: int = BETTI_VERTEX_CAP
) -> BettiTable:
    """beta_{i,j}(R/I_c) = sum over |W| = j of dim H~_{j-i-1}(c_W).

    Runs over all 2^n vertex subsets; ``cap`` bounds n.
    """
    if c.n > cap:
        raise CapExceeded(
            f"Hochster sum over 2^{c.n} subsets exceeds cap {cap}; pass a larger cap to override"
        )
    if c.is_void:
        raise ValidationError("the void complex has the unit ideal")
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for w in submasks(full(c.n)):
        if w == 0:
            continue
        j = size(w)
        prof = reduced_homology(induced_subcomplex(c, w), field)
        for k, d in prof.dims:
            if d:
                i = j - k - 1
                entries[(i, j)] = entries.get((i, j), 0) + d
    return BettiTable(entries)


def projective_dimension(table: BettiTable) -> int:
    if table.convention != OF_QUOTIENT:
        raise ValidationError("projective dimension expects the quotient table")
    return table.max_index()


def is_level(c: SimplicialComplex, field: Field = Q) -> bool:
    """Cohen-Macaulay with the last syzygy module generated in a single degree."""
    from .algprops import is_cm

    if not is_cm(c, field).value:
        return False
    table = graded_betti(c, field)
    return len(table.row_degrees(projective_dimension(table))) == 1


def ideal_betti(i: MonomialIdeal, field: Field = Q, cap: int = BETTI_VERTEX_CAP) -> BettiTable:
    return graded_betti(complex_of(i), field, cap).of_ideal()


def has_linear_resolution(i: MonomialIdeal, field: Field = Q) -> bool:
    degs = i.degrees()
    if len(degs) != 1:
        raise ValidationError("not equigenerated")
    (d,) = degs
    table = ideal_betti(i, field)
    return all(j == k + d for (k, j) in table.entries)


def weakly_polymatroidal_order(
    i: MonomialIdeal, cap: int = POLYMATROID_VERTEX_CAP
) -> list[int] | None:
    """A variable order under which the squarefree equigenerated ``i`` is weakly polymatroidal.

    For an order x_{p1} > x_{p2} > ..., generators u, v that agree on
    p1..p_{k-1} and have u_{pk} > v_{pk} need some later variable x_j with
    x_{pk} * v / x_j in I. Which pairs are compared at position k, and which
    variables count as later, depend only on the prefix, so orders are built
    one position at a time and each prefix is checked once.
    """
    if i.n > cap:
        raise CapExceeded(f"order search over {i.n}! orders exceeds cap {cap}")
    if len(i.degrees()) > 1:
        raise ValidationError("not equigenerated")
    gens = i.gens
    n = i.n
    pairs = [(u, v) for u in gens for v in gens if u != v]

    def prefix_ok(prefix_mask: int, pk: int) -> bool:
        bit = 1 << pk
        later = full(n) & ~prefix_mask & ~bit
        for u, v in pairs:
            if (u ^ v) & prefix_mask:
                continue
            if not (u & bit) or (v & bit):
                continue
            ok = False
            for j in members(v & later):
                if i.contains_monomial((v & ~(1 << j)) | bit):
                    ok = True
                    break
            if not ok:
                return False
        return True

    order: list[int] = []
    dead: set[int] = set()

    def extend(placed: int) -> bool:
        if len(order) == n:
            return True
        if placed in dead:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            if prefix_ok(placed, v):
                order.append(v)
                if extend(placed | (1 << v)):
                    return True
                order.pop()
        dead.add(placed)
        return False

    return list(order) if extend(0) else None


def is_weakly_polymatroidal(i: MonomialIdeal, cap: int = POLYMATROID_VERTEX_CAP) -> bool:
    return weakly_polymatroidal_order(i, cap) is not None


def check_weakly_polymatroidal(i: MonomialIdeal, order: list[int]) -> bool:
    """Raw definition for one order, every generator pair."""
    pos = {v: k for k, v in enumerate(order)}
    for u in i.gens:
        for v in i.gens:
            diff = u ^ v
            if not diff:
                continue
            t = min(members(diff), key=pos.__getitem__)
            if not (u >> t & 1):
                continue
            if not any(
                i.contains_monomial((v & ~(1 << j)) | (1 << t))
                for j in members(v)
                if pos[j] > pos[t]
            ):
                return False
    return True
