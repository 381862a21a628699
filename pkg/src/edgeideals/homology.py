"""Reduced simplicial homology over Q or GF(p) from boundary-matrix ranks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bits import members, size
from .complex import SimplicialComplex, all_faces, faces
from .errors import ValidationError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """``p == 0`` means the rationals, otherwise the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p < 0 or (self.p and not _is_prime(self.p)):
            raise ValidationError(f"{self.p} is not a prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def name(self) -> str:
        return "q" if self.p == 0 else ("f2" if self.p == 2 else f"fp:{self.p}")

    @classmethod
    def parse(cls, text: str) -> Field:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return cls(0)
        if t in ("f2", "gf2"):
            return cls(2)
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        raise ValidationError(f"unknown field {text!r}; use q, f2 or fp:P")


Q = Field(0)
GF2 = Field(2)


def boundary_matrix(c: SimplicialComplex, i: int, field: Field = Q) -> list[list[int]]:
    """Matrix of the augmented boundary map C_i -> C_{i-1}.

    Rows index (i-1)-faces and columns i-faces, both in lexicographic order.
    Deleting the vertex at position k of a face carries sign (-1)^k. For
    i = 0 this is the all-ones augmentation row; for i = -1 the target is
    zero, so the matrix has no rows. Entries are reduced mod p over GF(p).
    """
    if not -1 <= i <= c.dim or c.is_void:
        raise ValidationError(f"boundary index {i} outside [-1, {c.dim}]")
    cols = faces(c, i)
    if i == -1:
        return []
    rows = faces(c, i - 1)
    index = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for col, f in enumerate(cols):
        for k, v in enumerate(members(f)):
            sign = -1 if k % 2 else 1
            mat[index[f & ~(1 << v)]][col] = sign % field.p if field.p else sign
    return mat


def rank_rational(mat: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in mat]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(n):
        piv = next((k for k in range(r, m) if a[k][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for k in range(r + 1, m):
            ak = a[k]
            f = ak[col]
            ar = a[r]
            for j in range(col + 1, n):
                ak[j] = (p * ak[j] - f * ar[j]) // prev
            ak[col] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank_mod_p(mat: list[list[int]], p: int) -> int:
    if not mat or not mat[0]:
        return 0
    if p == 2:
        return _rank_gf2(mat)
    a = [[x % p for x in row] for row in mat]
    m, n = len(a), len(a[0])
    r = 0
    for col in range(n):
        piv = next((k for k in range(r, m) if a[k][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        ar = a[r] = [x * inv % p for x in a[r]]
        for k in range(m):
            if k != r and a[k][col]:
                f = a[k][col]
                a[k] = [(x - f * y) % p for x, y in zip(a[k], ar)]
        r += 1
        if r == m:
            break
    return r


def _rank_gf2(mat: list[list[int]]) -> int:
    # rows packed into ints; XOR elimination keyed by leading bit
    basis: dict[int, int] = {}
    for row in mat:
        v = 0
        for j, x in enumerate(row):
            if x & 1:
                v |= 1 << j
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


def rank(mat: list[list[int]], field: Field = Q) -> int:
    return rank_rational(mat) if field.p == 0 else rank_mod_p(mat, field.p)


@dataclass(frozen=True)
class HomologyProfile:
    dims: tuple[tuple[int, int], ...]  # (i, dim H~_i) for i = -1 .. dim

    def __getitem__(self, i: int) -> int:
        return dict(self.dims).get(i, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def is_zero(self) -> bool:
        return all(d == 0 for _, d in self.dims)

    def to_json(self) -> dict:
        return {"dims": {str(i): d for i, d in self.dims}}


@lru_cache(maxsize=200000)
def reduced_homology(c: SimplicialComplex, field: Field = Q) -> HomologyProfile:
    """dim H~_i = (#i-faces - rank d_i) - rank d_{i+1} for i = -1 .. dim."""
    if c.is_void:
        return HomologyProfile(())
    top = c.dim
    counts = [0] * (top + 2)
    for f in all_faces(c):
        counts[size(f)] += 1
    ranks = {-1: 0, top + 1: 0}
    for i in range(0, top + 1):
        if i == 0:
            ranks[0] = 1  # augmentation onto the empty face is onto
        else:
            ranks[i] = rank(boundary_matrix(c, i, field), field)
    dims = []
    for i in range(-1, top + 1):
        dims.append((i, counts[i + 1] - ranks[i] - ranks[i + 1]))
    return HomologyProfile(tuple(dims))
