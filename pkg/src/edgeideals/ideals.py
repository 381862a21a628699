"""Squarefree monomial ideals, recorded by the supports of their minimal generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bits import is_antichain, mask_of, members, minimal_sets, size, sort_key
from .complex import SimplicialComplex, minimal_nonfaces
from .errors import ValidationError
from .transversals import berge_transversals


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.gens), key=sort_key))
        object.__setattr__(self, "gens", gens)
        for g in gens:
            if g == 0:
                raise ValidationError("the unit ideal has no squarefree generator support")
            if g >> self.n:
                raise ValidationError(f"generator {members(g)} outside [0, {self.n})")
        if not is_antichain(gens):
            raise ValidationError("generators must be minimal (an antichain)")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> set[int]:
        return {size(g) for g in self.gens}

    def gen_lists(self) -> list[list[int]]:
        return [members(g) for g in self.gens]

    def contains_monomial(self, support: int) -> bool:
        return any(g & ~support == 0 for g in self.gens)


def ideal(n: int, gens: Iterable[Iterable[int]]) -> MonomialIdeal:
    """Ideal generated by the given supports; redundant generators are removed."""
    return MonomialIdeal(n, tuple(minimal_sets(mask_of(g) for g in gens)))


def edge_ideal(h) -> MonomialIdeal:
    return MonomialIdeal(h.n, h.edges)


def stanley_reisner(c: SimplicialComplex) -> MonomialIdeal:
    """Generated by the minimal non-faces."""
    if c.is_void:
        raise ValidationError("the void complex has the unit ideal")
    return MonomialIdeal(c.n, tuple(minimal_nonfaces(c)))


def ideal_dual(i: MonomialIdeal) -> MonomialIdeal:
    """Squarefree Alexander dual: intersection of the primes (x_j : j in g)."""
    if i.is_zero:
        raise ValidationError("Alexander dual of the zero ideal is not squarefree-defined")
    return MonomialIdeal(i.n, tuple(berge_transversals(i.gens)))


def mu(i: MonomialIdeal) -> int:
    return len(i.gens)


def ideal_height(i: MonomialIdeal) -> int:
    """Smallest minimal prime: least cardinality of a minimal transversal of the supports."""
    if i.is_zero:
        raise ValidationError("height of the zero ideal requested")
    return min(size(t) for t in berge_transversals(i.gens))


def complex_of(i: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is ``i`` (sets containing no generator)."""
    from .hypergraph import Hypergraph, independence_complex

    return independence_complex(Hypergraph(i.n, i.gens))
