"""JSON forms of hypergraphs, complexes, ideals and partite specs."""

from __future__ import annotations

from typing import Any

from .bits import mask_of, members
from .complex import SimplicialComplex, from_facets, irrelevant, void
from .errors import ValidationError
from .hypergraph import Hypergraph, PartiteSpec, hypergraph
from .ideals import MonomialIdeal


def hypergraph_to_json(h: Hypergraph) -> dict:
    out: dict[str, Any] = {"n": h.n, "edges": h.edge_lists()}
    if h.labels != tuple(range(h.n)):
        out["labels"] = [str(x) for x in h.labels]
    return out


def hypergraph_from_json(d: dict) -> Hypergraph:
    try:
        return hypergraph(int(d["n"]), d["edges"], d.get("labels"))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad hypergraph JSON: {exc}") from exc


def complex_to_json(c: SimplicialComplex) -> dict:
    out: dict[str, Any] = {"n": c.n, "facets": c.facet_lists()}
    if c.is_void:
        out["void"] = True
    if c.is_irrelevant:
        out["irrelevant"] = True
    return out


def complex_from_json(d: dict) -> SimplicialComplex:
    try:
        n = int(d["n"])
        if d.get("void"):
            return void(n)
        if d.get("irrelevant"):
            return irrelevant(n)
        return from_facets(n, d["facets"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad complex JSON: {exc}") from exc


def ideal_to_json(i: MonomialIdeal) -> dict:
    return {"n": i.n, "gens": i.gen_lists()}


def ideal_from_json(d: dict) -> MonomialIdeal:
    try:
        return MonomialIdeal(int(d["n"]), tuple(mask_of(g) for g in d["gens"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad ideal JSON: {exc}") from exc


def spec_to_json(spec: PartiteSpec) -> dict:
    return {"s": spec.s, "sides": list(spec.sides)}


def spec_from_json(d: dict) -> PartiteSpec:
    try:
        return PartiteSpec(int(d["s"]), tuple(d["sides"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad spec JSON: {exc}") from exc


def parse_sides(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ValidationError(f"bad side list {text!r}") from exc


def load_object(d: dict):
    """Dispatch on the keys present: edges, facets, gens, or s/sides."""
    if not isinstance(d, dict):
        raise ValidationError("expected a JSON object")
    if "edges" in d:
        return hypergraph_from_json(d)
    if "facets" in d or d.get("void") or d.get("irrelevant"):
        return complex_from_json(d)
    if "gens" in d:
        return ideal_from_json(d)
    if "sides" in d:
        return spec_from_json(d)
    raise ValidationError("JSON object is not a hypergraph, complex, ideal or spec")


def sets_json(masks) -> list[list[int]]:
    return [members(m) for m in masks]
