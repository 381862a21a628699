"""Closed-form answers for complete uniform multipartite hypergraphs.

Everything here is arithmetic on the side sizes; nothing is computed from
the hypergraph itself.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import ValidationError
from .hypergraph import PartiteSpec, spec_invariants


@dataclass
class ClassificationReport:
    spec: PartiteSpec
    l: int
    r: int
    unmixed: bool
    cm: bool
    sr: bool
    level: bool
    buchsbaum: bool
    l_cm: bool
    l_buchsbaum: bool
    gorenstein: bool
    ci: bool
    almost_ci: bool
    seq_cm: bool
    seq_sr: bool
    shellable: bool
    vertex_decomposable: bool
    chordal: bool
    matroid: bool
    tight: bool
    dual_cm: bool
    dual_ci: bool
    invariants: dict = field(default_factory=dict)
    # the rule each verdict was read from
    citations: dict = field(default_factory=dict)
    # properties whose value can be confirmed by a definitional oracle
    oracle_backed: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = asdict(self)
        out["spec"] = {"s": self.spec.s, "sides": list(self.spec.sides)}
        return out


ORACLE_PROPERTIES = (
    "unmixed", "cm", "sr", "level", "buchsbaum", "l_cm", "l_buchsbaum",
    "gorenstein", "ci", "almost_ci", "seq_cm", "shellable",
    "vertex_decomposable", "chordal", "matroid", "tight", "dual_cm", "dual_ci",
)


def one_balanced(spec: PartiteSpec, perturb: bool = False) -> bool:
    ok = all(x == 1 for x in spec.sides)
    if perturb:
        # fault injection for the sweep self-test
        return not ok
    return ok


def l_cm_rule(spec: PartiteSpec, l: int, perturb: bool = False) -> bool:
    return one_balanced(spec, perturb) and l <= spec.t - spec.s + 2


def l_buchsbaum_rule(spec: PartiteSpec, l: int, perturb: bool = False) -> bool:
    if spec.s == 2 and l == 1:
        return spec.is_balanced()
    return l_cm_rule(spec, l, perturb)


def almost_ci_rule(spec: PartiteSpec) -> bool:
    if spec.s == 2 and spec.sides == (1, 1, 1):
        return True
    return spec.s == spec.t and spec.sides == (1,) * (spec.t - 1) + (2,)


def sequential_rule(spec: PartiteSpec) -> bool:
    # sides are sorted, so "t-1 singleton sides" means all but the last are 1
    return all(x == 1 for x in spec.sides[:-1])


def classify(spec: PartiteSpec, l: int = 1, r: int = 2, perturb: bool = False) -> ClassificationReport:
    if l < 1:
        raise ValidationError("l must be at least 1")
    if r < 2:
        raise ValidationError("r must be at least 2")
    ob = one_balanced(spec, perturb)
    gor = ob and spec.s == spec.t
    seq = sequential_rule(spec)
    return ClassificationReport(
        spec=spec,
        l=l,
        r=r,
        unmixed=spec.is_balanced(),
        cm=ob,
        sr=ob,
        level=ob,
        buchsbaum=l_buchsbaum_rule(spec, 1, perturb),
        l_cm=l_cm_rule(spec, l, perturb),
        l_buchsbaum=l_buchsbaum_rule(spec, l, perturb),
        gorenstein=gor,
        ci=gor,
        almost_ci=almost_ci_rule(spec),
        seq_cm=seq,
        seq_sr=seq,
        shellable=seq,
        vertex_decomposable=seq,
        chordal=seq,
        matroid=ob,
        tight=ob,
        dual_cm=True,
        dual_ci=spec.s == spec.t,
        invariants=spec_invariants(spec),
        citations={
            "unmixed": "all sides equal",
            "cm/sr/level/matroid/tight": "all sides of size one",
            "buchsbaum": "s = 2: all sides equal; s >= 3: all sides of size one",
            "l_cm": "all sides of size one and l <= t - s + 2",
            "l_buchsbaum": "as l_cm, except s = 2 with l = 1 (all sides equal)",
            "gorenstein/ci": "single edge: s = t, all sides of size one",
            "almost_ci": "the 3-cycle, or s = t with sides 1, ..., 1, 2",
            "dual_cm": "always",
            "dual_ci": "s = t",
            "seq_cm/seq_sr/shellable/vd/chordal": "at least t - 1 sides of size one",
            "invariants": "sums of the t - s + 1 smallest / s - 1 largest sides",
        },
        oracle_backed={name: True for name in ORACLE_PROPERTIES} | {"seq_sr": r == 2},
    )
