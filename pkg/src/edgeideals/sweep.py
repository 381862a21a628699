"""Grid sweep comparing the closed-form classifier with the definitional checks."""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from . import algprops as ap
from .betti import (
    graded_betti,
    has_linear_resolution,
    is_weakly_polymatroidal,
    projective_dimension,
)
from .bits import full, submasks
from .classify import classify, l_buchsbaum_rule, l_cm_rule, one_balanced
from .combprops import (
    is_vertex_decomposable,
    shelling_order,
    verify_shedding_tree,
    verify_shelling,
)
from .complex import (
    alexander_dual,
    all_faces,
    induced_subcomplex,
    is_matroid,
    link,
    reduced_euler,
    tight_labelling,
    vertex_deletion,
)
from .errors import CapExceeded, ValidationError
from .homology import Field, reduced_homology
from .hypergraph import (
    PartiteSpec,
    chordality,
    complete_multipartite,
    contraction,
    deletion,
    independence_complex,
    induced_subhypergraph,
    numbers,
    transversal_hypergraph,
)
from .ideals import edge_ideal, ideal_dual, ideal_height

log = logging.getLogger(__name__)

HARD_MAX_N = 14
JOBS_ENV = "EDGEIDEALS_JOBS"


@dataclass
class SweepConfig:
    t_min: int = 2
    t_max: int = 5
    max_side: int = 3
    max_n: int = 9
    fields: tuple[str, ...] = ("q", "f2")
    l_values: tuple[int, ...] = (1, 2, 3, 4)
    r_values: tuple[int, ...] = (2, 3)
    tight_max_n: int = 8
    polymatroid_max_n: int = 8
    jobs: int | None = None
    out: str | None = None
    perturb: bool = False

    def validate(self) -> None:
        if self.max_n > HARD_MAX_N:
            raise CapExceeded(f"max_n={self.max_n} exceeds the hard cap {HARD_MAX_N}")
        if self.t_min < 2 or self.t_max < self.t_min:
            raise ValidationError("need 2 <= t_min <= t_max")
        if self.max_side < 1:
            raise ValidationError("max_side must be positive")
        if any(l < 1 for l in self.l_values) or any(r < 2 for r in self.r_values):
            raise ValidationError("l values must be >= 1 and r values >= 2")
        for f in self.fields:
            Field.parse(f)

    def resolved_jobs(self) -> int:
        if self.jobs:
            return self.jobs
        return int(os.environ.get(JOBS_ENV, "1"))


def grid(cfg: SweepConfig) -> list[PartiteSpec]:
    specs = []
    for t in range(cfg.t_min, cfg.t_max + 1):
        for sides in itertools.combinations_with_replacement(range(1, cfg.max_side + 1), t):
            if sum(sides) > cfg.max_n:
                continue
            for s in range(2, t + 1):
                specs.append(PartiteSpec(s, sides))
    return sorted(specs, key=spec_order)


def spec_order(spec: PartiteSpec):
    return (spec.n, spec.t, spec.sides, spec.s)


class _Checks:
    """Collects (oracle, closed form) pairs with per-check wall times."""

    def __init__(self):
        self.items: dict[str, dict] = {}
        self.witnesses: dict[str, object] = {}
        self.times: dict[str, float] = {}

    def add(self, name: str, oracle: Callable[[], object], closed, witness=None):
        t0 = time.perf_counter()
        got = oracle()
        self.times[name] = round(time.perf_counter() - t0, 6)
        w = None
        if isinstance(got, ap.PropertyVerdict):
            w = got.witness
            got = got.value
        if isinstance(got, tuple):
            got, w = got
        agree = got == closed
        self.items[name] = {"oracle": got, "closed": closed, "agree": agree}
        if not agree:
            self.witnesses[name] = w if w is not None else witness


# ---------------------------------------------------------------- structural identities


def minor_identities(h) -> bool:
    """Ind(H/v) = lk{v} and Ind(H \\ v) = Ind(H) \\ v for every vertex."""
    c = independence_complex(h)
    for v in range(h.n):
        if independence_complex(deletion(h, v)) != vertex_deletion(c, v):
            return False
        if (1 << v) in h.edges:
            continue
        if not c.contains(1 << v):
            continue
        if independence_complex(contraction(h, v)) != link(c, 1 << v):
            return False
    return True


def induced_compatible(h) -> bool:
    c = independence_complex(h)
    return all(
        induced_subcomplex(c, w) == independence_complex(induced_subhypergraph(h, w))
        for w in submasks(full(h.n))
    )


def euler_poincare_everywhere(c, field: Field) -> bool:
    """Euler-Poincare on the complex, each face link and each induced subcomplex."""
    touched = [c]
    touched.extend(link(c, f) for f in all_faces(c))
    touched.extend(induced_subcomplex(c, w) for w in submasks(full(c.n)))
    for k in touched:
        prof = reduced_homology(k, field)
        if sum((-1) ** i * d for i, d in prof.dims) != reduced_euler(k):
            return False
    return True


def transversal_family_matches(spec: PartiteSpec, h) -> bool:
    sides = spec.side_masks()
    expected = {sum(c) for c in itertools.combinations(sides, spec.t - spec.s + 1)}
    return set(transversal_hypergraph(h).edges) == expected


# ---------------------------------------------------------------- one spec


def evaluate_spec(spec: PartiteSpec, cfg: SweepConfig) -> tuple[list[dict], list[dict]]:
    """Records (one per field) and matching timing rows for a single spec."""
    h = complete_multipartite(spec)
    c = independence_complex(h)
    ideal = edge_ideal(h)
    ob = one_balanced(spec, cfg.perturb)
    seq = all(x == 1 for x in spec.sides[:-1])
    inv = classify(spec).invariants

    shared = _Checks()
    shared.add("unmixed", lambda: ap.is_unmixed(c), spec.is_balanced())
    shared.add("matroid", lambda: is_matroid(c), ob)
    if spec.n <= cfg.tight_max_n:
        shared.add("tight", lambda: tight_labelling(c) is not None, ob)
    shared.add("ci", lambda: ap.is_complete_intersection(ideal), ob and spec.s == spec.t)
    shared.add("almost_ci", lambda: ap.is_almost_ci(ideal), classify(spec).almost_ci)
    shared.add("dual_ci", lambda: ap.is_complete_intersection(ideal_dual(ideal)), spec.s == spec.t)
    if spec.n <= cfg.polymatroid_max_n:
        shared.add("weakly_polymatroidal", lambda: is_weakly_polymatroidal(ideal), True)
    shared.add("seq_s2", lambda: ap.is_seq_s2(c), seq)

    def shell():
        order = shelling_order(c)
        return order is not None, None

    def vd():
        ok, _ = is_vertex_decomposable(c)
        return ok, None

    def chordal():
        res = chordality(h)
        w = None if res.failing_minor is None else {
            "labels": list(res.failing_minor.labels), "edges": res.failing_minor.edge_lists()
        }
        return res.chordal, w

    shared.add("shellable", shell, seq)
    shared.add("vertex_decomposable", vd, seq)
    shared.add("chordal", chordal, seq)

    def certs_sound():
        order = shelling_order(c)
        if order is not None and not verify_shelling(c, order):
            return False
        ok, tree = is_vertex_decomposable(c)
        return not ok or verify_shedding_tree(c, tree)

    shared.add("certificates_sound", certs_sound, True)
    shared.add("deletion_contraction", lambda: minor_identities(h), True)
    shared.add("induced_compatible", lambda: induced_compatible(h), True)

    tau, ind = numbers(h)
    shared.add("tau", lambda: tau, inv["tau"])
    shared.add("ind", lambda: ind, inv["ind"])
    shared.add("dim", lambda: c.dim + 1, inv["dim"])
    shared.add("ht", lambda: ideal_height(ideal), inv["ht"])
    shared.add("transversal_family", lambda: transversal_family_matches(spec, h), True)

    records, timings = [], []
    for fname in cfg.fields:
        fld = Field.parse(fname)
        chk = _Checks()
        chk.items.update(shared.items)
        chk.witnesses.update(shared.witnesses)
        chk.times.update(shared.times)

        chk.add("cm", lambda: ap.is_cm(c, fld), ob)
        for r in cfg.r_values:
            chk.add(f"s{r}", lambda r=r: ap.satisfies_sr(c, r, fld), ob)
        table = graded_betti(c, fld)

        def level():
            if not ap.is_cm(c, fld).value:
                return False
            return len(table.row_degrees(projective_dimension(table))) == 1

        chk.add("level", level, ob)
        for l in cfg.l_values:
            chk.add(f"{l}-cm", lambda l=l: ap.is_l_cm(c, l, fld), l_cm_rule(spec, l, cfg.perturb))
            chk.add(
                f"{l}-buchsbaum",
                lambda l=l: ap.is_l_buchsbaum(c, l, fld),
                l_buchsbaum_rule(spec, l, cfg.perturb),
            )
        chk.add("gorenstein", lambda: ap.is_gorenstein(c, fld), ob and spec.s == spec.t)
        chk.add("dual_cm", lambda: ap.is_cm(alexander_dual(c), fld), True)
        chk.add("linear_resolution", lambda: has_linear_resolution(ideal, fld), True)
        chk.add("seq_cm", lambda: ap.is_seq_cm(c, fld), seq)

        def auslander_buchsbaum():
            pd = projective_dimension(table)
            depth_bound = spec.n - (c.dim + 1)
            return pd >= depth_bound and (pd == depth_bound) == ap.is_cm(c, fld).value

        chk.add("auslander_buchsbaum", auslander_buchsbaum, True)

        def ideal_shift():
            shifted = table.of_ideal()
            return all(shifted[(i, j)] == table[(i + 1, j)] for (i, j) in table.entries if i >= 1)

        chk.add("ideal_shift", ideal_shift, True)
        chk.add("euler_poincare", lambda: euler_poincare_everywhere(c, fld), True)

        names = sorted(chk.items)
        disagreements = [k for k in names if not chk.items[k]["agree"]]
        records.append(
            {
                "spec": {"s": spec.s, "sides": list(spec.sides)},
                "field": fld.name(),
                "n": spec.n,
                "checks": {k: chk.items[k] for k in names},
                "disagreements": disagreements,
                "witnesses": {k: chk.witnesses.get(k) for k in disagreements},
                "homology": reduced_homology(c, fld).to_json()["dims"],
                "betti": table.to_json(),
            }
        )
        timings.append(
            {"spec": {"s": spec.s, "sides": list(spec.sides)}, "field": fld.name(),
             "seconds": {k: chk.times[k] for k in names}}
        )
    return records, timings


def _evaluate(args):
    spec, cfg = args
    return evaluate_spec(spec, cfg)


# ---------------------------------------------------------------- driver


@dataclass
class SweepSummary:
    specs: int = 0
    records: int = 0
    disagreements: int = 0
    per_property: dict = field(default_factory=dict)  # name -> [agree, disagree]
    field_mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0


def run_sweep(cfg: SweepConfig, progress: Callable[[str], None] | None = None) -> tuple[SweepSummary, list[dict]]:
    """Evaluate every grid spec; write JSONL if ``cfg.out`` is set.

    Output layout: a header line (config + timestamp), one record per
    (spec, field) in spec order, then a summary line. Wall times go to a
    sidecar ``<out>.timings.jsonl`` so record lines stay byte-identical
    between runs.
    """
    cfg.validate()
    specs = grid(cfg)
    if cfg.out:
        out_path = Path(cfg.out)
        if out_path.parent and not out_path.parent.exists():
            raise OSError(f"output directory {out_path.parent} does not exist")
    jobs = cfg.resolved_jobs()
    work = [(s, cfg) for s in specs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, work))  # map keeps spec order
    else:
        results = []
        for item in work:
            results.append(_evaluate(item))
            if progress:
                progress(item[0].label())

    summary = SweepSummary(specs=len(specs))
    records: list[dict] = []
    timings: list[dict] = []
    for recs, tims in results:
        records.extend(recs)
        timings.extend(tims)
        for rec in recs:
            for name, chk in rec["checks"].items():
                tally = summary.per_property.setdefault(name, [0, 0])
                tally[0 if chk["agree"] else 1] += 1
            summary.disagreements += len(rec["disagreements"])
        by_field = {r["field"]: r["checks"] for r in recs}
        if len(by_field) > 1:
            base = next(iter(by_field.values()))
            for fname, chks in by_field.items():
                diff = sorted(k for k in chks if chks[k]["oracle"] != base[k]["oracle"])
                if diff:
                    summary.field_mismatches.append({"spec": recs[0]["spec"], "field": fname, "checks": diff})
    summary.records = len(records)

    if cfg.out:
        header = {"header": {"config": asdict(cfg), "started": datetime.now(timezone.utc).isoformat()}}
        with open(cfg.out, "w") as fh:
            fh.write(json.dumps(header, sort_keys=True) + "\n")
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.write(json.dumps({"summary": asdict(summary)}, sort_keys=True) + "\n")
        with open(str(cfg.out) + ".timings.jsonl", "w") as fh:
            for row in timings:
                fh.write(json.dumps(row, sort_keys=True) + "\n")
    return summary, records
