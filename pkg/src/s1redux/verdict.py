"""Representability verdicts for symplectic quotients of linear circle actions.

>>> main_theorem_verdict(WeightVector((1, 1, -1, -1)), 0).outcome
'WEAKLY_UNREPRESENTABLE'
>>> main_theorem_verdict(WeightVector((1, 2)), 0.5).outcome
'REGULAR_ORBIFOLD'
>>> hss_cross_check(WeightVector((1, -1)))
True
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import gcd

from .errors import CatalogInsufficient, HypothesisViolated, OutOfTable, SchemaError
from .homotopy.search import obstruction_search
from .invariants import invariant_monoid_basis
from .momentum import CONE, cone_link_decomposition, is_regular_value, reduced_dimension
from .weights import WeightVector, classify_signs

SCHEMA = "s1redux/1"

REGULAR_ORBIFOLD = "REGULAR_ORBIFOLD"
SMOOTH_MODEL = "SMOOTH_MODEL"
WEAKLY_UNREPRESENTABLE = "WEAKLY_UNREPRESENTABLE"
ORBIFOLD_CANDIDATE = "ORBIFOLD_CANDIDATE"
OUTCOMES = (REGULAR_ORBIFOLD, SMOOTH_MODEL, WEAKLY_UNREPRESENTABLE, ORBIFOLD_CANDIDATE)

_FIXED_POINT_NOTE = ("linear model: every circle-fixed point of the zero level carries "
                     "the same weight multiset, so one weight vector decides all of them")


@dataclass(frozen=True)
class Verdict:
    outcome: str
    reduced_dim: int
    hss_orbifold: bool | None
    evidence: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "hssOrbifold": self.hss_orbifold,
                "reducedDim": self.reduced_dim, "evidence": self.evidence}


def _hss_flag(w: WeightVector, a) -> bool | None:
    signs = classify_signs(w)
    if a != 0 or signs.num_zero or not signs.mixed:
        return None
    return reduced_dimension(w, 0) < 4


def main_theorem_verdict(w: WeightVector, a: float = 0) -> Verdict:
    """Classify the quotient at level ``a``.

    ORBIFOLD_CANDIDATE is a non-answer: the quotient escapes the
    unrepresentability criterion, nothing more is claimed.  Raises
    EmptyLevelSet when the level is not attained.
    """
    dim = reduced_dimension(w, a)
    signs = classify_signs(w)
    evidence = {"level": a, "signProfile": signs.to_json()}
    if is_regular_value(w, a):
        outcome = REGULAR_ORBIFOLD
        evidence["clause"] = "regular value: the circle acts locally freely on the level set"
    elif not signs.mixed:
        outcome = SMOOTH_MODEL
        evidence["clause"] = (f"nonzero weights one-sided: quotient is C^{signs.n - signs.num_nonzero}")
    elif min(signs.num_positive, signs.num_negative) >= 2:
        outcome = WEAKLY_UNREPRESENTABLE
        evidence["clause"] = "critical level with at least two weights of each sign"
        evidence["fixedPoints"] = _FIXED_POINT_NOTE
    else:
        outcome = ORBIFOLD_CANDIDATE
        side = "negative" if signs.num_negative == 1 else "positive"
        evidence["clause"] = f"critical level with exactly one {side} weight; no claim either way"
        evidence["fixedPoints"] = _FIXED_POINT_NOTE
    return Verdict(outcome, dim, _hss_flag(w, a), evidence)


def hss_cross_check(w: WeightVector) -> bool:
    """Dimension criterion for quotients at 0 with all weights nonzero and mixed signs."""
    signs = classify_signs(w)
    if signs.num_zero:
        raise HypothesisViolated("the dimension criterion needs every weight nonzero")
    if not signs.mixed:
        raise HypothesisViolated("the dimension criterion needs weights of both signs")
    return reduced_dimension(w, 0) < 4


# ---------------------------------------------------------------- audit

def _effective(values) -> bool:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g == 1


def mixed_weight_vectors(max_n: int, max_weight: int):
    """Sorted representatives of effective, mixed-sign, all-nonzero vectors."""
    values = [v for v in range(-max_weight, max_weight + 1) if v]
    for n in range(2, max_n + 1):
        for combo in combinations_with_replacement(values, n):
            if combo[0] < 0 < combo[-1] and _effective(combo):
                yield combo


def all_weight_vectors(max_n: int, max_weight: int):
    """Every effective vector (ordered, zeros allowed) up to the bounds."""
    values = range(-max_weight, max_weight + 1)
    for n in range(1, max_n + 1):
        for combo in product(values, repeat=n):
            if _effective(combo):
                yield combo


@lru_cache(maxsize=None)
def _no_solution(l1: int, l2: int) -> bool | None:
    try:
        return obstruction_search(l1, l2).no_solution
    except (CatalogInsufficient, OutOfTable):
        return None


@dataclass
class AuditReport:
    max_n: int
    max_weight: int
    vectors: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"maxN": self.max_n, "maxWeight": self.max_weight, "vectors": self.vectors,
                "checks": self.checks, "ok": self.ok, "violations": self.violations}


def audit_vector(combo, report: AuditReport):
    w = WeightVector(tuple(combo))
    v = main_theorem_verdict(w, 0)
    signs = classify_signs(w)
    report.vectors += 1

    def check(cond, name, **detail):
        report.checks += 1
        if not cond:
            report.violations.append({"weights": list(combo), "check": name, **detail})

    if v.outcome == WEAKLY_UNREPRESENTABLE:
        check(not hss_cross_check(w), "unrepresentable implies HSS dimension test fails",
              reducedDim=v.reduced_dim)
    check(v.outcome in (WEAKLY_UNREPRESENTABLE, ORBIFOLD_CANDIDATE), "mixed weights at 0",
          outcome=v.outcome)
    check((v.outcome == WEAKLY_UNREPRESENTABLE)
          == (min(signs.num_positive, signs.num_negative) >= 2),
          "unrepresentable iff two weights of each sign", outcome=v.outcome)
    for perm in sorted(set(permutations(combo))):
        other = main_theorem_verdict(WeightVector(perm), 0).outcome
        check(other == v.outcome, "permutation invariance", permuted=list(perm), outcome=other)
    neg = main_theorem_verdict(-w, 0).outcome
    check(neg == v.outcome, "negation invariance", outcome=neg)
    d = cone_link_decomposition(w)
    l1, l2 = sorted((d.l_minus, d.l_plus))
    if l1 >= 3:
        check(_no_solution(l1, l2) is True and v.outcome == WEAKLY_UNREPRESENTABLE,
              "link spheres of dimension >= 3 leave no compact model", l1=l1, l2=l2)


def consistency_audit(max_n: int = 5, max_weight: int = 4, vectors=None) -> AuditReport:
    """Exhaustive theorem-level regression over mixed nonzero weight vectors.

    ``vectors`` overrides the enumeration (for single-vector checks).
    """
    report = AuditReport(max_n, max_weight)
    source = mixed_weight_vectors(max_n, max_weight) if vectors is None else vectors
    for combo in source:
        audit_vector(tuple(combo), report)
    return report


# ---------------------------------------------------------------- bundle

_BUNDLE_KEYS = {"schema", "weights", "level", "signProfile", "coneLink", "reducedDim",
                "hilbert", "obstruction", "verdict"}
_VERDICT_KEYS = {"outcome", "hssOrbifold", "reducedDim", "evidence"}
_HILBERT_KEYS = {"k", "generatorCount", "complete", "degreeCap"}


def analyze(w: WeightVector, a: float = 0, k_max: int = 15) -> dict:
    """Everything the toolkit knows about one weight vector and level, as JSON data."""
    verdict = main_theorem_verdict(w, a)
    decomposition = cone_link_decomposition(w)
    basis = invariant_monoid_basis(w)
    doc = {
        "schema": SCHEMA,
        "weights": w.to_json(),
        "level": a,
        "signProfile": classify_signs(w).to_json(),
        "coneLink": decomposition.to_json(),
        "reducedDim": verdict.reduced_dim,
        "hilbert": {"k": basis.k, "generatorCount": len(basis.generators),
                    "complete": basis.complete, "degreeCap": basis.degree_cap},
        "verdict": verdict.to_json(),
    }
    if a == 0 and decomposition.kind == CONE:
        l1, l2 = sorted((decomposition.l_minus, decomposition.l_plus))
        try:
            res = obstruction_search(l1, l2, k_max)
            doc["obstruction"] = {"l1": l1, "l2": l2, "kMax": k_max, "status": res.status,
                                  "survivors": [c.to_json() for c in res.survivors],
                                  "eliminated": len(res.eliminated)}
        except (CatalogInsufficient, OutOfTable) as exc:
            doc["obstruction"] = {"l1": l1, "l2": l2, "kMax": k_max,
                                  "status": "Inconclusive", "reason": str(exc)}
    return doc


def parse_bundle(text) -> dict:
    """Load an analysis bundle, rejecting other schema versions and unknown fields."""
    doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(doc, dict):
        raise SchemaError("bundle must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"unsupported schema {doc.get('schema')!r}")
    extra = set(doc) - _BUNDLE_KEYS
    missing = (_BUNDLE_KEYS - {"obstruction"}) - set(doc)
    if extra or missing:
        raise SchemaError(f"bundle fields: unknown {sorted(extra)}, missing {sorted(missing)}")
    if set(doc["verdict"]) != _VERDICT_KEYS:
        raise SchemaError("verdict fields do not match the schema")
    if set(doc["hilbert"]) != _HILBERT_KEYS:
        raise SchemaError("hilbert fields do not match the schema")
    if doc["verdict"]["outcome"] not in OUTCOMES:
        raise SchemaError(f"unknown outcome {doc['verdict']['outcome']!r}")
    WeightVector.from_json(doc["weights"])
    return doc
