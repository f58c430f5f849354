"""Search for a compact group H and sphere S^k whose Borel construction
EH x_H S^k can be homotopy equivalent to E S^1 x_{S^1} (S^l1 x S^l2).

Both spaces are classifying spaces of Morita equivalent action groupoids
when the link of the quotient's cone point is S^k / H, so their homotopy
groups must satisfy the constraints of both fibration sequences at once.
Dimension counting fixes ``k = l1 + l2 - 1 + dim H``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .groups import default_catalog
from .les import (ISO, Branch, LesConstraint, apply_constraint, les_quotient_constraints,
                  les_sphere_quotient_constraints)

NO_SOLUTION = "NoSolution"
SURVIVORS = "Survivors"


@dataclass(frozen=True)
class Candidate:
    group: str
    dim: int
    k: int

    def to_json(self) -> dict:
        return {"group": self.group, "dimH": self.dim, "k": self.k}


@dataclass(frozen=True)
class Elimination:
    candidate: Candidate
    degree: int
    constraint: str
    provenance: str

    def to_json(self) -> dict:
        return {**self.candidate.to_json(), "degree": self.degree,
                "constraint": self.constraint, "provenance": self.provenance}


@dataclass
class SearchResult:
    l1: int
    l2: int
    k_max: int
    survivors: list
    eliminated: list
    derivation: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return SURVIVORS if self.survivors else NO_SOLUTION

    @property
    def no_solution(self) -> bool:
        return not self.survivors

    def to_json(self) -> dict:
        return {
            "l1": self.l1, "l2": self.l2, "kMax": self.k_max,
            "status": self.status,
            # the search is exhaustive only over k <= kMax
            "withinBound": True,
            "survivors": [c.to_json() for c in self.survivors],
            "eliminated": [e.to_json() for e in self.eliminated],
            "derivation": self.derivation,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)


def _log(entries, constraint, candidate=None, outcome=None):
    entry = constraint.to_json()
    entry["candidate"] = candidate
    if outcome:
        entry["outcome"] = outcome
    entries.append(entry)


def _generic_sphere_facts(k_min):
    """Degrees p < k_min where exactness gives pi_p(X) ≅ pi_{p-1}(H) for every H."""
    out = []
    for p in range(1, k_min):
        out.append(LesConstraint(
            p, ISO, f"pi_{p}(X) ≅ pi_{p - 1}(H)",
            f"fibration H -> EH x S^k -> X, k >= {k_min}, degree {p}"))
    return out


def obstruction_search(l1: int, l2: int, k_max: int = 15, catalog=None) -> SearchResult:
    """Run every catalog group H with k = l1 + l2 - 1 + dim H <= k_max through
    both constraint sets, degree by degree up to k_max.

    A candidate is eliminated at the first degree whose constraints admit no
    consistent value of pi_p(X).  Raises CatalogInsufficient if a needed
    comparison lies beyond the sphere table.
    """
    l1, l2 = sorted((int(l1), int(l2)))
    catalog = default_catalog() if catalog is None else list(catalog)
    derivation = []

    base = [Branch()]
    for c in les_quotient_constraints(l1, l2, k_max):
        base = [b2 for b in base for b2 in apply_constraint(b, c)]
        _log(derivation, c)
    k_min = l1 + l2 - 1
    for c in _generic_sphere_facts(k_min):
        _log(derivation, c, candidate="any H")

    jobs = sorted(((g, k_min + g.dim) for g in catalog if k_min + g.dim <= k_max),
                  key=lambda gk: (gk[0].dim, gk[0].name, gk[1]))
    survivors, eliminated = [], []
    for group, k in jobs:
        cand = Candidate(group.name, group.dim, k)
        branches = [b.copy() for b in base]
        for c in les_sphere_quotient_constraints(k, group, k_max):
            branches = [b2 for b in branches for b2 in apply_constraint(b, c)]
            if not branches:
                _log(derivation, c, candidate=group.name, outcome="contradiction")
                eliminated.append(Elimination(cand, c.degree, c.describe(), c.provenance))
                break
            _log(derivation, c, candidate=group.name)
        else:
            survivors.append(cand)
    return SearchResult(l1, l2, k_max, survivors, eliminated, derivation)
