"""Constraints on pi_*(X) read off long exact sequences of fibrations F -> E -> X.

Connecting maps are unknown, so a degree only yields an isomorphism when
exactness forces one; otherwise a short/five-term exact sequence is
recorded, and the one case with a finite list of outcomes (a circle fiber
over a total space with free pi_1 and trivial pi_2) becomes a DISJUNCTION.

Groups that fall outside the sphere table stay symbolic (``pi_p(S^k)``) so
that two sides built from the same sphere still compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..errors import CatalogInsufficient
from .abelian import FgAbelianGroup, TRIVIAL, Z, direct_sum
from .spheres import in_table, sphere_pi, sphere_pi_rank

ISO = "ISO"
SHORT_EXACT = "SHORT_EXACT"
FIVE_TERM = "FIVE_TERM"
DISJUNCTION = "DISJUNCTION"


@dataclass(frozen=True)
class GroupExpr:
    """Direct sum of a known group and unevaluated sphere groups ``pi_p(S^k)``."""

    known: FgAbelianGroup = TRIVIAL
    spheres: tuple = ()

    @classmethod
    def of(cls, g: FgAbelianGroup) -> "GroupExpr":
        return cls(g, ())

    @classmethod
    def sphere(cls, p: int, k: int) -> "GroupExpr":
        if in_table(p, k):
            return cls(sphere_pi(p, k), ())
        return cls(TRIVIAL, ((p, k),))

    def __add__(self, other: "GroupExpr") -> "GroupExpr":
        return GroupExpr(direct_sum(self.known, other.known),
                         tuple(sorted(self.spheres + other.spheres)))

    @property
    def rank(self) -> int:
        return self.known.rank + sum(sphere_pi_rank(p, k) for p, k in self.spheres)

    @property
    def is_known(self) -> bool:
        return not self.spheres

    def is_trivial(self) -> Optional[bool]:
        if not self.known.is_trivial or self.rank:
            return False
        return True if not self.spheres else None

    def __str__(self):
        parts = [] if self.known.is_trivial else [str(self.known)]
        parts += [f"pi_{p}(S^{k})" for p, k in self.spheres]
        return " + ".join(parts) or "1"

    def to_json(self):
        return str(self)


def compare(a: GroupExpr, b: GroupExpr) -> Optional[bool]:
    """Isomorphism test: True, False, or None when the table cannot decide."""
    if a.spheres == b.spheres:
        return a.known == b.known
    if a.rank != b.rank:
        return False
    return None


@dataclass(frozen=True)
class FreePlusCyclic:
    """The family ``Z^rank + Z_q`` for an unknown q >= 1."""

    rank: int

    def __str__(self):
        free = "Z" if self.rank == 1 else (f"Z^{self.rank}" if self.rank else "")
        return f"{free + ' + ' if free else ''}Z_q (q >= 1)"


@dataclass(frozen=True)
class Unknown:
    """Marker for the slot ``pi_p(X)`` inside an exact sequence."""

    degree: int

    def __str__(self):
        return f"pi_{self.degree}(X)"


@dataclass(frozen=True)
class LesConstraint:
    degree: int
    relation: str
    statement: str
    provenance: str
    rhs: Optional[GroupExpr] = None
    sequence: tuple = ()
    branches: tuple = ()

    def describe(self) -> str:
        if self.relation == ISO:
            return self.statement if self.rhs is None else f"{self.statement} = {self.rhs}"
        if self.relation == DISJUNCTION:
            opts = [", ".join(f"pi_{p}(X) = {v}" for p, v in sorted(b.items()))
                    for b in self.branches]
            return f"{self.statement}: " + " | ".join(f"[{o}]" for o in opts)
        return f"{self.statement}: " + " -> ".join(str(t) for t in self.sequence)

    def to_json(self) -> dict:
        return {"degree": self.degree, "relation": self.relation,
                "constraint": self.describe(), "provenance": self.provenance}


def fibration_les(fiber: Callable[[int], GroupExpr], total: Callable[[int], GroupExpr],
                  p_max: int, names: dict, provenance: str, p_min: int = 1) -> list:
    """Constraints on pi_p(X), p_min <= p <= p_max, for a fibration F -> E -> X.

    ``names`` maps "F" and "E" to display names.  Each degree looks at the
    segment pi_p(F) -> pi_p(E) -> pi_p(X) -> pi_{p-1}(F) -> pi_{p-1}(E).
    """
    F, E = names["F"], names["E"]
    out = []
    skip = set()
    circle = names.get("circle_fiber", False)
    if circle and p_min <= 2 <= p_max:
        disj = _circle_fiber_disjunction(total, provenance, E)
        if disj:
            out.extend(disj)
            skip = {1, 2}
    for p in range(p_min, p_max + 1):
        if p in skip:
            continue
        fp, fq, ep, eq = fiber(p), fiber(p - 1), total(p), total(p - 1)
        prov = f"{provenance}, degree {p}"
        if fp.is_trivial() and fq.is_trivial():
            out.append(LesConstraint(p, ISO, f"pi_{p}(X) ≅ pi_{p}({E})", prov, rhs=ep))
        elif ep.is_trivial() and eq.is_trivial():
            out.append(LesConstraint(p, ISO, f"pi_{p}(X) ≅ pi_{p - 1}({F})", prov, rhs=fq))
        elif fp.is_trivial() and eq.is_trivial():
            out.append(LesConstraint(
                p, SHORT_EXACT, f"1 -> pi_{p}({E}) -> pi_{p}(X) -> pi_{p - 1}({F}) -> 1",
                prov, sequence=(ep, Unknown(p), fq)))
        else:
            out.append(LesConstraint(
                p, FIVE_TERM,
                f"pi_{p}({F}) -> pi_{p}({E}) -> pi_{p}(X) -> pi_{p - 1}({F}) -> pi_{p - 1}({E})",
                prov, sequence=(fp, ep, Unknown(p), fq, eq)))
    return out


def _circle_fiber_disjunction(total, provenance, E):
    """Degrees 1-2 for a circle fiber when pi_1(E) = Z^r, pi_2(E) = pi_0(E) = 1.

    The sequence 1 -> pi_2(X) -> Z -f-> Z^r -> pi_1(X) -> 1 leaves two
    outcomes: f = 0, or f != 0 with cokernel Z^{r-1} + Z_q.
    """
    e1, e2, e0 = total(1), total(2), total(0)
    if not (e2.is_trivial() and e0.is_trivial() and e1.is_known
            and not e1.known.torsion and e1.known.rank >= 1):
        return None
    r = e1.known.rank
    seq = (GroupExpr(), Unknown(2), GroupExpr.of(Z), GroupExpr.of(e1.known),
           Unknown(1), GroupExpr())
    five = LesConstraint(2, FIVE_TERM, "1 -> pi_2(X) -> Z -f-> " + str(e1.known)
                         + " -> pi_1(X) -> 1 is exact", f"{provenance}, degrees 1-2",
                         sequence=seq)
    branches = (
        {2: GroupExpr.of(Z), 1: GroupExpr.of(FgAbelianGroup(r))},
        {2: GroupExpr(), 1: FreePlusCyclic(r - 1)},
    )
    disj = LesConstraint(2, DISJUNCTION, "f = 0 or f != 0", f"{provenance}, degrees 1-2",
                         branches=branches)
    return [five, disj]


def _sphere_product(dims):
    def pi(p):
        out = GroupExpr()
        for d in dims:
            out = out + GroupExpr.sphere(p, d)
        return out
    return pi


def les_quotient_constraints(l1: int, l2: int, p_max: int) -> list:
    """pi_*(X) for X = E S^1 x_{S^1} (S^l1 x S^l2), from S^1 -> S^l1 x S^l2 -> X."""
    for l in (l1, l2):
        if l < 1 or l % 2 == 0:
            raise ValueError(f"link sphere dimensions must be odd and >= 1, got {l}")
    l1, l2 = sorted((l1, l2))
    total_name = f"S^{l1} x S^{l2}"
    prov = f"fibration S^1 -> E S^1 x ({total_name}) -> X"
    cs = fibration_les(_sphere_product([1]), _sphere_product([l1, l2]), p_max,
                       {"F": "S^1", "E": total_name, "circle_fiber": True}, prov)
    # spell the product degrees with both factors, as in pi_p(S^l1) x pi_p(S^l2)
    out = []
    for c in cs:
        if c.relation == ISO and c.statement.startswith(f"pi_{c.degree}(X) ≅ pi_{c.degree}(S^"):
            p = c.degree
            c = LesConstraint(p, ISO, f"pi_{p}(X) ≅ pi_{p}(S^{l1}) x pi_{p}(S^{l2})",
                              c.provenance, rhs=c.rhs)
        out.append(c)
    return out


def les_sphere_quotient_constraints(k: int, group, p_max: int, p_min: int = 1) -> list:
    """pi_*(X) for X = EH x_H S^k, from H -> S^k -> X.  ``group`` is a
    CompactGroupDescriptor (anything with ``.name`` and ``.pi(p)``)."""
    if k < 1:
        raise ValueError("sphere dimension must be >= 1")
    prov = f"fibration H -> EH x S^{k} -> X, H = {group.name}"
    return fibration_les(group.pi, _sphere_product([k]), p_max,
                         {"F": "H", "E": f"S^{k}"}, prov, p_min=p_min)


def hopf_constraints(p_max: int = 9) -> list:
    """The Hopf fibration S^1 -> S^3 -> S^2 with the base treated as unknown."""
    return fibration_les(_sphere_product([1]), _sphere_product([3]), p_max,
                         {"F": "S^1", "E": "S^3"}, "Hopf fibration S^1 -> S^3 -> S^2")


@dataclass
class Branch:
    """One consistent assignment of patterns to degrees of pi_*(X)."""

    values: dict = field(default_factory=dict)

    def copy(self) -> "Branch":
        return Branch(dict(self.values))


def _matches_family(fam: FreePlusCyclic, g: GroupExpr) -> Optional[bool]:
    if g.rank != fam.rank:
        return False
    if not g.is_known:
        return None
    return len(g.known.torsion) <= 1


def apply_constraint(branch: Branch, c: LesConstraint) -> list:
    """Refine ``branch`` by ``c``; returns surviving branches (possibly none).

    Raises CatalogInsufficient when the sphere table cannot decide.
    """
    p = c.degree
    if c.relation == DISJUNCTION:
        out = []
        for options in c.branches:
            nb = [branch.copy()]
            for q, v in sorted(options.items()):
                nb = [x for b in nb for x in _apply_value(b, q, v)]
            out.extend(nb)
        return out
    if c.relation == ISO:
        return _apply_value(branch, p, c.rhs)
    current = branch.values.get(p)
    unknown_slots = [i for i, t in enumerate(c.sequence) if isinstance(t, Unknown)]
    if current is None or len(unknown_slots) != 1:
        return [branch]
    i = unknown_slots[0]
    rank = current.rank
    if c.relation == SHORT_EXACT:
        a, _, cc = c.sequence
        if rank != a.rank + cc.rank:
            return []
        # A free and C finite: the torsion of B embeds in C
        if (a.is_known and not a.known.torsion and cc.is_known and cc.known.is_finite
                and isinstance(current, GroupExpr) and current.is_known
                and cc.known.order % current.known.torsion_order):
            return []
        return [branch]
    if c.relation == FIVE_TERM and i == 2:
        a, b, _, d, e = c.sequence
        lo = max(0, b.rank - a.rank) + max(0, d.rank - e.rank)
        hi = b.rank + d.rank
        return [branch] if lo <= rank <= hi else []
    return [branch]


def _apply_value(branch, p, value):
    current = branch.values.get(p)
    if current is None:
        nb = branch.copy()
        nb.values[p] = value
        return [nb]
    if isinstance(current, FreePlusCyclic) and isinstance(value, FreePlusCyclic):
        return [branch] if current == value else []
    if isinstance(current, FreePlusCyclic) or isinstance(value, FreePlusCyclic):
        fam, g = (current, value) if isinstance(current, FreePlusCyclic) else (value, current)
        ok = _matches_family(fam, g)
        if ok is None:
            raise CatalogInsufficient(f"cannot decide whether pi_{p}(X) = {g} has the form {fam}")
        if not ok:
            return []
        nb = branch.copy()
        nb.values[p] = g
        return [nb]
    ok = compare(current, value)
    if ok is None:
        raise CatalogInsufficient(f"cannot compare {current} with {value} in degree {p}")
    return [branch] if ok else []
