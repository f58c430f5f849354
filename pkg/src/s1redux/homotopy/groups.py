"""A finite catalog of compact Lie groups, described by their low homotopy.

Every compact group here is (T^q x K)/Gamma with K a product of SU(2)'s, so
pi_p for p >= 2 is that of the universal cover, a product of 3-spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .abelian import FgAbelianGroup, TRIVIAL, Z, cyclic, direct_sum
from .les import GroupExpr

MAX_CYCLIC = 12


@dataclass(frozen=True)
class CompactGroupDescriptor:
    name: str
    dim: int
    pi0: FgAbelianGroup
    pi1: FgAbelianGroup
    pi3_rank: int
    semisimple_factor: bool
    cover_spheres: tuple = ()

    def __post_init__(self):
        if not self.pi0.is_finite:
            raise ValueError(f"{self.name}: pi_0 of a compact group is finite")
        if self.semisimple_factor and self.pi3_rank < 1:
            raise ValueError(f"{self.name}: a semisimple factor forces infinite pi_3")
        if self.pi3_rank != sum(1 for d in self.cover_spheres if d == 3):
            raise ValueError(f"{self.name}: pi_3 rank disagrees with the covering spheres")

    @property
    def pi2(self) -> FgAbelianGroup:
        return TRIVIAL

    @property
    def is_finite(self) -> bool:
        return self.dim == 0

    def pi(self, p: int) -> GroupExpr:
        if p == 0:
            return GroupExpr.of(self.pi0)
        if p == 1:
            return GroupExpr.of(self.pi1)
        if p == 2:
            return GroupExpr()
        out = GroupExpr()
        for d in self.cover_spheres:
            out = out + GroupExpr.sphere(p, d)
        return out

    def to_json(self) -> dict:
        return {"name": self.name, "dim": self.dim, "pi0": str(self.pi0),
                "pi1": str(self.pi1), "pi3Rank": self.pi3_rank,
                "semisimpleFactor": self.semisimple_factor}


def product(a: CompactGroupDescriptor, b: CompactGroupDescriptor, name=None):
    return CompactGroupDescriptor(
        name=name or f"{a.name} x {b.name}",
        dim=a.dim + b.dim,
        pi0=direct_sum(a.pi0, b.pi0),
        pi1=direct_sum(a.pi1, b.pi1),
        pi3_rank=a.pi3_rank + b.pi3_rank,
        semisimple_factor=a.semisimple_factor or b.semisimple_factor,
        cover_spheres=tuple(sorted(a.cover_spheres + b.cover_spheres)),
    )


TRIVIAL_GROUP = CompactGroupDescriptor("1", 0, TRIVIAL, TRIVIAL, 0, False)
CIRCLE = CompactGroupDescriptor("S^1", 1, TRIVIAL, Z, 0, False)
SU2 = CompactGroupDescriptor("SU(2)", 3, TRIVIAL, TRIVIAL, 1, True, (3,))
SO3 = CompactGroupDescriptor("SO(3)", 3, TRIVIAL, cyclic(2), 1, True, (3,))
# (S^1 x SU(2)) / Z_2
U2 = CompactGroupDescriptor("U(2)", 4, TRIVIAL, Z, 1, True, (3,))


def finite_cyclic(q: int) -> CompactGroupDescriptor:
    return CompactGroupDescriptor(f"Z_{q}", 0, cyclic(q), TRIVIAL, 0, False)


def default_catalog() -> list:
    """Trivial group, Z_q (q <= 12), S^1, SU(2), SO(3), U(2) and all products
    of two nontrivial factors (S^1 x S^1 is listed as T^2)."""
    factors = [finite_cyclic(q) for q in range(2, MAX_CYCLIC + 1)] + [CIRCLE, SU2, SO3]
    out = [TRIVIAL_GROUP, *factors, U2]
    for a, b in combinations_with_replacement(factors, 2):
        name = "T^2" if a == b == CIRCLE else None
        out.append(product(a, b, name))
    return out


def catalog_by_name(catalog=None) -> dict:
    return {g.name: g for g in (catalog or default_catalog())}
