"""Finitely generated abelian groups in invariant-factor normal form.

>>> direct_sum(cyclic(2), cyclic(3))
FgAbelianGroup(rank=0, torsion=(6,))
>>> print(direct_sum(Z, cyclic(4), cyclic(2)))
Z + Z_2 + Z_4
>>> FgAbelianGroup.from_relations([[2, 4], [6, 8]]).torsion
(2, 4)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd


def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the nonzero invariant factors ``d_1 | d_2 | ...`` (all positive).
    Pure elimination over Z; the input is not modified.
    """
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must also divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remainder into the pivot position
            best = min([(i, t) for i in range(t, rows) if a[i][t]]
                       + [(t, j) for j in range(t, cols) if a[t][j]],
                       key=lambda ij: abs(a[ij[0]][ij[1]]))
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _invariant_factors(orders):
    """Invariant factors of a direct sum of cyclic groups of the given orders."""
    orders = [abs(int(o)) for o in orders if abs(int(o)) != 1]
    if any(o == 0 for o in orders):
        raise ValueError("use rank for free summands")
    # coprime splitting via repeated gcd/lcm normalization
    factors = sorted(orders)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                g = gcd(a, b)
                l = a * b // g
                if (g, l) != (a, b):
                    factors[i], factors[j] = g, l
                    changed = True
        factors = sorted(f for f in factors if f != 1)
    return tuple(factors)


@dataclass(frozen=True)
class FgAbelianGroup:
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        tors = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in tors) or any(b % a for a, b in zip(tors, tors[1:])):
            tors = _invariant_factors(tors)
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def from_relations(cls, relations, num_generators=None):
        """Cokernel of the relation matrix (rows are relations among generators)."""
        relations = [list(r) for r in relations]
        if num_generators is None:
            num_generators = len(relations[0]) if relations else 0
        if not relations:
            return cls(num_generators, ())
        diag = smith_normal_form(relations)
        return cls(num_generators - len(diag), tuple(d for d in diag if d > 1))

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self):
        """Order of the group, or None when infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def is_cyclic(self) -> bool:
        return self.rank + len(self.torsion) <= 1

    def __add__(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        return direct_sum(self, other)

    def __str__(self):
        if self.is_trivial:
            return "1"
        parts = ["Z"] * self.rank + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, doc) -> "FgAbelianGroup":
        return cls(int(doc["rank"]), tuple(doc["torsion"]))

    @classmethod
    def parse(cls, text: str) -> "FgAbelianGroup":
        """Parse ``"Z + Z_2"``, ``"Z^2 + Z_12"`` or ``"1"``."""
        text = text.strip()
        if text in ("1", "0", "trivial"):
            return cls()
        rank, tors = 0, []
        for tok in re.split(r"\s*[+x⊕]\s*", text):
            m = re.fullmatch(r"Z(?:\^(\d+))?", tok)
            if m:
                rank += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"Z_?(\d+)", tok)
            if not m:
                raise ValueError(f"cannot parse group {text!r}")
            tors.append(int(m.group(1)))
        return cls(rank, tuple(tors))


def cyclic(order: int) -> FgAbelianGroup:
    """Z_order; ``cyclic(0)`` is Z and ``cyclic(1)`` is trivial."""
    if order == 0:
        return FgAbelianGroup(1)
    return FgAbelianGroup(0, (abs(order),) if abs(order) > 1 else ())


TRIVIAL = FgAbelianGroup()
Z = FgAbelianGroup(1)


def direct_sum(*groups: FgAbelianGroup) -> FgAbelianGroup:
    rank = sum(g.rank for g in groups)
    tors = [d for g in groups for d in g.torsion]
    return FgAbelianGroup(rank, _invariant_factors(tors))


def is_finite(g: FgAbelianGroup) -> bool:
    return g.is_finite


def is_trivial(g: FgAbelianGroup) -> bool:
    return g.is_trivial


def equals(g: FgAbelianGroup, h: FgAbelianGroup) -> bool:
    return g == h
