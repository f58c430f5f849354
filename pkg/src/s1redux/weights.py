"""Weight vectors of linear circle actions on C^n and their orbit types.

A circle acts on C^n by ``e^{it} . z = (e^{i a_1 t} z_1, ..., e^{i a_n t} z_n)``
for integer weights ``a_i``.  The action is effective exactly when the gcd of
the nonzero ``|a_i|`` is 1.

Support sets are written with 1-based indices throughout, matching the
usual ``z_1, ..., z_n`` labelling and the JSON wire format.

>>> normalize_effective([2, 4, -6])
WeightVector(entries=(1, 2, -3))
>>> classify_signs(WeightVector((1, 1, -1, -1, 0)))
SignProfile(num_negative=2, num_zero=1, num_positive=2)
>>> stabilizer(WeightVector((2, 3)), {1})
Stabilizer(order=2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import AllZeroWeights, NotEffective

FULL_CIRCLE = "FULL_CIRCLE"


def _gcd_nonzero(values: Iterable[int]) -> int:
    return reduce(gcd, (abs(v) for v in values if v != 0), 0)


@dataclass(frozen=True)
class WeightVector:
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("weight vector must have length n >= 1")
        g = _gcd_nonzero(entries)
        if g == 0:
            raise AllZeroWeights("every weight is zero; the action is trivial")
        if g != 1:
            raise NotEffective(
                f"weights {list(entries)} have common factor {g}; "
                "use normalize_effective()")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __neg__(self):
        return WeightVector(tuple(-a for a in self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def nonzero(self) -> tuple:
        return tuple(a for a in self.entries if a != 0)

    def permuted(self, order: Sequence[int]) -> "WeightVector":
        return WeightVector(tuple(self.entries[i] for i in order))

    def to_json(self) -> list:
        return list(self.entries)

    @classmethod
    def from_json(cls, doc) -> "WeightVector":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, list) or not all(isinstance(v, int) for v in doc):
            raise ValueError("weight vector JSON must be an array of integers")
        return cls(tuple(doc))


def parse_weights(text: str) -> list:
    """Parse ``"1,1,-2"`` (or a JSON array) into a list of ints."""
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok]


def normalize_effective(raw: Iterable[int]) -> WeightVector:
    """Divide out the common factor of the nonzero weights.

    Raises AllZeroWeights when there is no nonzero entry.
    """
    raw = [int(v) for v in raw]
    g = _gcd_nonzero(raw)
    if g == 0:
        raise AllZeroWeights("every weight is zero; the action is trivial")
    return WeightVector(tuple(v // g for v in raw))


@dataclass(frozen=True)
class SignProfile:
    num_negative: int
    num_zero: int
    num_positive: int

    @property
    def n(self) -> int:
        return self.num_negative + self.num_zero + self.num_positive

    @property
    def num_nonzero(self) -> int:
        return self.num_negative + self.num_positive

    @property
    def mixed(self) -> bool:
        return self.num_negative > 0 and self.num_positive > 0

    def to_json(self) -> dict:
        return {"numNegative": self.num_negative, "numZero": self.num_zero,
                "numPositive": self.num_positive}


def classify_signs(w: WeightVector) -> SignProfile:
    neg = sum(1 for a in w if a < 0)
    pos = sum(1 for a in w if a > 0)
    return SignProfile(neg, len(w) - neg - pos, pos)


@dataclass(frozen=True, order=True)
class Stabilizer:
    """Closed subgroup of the circle: finite cyclic of ``order``, or the
    whole circle when ``order`` is None."""

    order: Optional[int]

    @property
    def is_circle(self) -> bool:
        return self.order is None

    def contains(self, other: "Stabilizer") -> bool:
        """Subgroup inclusion ``other <= self``."""
        if self.is_circle:
            return True
        if other.is_circle:
            return False
        return self.order % other.order == 0

    def to_json(self):
        return FULL_CIRCLE if self.is_circle else self.order

    def __str__(self):
        if self.is_circle:
            return "S^1"
        return "1" if self.order == 1 else f"Z_{self.order}"


CIRCLE = Stabilizer(None)


def _check_support(w: WeightVector, support) -> frozenset:
    support = frozenset(int(i) for i in support)
    bad = [i for i in support if not 1 <= i <= w.n]
    if bad:
        raise ValueError(f"support indices {sorted(bad)} outside 1..{w.n}")
    return support


def stabilizer(w: WeightVector, support) -> Stabilizer:
    """Stabilizer of any point whose nonzero coordinates are exactly ``support``."""
    support = _check_support(w, support)
    g = _gcd_nonzero(w[i - 1] for i in support)
    return CIRCLE if g == 0 else Stabilizer(g)


@dataclass(frozen=True)
class StratumDescriptor:
    """One orbit-type piece of C^n (and of its image in C^n / S^1).

    ``supports`` lists every exact support realizing the stabilizer;
    ``max_support`` is the largest, whose coordinate subspace is the closure.
    """

    stabilizer: Stabilizer
    supports: tuple
    max_support: frozenset
    dimension_in_m: int
    dimension_in_quotient: int
    depth: int = 0

    def to_json(self) -> dict:
        return {
            "stabilizerOrder": self.stabilizer.to_json(),
            "supportClass": [sorted(s) for s in self.supports],
            "dimensionInM": self.dimension_in_m,
            "dimensionInQuotient": self.dimension_in_quotient,
            "depth": self.depth,
        }


def frontier_less(lower: StratumDescriptor, upper: StratumDescriptor) -> bool:
    """``lower < upper``: the lower piece sits in the closure of the upper one.

    The closure of the piece with stabilizer Z_g is the coordinate subspace on
    the indices whose weight g divides, so the relation is strict reverse
    inclusion of stabilizers.
    """
    return (lower.stabilizer != upper.stabilizer
            and lower.stabilizer.contains(upper.stabilizer))


def enumerate_orbit_types(w: WeightVector) -> list:
    """All orbit types of the linear action, largest stabilizer first.

    Supports are enumerated exhaustively (2^n of them) and grouped by
    stabilizer; connected components are not separated.
    """
    groups = {}
    for size in range(w.n + 1):
        for combo in combinations(range(1, w.n + 1), size):
            groups.setdefault(stabilizer(w, combo), []).append(frozenset(combo))

    strata = []
    for stab, supports in groups.items():
        top = max(supports, key=len)
        # the realizing supports are closed under union, so the largest is unique
        assert all(s <= top for s in supports)
        dim = 2 * len(top)
        strata.append(StratumDescriptor(
            stabilizer=stab,
            supports=tuple(sorted(supports, key=lambda s: (len(s), sorted(s)))),
            max_support=top,
            dimension_in_m=dim,
            dimension_in_quotient=dim if stab.is_circle else dim - 1,
        ))

    depth = {}
    # longest upward chain, computed from the top (principal) stratum down
    for s in sorted(strata, key=lambda s: s.dimension_in_m, reverse=True):
        above = [depth[t.stabilizer] for t in strata
                 if t.stabilizer in depth and frontier_less(s, t)]
        depth[s.stabilizer] = 1 + max(above) if above else 0

    strata = [StratumDescriptor(s.stabilizer, s.supports, s.max_support,
                                s.dimension_in_m, s.dimension_in_quotient,
                                depth[s.stabilizer]) for s in strata]
    strata.sort(key=lambda s: (-s.depth, s.dimension_in_m,
                               0 if s.stabilizer.is_circle else -s.stabilizer.order))
    return strata
