"""Homotopy groups of spheres pi_p(S^k) for k <= 15, p <= 15, stems p - k <= 7.

Values follow Toda's tables.  pi_p(S^1) is known in every degree (the
universal cover is contractible); for k >= 2 stems beyond 7 raise OutOfTable.
"""

from __future__ import annotations

from ..errors import OutOfTable
from .abelian import FgAbelianGroup, TRIVIAL, Z

K_MAX = 15
P_MAX = 15
STEM_MAX = 7


def _g(rank=0, *torsion):
    return FgAbelianGroup(rank, tuple(torsion))


# _UNSTABLE[stem][k]: entries before the stable range; _STABLE[stem] afterwards
_STABLE = {
    1: _g(0, 2),
    2: _g(0, 2),
    3: _g(0, 24),
    4: TRIVIAL,
    5: TRIVIAL,
    6: _g(0, 2),
    7: _g(0, 240),
}
_UNSTABLE = {
    1: {2: Z},
    2: {},
    3: {2: _g(0, 2), 3: _g(0, 12), 4: _g(1, 12)},
    4: {2: _g(0, 12), 3: _g(0, 2), 4: _g(0, 2, 2), 5: _g(0, 2)},
    5: {2: _g(0, 2), 3: _g(0, 2), 4: _g(0, 2, 2), 5: _g(0, 2), 6: Z},
    6: {2: _g(0, 2), 3: _g(0, 3), 4: _g(0, 24, 3), 5: _g(0, 2), 6: _g(0, 2), 7: _g(0, 2)},
    7: {2: _g(0, 3), 3: _g(0, 15), 4: _g(0, 15), 5: _g(0, 30), 6: _g(0, 60),
        7: _g(0, 120), 8: _g(1, 120)},
}


def in_table(p: int, k: int) -> bool:
    if k < 1 or p < 0:
        return False
    if k == 1 or p <= k:
        return True
    return k <= K_MAX and p <= P_MAX and p - k <= STEM_MAX


def sphere_pi(p: int, k: int) -> FgAbelianGroup:
    """pi_p(S^k)."""
    if k < 1 or p < 0:
        raise ValueError(f"pi_{p}(S^{k}) undefined: need p >= 0, k >= 1")
    if p < k:
        return TRIVIAL
    if p == k:
        return Z
    if k == 1:
        return TRIVIAL
    if not in_table(p, k):
        raise OutOfTable(f"pi_{p}(S^{k}) is outside the shipped table")
    stem = p - k
    return _UNSTABLE[stem].get(k, _STABLE[stem])


def sphere_pi_rank(p: int, k: int) -> int:
    """Rank of pi_p(S^k); known in all degrees (Serre)."""
    return 0 if sphere_pi_finite(p, k) else 1


def sphere_pi_finite(p: int, k: int) -> bool:
    if k < 1 or p < 0:
        raise ValueError(f"pi_{p}(S^{k}) undefined: need p >= 0, k >= 1")
    return not (p == k or (k % 2 == 0 and p == 2 * k - 1))


def table_entries():
    """Every (p, k, group) the table can answer for 1 <= k <= 15, 0 <= p <= 15."""
    for k in range(1, K_MAX + 1):
        for p in range(0, P_MAX + 1):
            if in_table(p, k):
                yield p, k, sphere_pi(p, k)
