"""Small finite groups given by multiplication tables.

>>> cyclic_group(4).exponent
4
>>> g = symmetric_group(3)
>>> g.order, g.is_abelian, g.exponent
(6, False, 6)
>>> print(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(2))))
Z_2 + Z_2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from math import lcm

from .errors import InvalidGroupoid
from .homotopy.abelian import FgAbelianGroup


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple
    table: tuple  # table[a][b] = a*b
    identity: int

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @property
    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in range(self.order)))

    @property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def subgroup(self, members) -> "FiniteGroup":
        members = sorted(members)
        idx = {m: i for i, m in enumerate(members)}
        table = tuple(tuple(idx[self.table[a][b]] for b in members) for a in members)
        return FiniteGroup(tuple(self.labels[m] for m in members), table, idx[self.identity])


def from_table(table, labels=None) -> FiniteGroup:
    """Validate a Cayley table (rows are left factors) and wrap it."""
    n = len(table)
    rows = tuple(tuple(int(x) for x in row) for row in table)
    if n == 0 or any(len(r) != n or any(not 0 <= x < n for x in r) for r in rows):
        raise InvalidGroupoid("group table must be a square table of indices 0..n-1")
    ident = [e for e in range(n) if all(rows[e][a] == a == rows[a][e] for a in range(n))]
    if not ident:
        raise InvalidGroupoid("group table has no identity")
    e = ident[0]
    for a in range(n):
        if sorted(rows[a]) != list(range(n)):
            raise InvalidGroupoid(f"row {a} of the group table is not a permutation")
        if not any(rows[a][b] == e for b in range(n)):
            raise InvalidGroupoid(f"element {a} has no inverse")
    for a, b, c in product(range(n), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise InvalidGroupoid(f"group table is not associative at {(a, b, c)}")
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    return FiniteGroup(labels, rows, e)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(tuple(str(i) for i in range(n)), table, 0)


def symmetric_group(k: int) -> FiniteGroup:
    perms = list(permutations(range(k)))
    idx = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = tuple(tuple(idx[tuple(p[q[x]] for x in range(k))] for q in perms) for p in perms)
    labels = tuple("".join(str(x + 1) for x in p) for p in perms)
    return FiniteGroup(labels, table, idx[tuple(range(k))])


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    table = tuple(
        tuple(g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(g.order * m))
        for a in range(g.order * m))
    labels = tuple(f"({x},{y})" for x in g.labels for y in h.labels)
    return FiniteGroup(labels, table, g.identity * m + h.identity)


_NAME = re.compile(r"^\s*([ZS])_?(\d+)\s*$")


def parse_group(spec) -> FiniteGroup:
    """``"Z_n"``, ``"S_k"``, products joined by ``x``, or a Cayley table."""
    if isinstance(spec, list):
        return from_table(spec)
    if not isinstance(spec, str):
        raise InvalidGroupoid(f"cannot read a group from {spec!r}")
    out = None
    for part in spec.split("x"):
        m = _NAME.match(part)
        if not m:
            raise InvalidGroupoid(f"unknown group name {part!r}")
        n = int(m.group(2))
        if m.group(1) == "S" and not 1 <= n <= 5:
            raise InvalidGroupoid("symmetric groups are limited to S_1..S_5")
        g = cyclic_group(n) if m.group(1) == "Z" else symmetric_group(n)
        out = g if out is None else direct_product(out, g)
    return out


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _power(g: FiniteGroup, a: int, k: int) -> int:
    x = g.identity
    for _ in range(k):
        x = g.table[x][a]
    return x


def abelian_invariants(g: FiniteGroup) -> FgAbelianGroup:
    """Isomorphism type of a finite abelian group from element-order counts.

    For each prime p, the number of cyclic p-factors of size at least p^k is
    log_p |{x : x^(p^k) = 1}| - log_p |{x : x^(p^(k-1)) = 1}|.
    """
    if not g.is_abelian:
        raise ValueError("group is not abelian")
    orders = [g.element_order(a) for a in range(g.order)]
    factors = []
    for p in _prime_factors(g.order):
        logs, k = [0], 1
        while True:
            count = sum(1 for o in orders if (p ** k) % o == 0)
            e = 0
            while p ** (e + 1) <= count:
                e += 1
            logs.append(e)
            if count == p ** (_p_part(g.order, p)):
                break
            k += 1
        at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))] + [0]
        for i in range(len(at_least) - 1):
            factors += [p ** (i + 1)] * (at_least[i] - at_least[i + 1])
    return FgAbelianGroup(0, tuple(factors))


def _p_part(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
