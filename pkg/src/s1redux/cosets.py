"""Todd-Coxeter coset enumeration (HLT strategy with coincidence processing).

Words are sequences of nonzero ints: ``i`` is generator i (1-based), ``-i``
its inverse.

>>> enumerate_cosets(1, [[1, 1, 1]]).index
3
>>> enumerate_cosets(2, [[1, 1], [2, 2, 2], [1, 2, 1, 2]]).index
6
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EnumerationBudgetExceeded

DEFAULT_MAX_COSETS = 100_000


@dataclass
class CosetTable:
    num_generators: int
    # perms[i][c]: image of coset c under generator i+1 (cosets renumbered 0..index-1)
    perms: list

    @property
    def index(self) -> int:
        return len(self.perms[0]) if self.perms else 1


class _Enumerator:
    def __init__(self, ngens, max_cosets):
        self.ngens = ngens
        self.cols = 2 * ngens
        self.max_cosets = max_cosets
        self.table = [[None] * self.cols]
        self.parent = [0]
        self.live_count = 1

    def col(self, letter):
        return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1

    @staticmethod
    def inv(col):
        return col ^ 1

    def new_coset(self):
        if len(self.table) >= self.max_cosets:
            raise EnumerationBudgetExceeded(
                f"coset enumeration exceeded {self.max_cosets} cosets")
        self.table.append([None] * self.cols)
        self.parent.append(len(self.parent))
        self.live_count += 1
        return len(self.table) - 1

    def find(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def live(self, c):
        return self.parent[c] == c

    def define(self, c, col):
        d = self.new_coset()
        self.table[c][col] = d
        self.table[d][self.inv(col)] = c
        return d

    def merge(self, a, b, queue):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live_count -= 1
        queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.cols):
                f = self.table[e][x]
                if f is None:
                    continue
                self.table[f][self.inv(x)] = None
                e1, f1 = self.find(e), self.find(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][self.inv(x)] is not None:
                    self.merge(e1, self.table[f1][self.inv(x)], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][self.inv(x)] = e1

    def scan_and_fill(self, c, word):
        cols = [self.col(x) for x in word]
        if not cols:
            return
        f, b = c, c
        i, j = 0, len(cols) - 1
        while True:
            while i <= j and self.table[f][cols[i]] is not None:
                f = self.table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][self.inv(cols[j])] is not None:
                b = self.table[b][self.inv(cols[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                self.table[f][cols[i]] = b
                self.table[b][self.inv(cols[i])] = f
                return
            self.define(f, cols[i])

    def run(self, relators, subgroup):
        for w in subgroup:
            self.scan_and_fill(0, w)
        c = 0
        while c < len(self.table):
            for r in relators:
                if not self.live(c):
                    break
                self.scan_and_fill(c, r)
            if self.live(c):
                for x in range(self.cols):
                    if self.table[c][x] is None:
                        self.define(c, x)
            c += 1

    def compact(self):
        live = [c for c in range(len(self.table)) if self.live(c)]
        index = {c: i for i, c in enumerate(live)}
        perms = []
        for g in range(self.ngens):
            perms.append([index[self.find(self.table[c][2 * g])] for c in live])
        return perms


def enumerate_cosets(num_generators: int, relators, subgroup=(),
                     max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Coset table of ``subgroup`` in <generators | relators>.

    Raises EnumerationBudgetExceeded once more than ``max_cosets`` cosets
    have been defined (live or dead).
    """
    e = _Enumerator(num_generators, max_cosets)
    e.run([list(r) for r in relators if r], [list(w) for w in subgroup if w])
    return CosetTable(num_generators, e.compact())


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out
