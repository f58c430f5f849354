"""Brute-force reference implementations, written without the package's algorithms.

Each oracle solves its problem the slow, obvious way.  `python3 tests/oracles.py`
regenerates tests/data/frozen.json from them.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from math import lcm
from pathlib import Path

import numpy as np

FROZEN = Path(__file__).with_name("data") / "frozen.json"


# ---------------------------------------------------------------- weights

def stabilizer_order_brute(weights, support):
    """Count k in [0, N) with exp(2 pi i k a_j / N) = 1 on the support, N = lcm|a|.

    Returns None when every rotation fixes the support (the whole circle)."""
    nz = [abs(a) for a in weights if a]
    n_grid = lcm(*nz) if nz else 1
    sup = [weights[i - 1] for i in support]
    if all(a == 0 for a in sup):
        return None
    return sum(1 for k in range(n_grid) if all((k * a) % n_grid == 0 for a in sup))


def orbit_type_oracle(weights):
    """{stabilizer order or None: max support size} over all supports."""
    n = len(weights)
    out = {}
    for r in range(n + 1):
        for s in itertools.combinations(range(1, n + 1), r):
            g = stabilizer_order_brute(weights, s)
            out[g] = max(out.get(g, 0), r)
    return out


def _contains(big, small):
    # stabilizer subgroup containment; None is the circle
    if big is None:
        return True
    if small is None:
        return False
    return big % small == 0


def depth_oracle(orders):
    """Longest chain upward from each stratum, where A < B iff stab(B) is a
    proper subgroup of stab(A); computed by trying every ordering."""
    orders = list(orders)
    depth = {o: 0 for o in orders}
    for r in range(2, len(orders) + 1):
        for chain in itertools.permutations(orders, r):
            if all(_contains(chain[i], chain[i + 1]) and chain[i] != chain[i + 1]
                   for i in range(r - 1)):
                depth[chain[0]] = max(depth[chain[0]], r - 1)
    return depth


# ---------------------------------------------------------------- invariants

@lru_cache(maxsize=None)
def _exponent_grid(dim, max_degree):
    """Every nonzero vector in N^dim of total degree <= max_degree, by degree."""
    rows = [v for d in range(1, max_degree + 1)
            for v in _compositions(d, dim)]
    return np.array(rows, dtype=np.int64)


def _compositions(total, parts):
    # stars and bars
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def hilbert_basis_brute(weights, max_degree=None):
    """All minimal nonzero (a, b) in N^2n with sum w (a - b) = 0, by enumerating
    every exponent vector up to ``max_degree`` (default 2 max|w| + 2)."""
    w = np.asarray(weights, dtype=np.int64)
    n = len(w)
    if max_degree is None:
        max_degree = 2 * int(np.max(np.abs(w))) + 2
    grid = _exponent_grid(2 * n, max_degree)
    inv = grid[grid @ np.concatenate([w, -w]) == 0]
    minimal = []
    for v in inv:
        if not any(np.all(v >= m) for m in minimal):
            minimal.append(v)
    return sorted(tuple(int(x) for x in v) for v in minimal)


# ---------------------------------------------------------------- homotopy

def simplex_sphere_homology(k):
    """Integral homology of the boundary of the (k+1)-simplex, a model of S^k,
    as {degree: (rank, torsion)} via sympy's Smith normal form."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    verts = range(k + 2)
    faces = {d: list(itertools.combinations(verts, d + 1)) for d in range(k + 1)}

    def boundary(d):
        rows, cols = faces[d - 1], faces[d]
        idx = {f: i for i, f in enumerate(rows)}
        m = [[0] * len(cols) for _ in rows]
        for j, f in enumerate(cols):
            for i in range(len(f)):
                m[idx[f[:i] + f[i + 1:]]][j] = (-1) ** i
        return Matrix(m)

    def diag(mat):
        snf = smith_normal_form(mat, domain=ZZ)
        return [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]

    out = {}
    for d in range(k + 1):
        n_d = len(faces[d])
        rank_out = len(diag(boundary(d))) if d > 0 else 0
        inc = diag(boundary(d + 1)) if d < k else []
        rank = n_d - rank_out - len(inc)
        out[d] = (rank, tuple(x for x in inc if x > 1))
    return out


def sympy_invariant_factors(matrix):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]


def sympy_group_order(ngens, relators):
    """Order of <x1..xn | relators> via sympy's coset enumeration."""
    from sympy.combinatorics.fp_groups import FpGroup
    from sympy.combinatorics.free_groups import free_group
    F, *gens = free_group(" ".join(f"x{i}" for i in range(1, ngens + 1)))
    words = []
    for r in relators:
        w = F.identity
        for x in r:
            w = w * (gens[abs(x) - 1] if x > 0 else gens[abs(x) - 1] ** -1)
        words.append(w)
    return int(FpGroup(F, words).order())


# ---------------------------------------------------------------- nerve

RP2_TRIANGLES = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
                 (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]


def edge_path_presentation(triangles):
    """Edge-path group of a 2-complex: generators are edges outside a spanning
    tree, one relator per triangle."""
    edges = sorted({tuple(sorted(e)) for t in triangles for e in itertools.combinations(t, 2)})
    verts = sorted({v for t in triangles for v in t})
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    tree = set()
    for a, b in edges:
        if find(a) != find(b):
            parent[find(a)] = find(b)
            tree.add((a, b))
    gens = {e: i + 1 for i, e in enumerate(e for e in edges if e not in tree)}

    def letter(a, b):
        e = (min(a, b), max(a, b))
        if e not in gens:
            return []
        return [gens[e] if a < b else -gens[e]]

    rels = []
    for a, b, c in triangles:
        w = letter(a, b) + letter(b, c) + letter(c, a)
        if w:
            rels.append(w)
    return len(gens), rels


def abelian_orders_oracle(table):
    """Multiset of element orders of a group given by a Cayley table."""
    n = len(table)
    e = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    orders = []
    for a in range(n):
        k, x = 1, a
        while x != e:
            x = table[x][a]
            k += 1
        orders.append(k)
    return sorted(orders)


# ---------------------------------------------------------------- freezing

HILBERT_CASES = [[1, -1], [1], [2, -3], [1, 1, -2], [1, -1, 0], [3, -4], [1, 2, -3]]
STABILIZER_CASES = [([2, 3], [1]), ([2, 3], []), ([2, 3], [1, 2]), ([4, 6, 0, 9], [1, 2]),
                    ([4, 6, 0, 9], [3]), ([6, -4, 9], [1, 2])]
ORBIT_TYPE_CASES = [[1, -1], [2, 3], [1], [2, 3, 6], [2, 4, -3, 0]]
PRESENTATIONS = {
    "Z3": (1, [[1, 1, 1]]),
    "S3": (2, [[1, 1], [2, 2, 2], [1, 2, 1, 2]]),
    "Q8": (2, [[1, 1, 1, 1], [1, 1, -2, -2], [-2, 1, 2, 1]]),
    "A5": (2, [[1, 1], [2, 2, 2], [1, 2] * 5]),
    "Z2xZ4": (2, [[1, 1], [2, 2, 2, 2], [1, 2, -1, -2]]),
}


def build_frozen():
    n_rp2, rels_rp2 = edge_path_presentation(RP2_TRIANGLES)
    return {
        "hilbert": {json.dumps(w): [list(v) for v in hilbert_basis_brute(w)] for w in HILBERT_CASES},
        "stabilizer": [[w, s, stabilizer_order_brute(w, s)] for w, s in STABILIZER_CASES],
        "orbitTypes": {json.dumps(w): {str(k): v for k, v in orbit_type_oracle(w).items()}
                       for w in ORBIT_TYPE_CASES},
        "sphereHomology": {str(k): {str(d): list(v) for d, v in simplex_sphere_homology(k).items()}
                           for k in range(1, 6)},
        "groupOrders": {name: sympy_group_order(*p) for name, p in PRESENTATIONS.items()},
        "rp2": {"generators": n_rp2, "order": sympy_group_order(n_rp2, rels_rp2)},
    }


def load_frozen():
    return json.loads(FROZEN.read_text())


if __name__ == "__main__":
    FROZEN.parent.mkdir(exist_ok=True)
    FROZEN.write_text(json.dumps(build_frozen(), indent=1, sort_keys=True) + "\n")
    print(f"wrote {FROZEN}")
