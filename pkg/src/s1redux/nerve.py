"""Finite groupoids, their nerves, and pi_1 of their classifying spaces.

Conventions: an arrow g goes from s(g) to t(g); a pair (g, h) is composable
when s(g) = t(h), and gh means "h first, then g".  A level-n simplex is a
chain (g_1, ..., g_n) with s(g_i) = t(g_{i+1}).  Faces: d_0 drops g_1, d_n
drops g_n, d_i (0 < i < n) replaces g_i, g_{i+1} by g_i g_{i+1}; on level 1,
d_0 = s and d_1 = t.  Degeneracy e_i inserts a unit after g_i (e_0 puts the
unit at t(g_1) in front).  Level-0 simplices are object indices.

>>> z2 = group_groupoid(cyclic_group(2))
>>> len(nerve_level(z2, 2).tuples)
4
>>> print(pi1_of_classifying_space(group_groupoid(cyclic_group(3))))
Z_3
>>> print(pi1_of_classifying_space(pair_groupoid(3)))
1
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import lcm

from .cosets import DEFAULT_MAX_COSETS, enumerate_cosets, free_reduce
from .errors import (EnumerationBudgetExceeded, InvalidGroupoid, LevelTooLarge,
                     NotAWeakEquivalence, SchemaError)
from .finite_groups import FiniteGroup, abelian_invariants, cyclic_group, parse_group
from .homotopy.abelian import FgAbelianGroup

MAX_LEVEL = 6
MAX_CHECK_LEVEL = 5


class FiniteGroupoid:
    """A finite groupoid with an explicit composition table.

    ``compose`` maps composable index pairs (g, h) to gh.  Units and inverses
    are inferred when not given.  With ``validate=True`` every groupoid law
    is checked exhaustively and InvalidGroupoid is raised on failure.
    """

    def __init__(self, objects, arrows, src, tgt, compose, unit=None, inverse=None,
                 validate=True):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.compose = dict(compose)
        if len(self.src) != len(self.arrows) or len(self.tgt) != len(self.arrows):
            raise InvalidGroupoid("source/target maps must cover every arrow")
        if len(set(self.objects)) != len(self.objects) or len(set(self.arrows)) != len(self.arrows):
            raise InvalidGroupoid("object and arrow labels must be distinct")
        self._out = {}
        for g in range(len(self.arrows)):
            self._out.setdefault(self.tgt[g], []).append(g)
        self._into = {}
        for g in range(len(self.arrows)):
            self._into.setdefault(self.src[g], []).append(g)
        self.unit = tuple(unit) if unit is not None else self._infer_units(validate)
        self.inverse = tuple(inverse) if inverse is not None else self._infer_inverses(validate)
        if validate:
            self.validate()

    # arrows with target x, i.e. those g with (h, g) composable for s(h) = x
    def arrows_ending_at(self, x):
        return self._out.get(x, [])

    def arrows_starting_at(self, x):
        return self._into.get(x, [])

    @property
    def num_objects(self):
        return len(self.objects)

    @property
    def num_arrows(self):
        return len(self.arrows)

    def mul(self, g, h):
        return self.compose[(g, h)]

    def _infer_units(self, strict):
        units = []
        for x in range(self.num_objects):
            cands = [g for g in range(self.num_arrows)
                     if self.src[g] == x == self.tgt[g]
                     and all(self.compose.get((g, h)) == h for h in self.arrows_ending_at(x))
                     and all(self.compose.get((h, g)) == h for h in self.arrows_starting_at(x))]
            if not cands:
                if strict:
                    raise InvalidGroupoid(f"object {self.objects[x]!r} has no unit arrow")
                cands = [g for g in range(self.num_arrows) if self.src[g] == x == self.tgt[g]]
                if not cands:
                    raise InvalidGroupoid(f"object {self.objects[x]!r} has no loop")
            units.append(cands[0])
        return tuple(units)

    def _infer_inverses(self, strict):
        inv = []
        for g in range(self.num_arrows):
            cands = [h for h in self.arrows_starting_at(self.tgt[g])
                     if self.tgt[h] == self.src[g]
                     and self.compose.get((h, g)) == self.unit[self.src[g]]
                     and self.compose.get((g, h)) == self.unit[self.tgt[g]]]
            if not cands:
                if strict:
                    raise InvalidGroupoid(f"arrow {self.arrows[g]!r} has no inverse")
                cands = [g]
            inv.append(cands[0])
        return tuple(inv)

    def validate(self):
        n = self.num_arrows
        for g in range(n):
            for h in self.arrows_ending_at(self.src[g]):
                gh = self.compose.get((g, h))
                if gh is None:
                    raise InvalidGroupoid(
                        f"missing composite of {self.arrows[g]!r} and {self.arrows[h]!r}")
                if self.src[gh] != self.src[h] or self.tgt[gh] != self.tgt[g]:
                    raise InvalidGroupoid(f"composite {self.arrows[gh]!r} has wrong endpoints")
        for (g, h) in self.compose:
            if self.src[g] != self.tgt[h]:
                raise InvalidGroupoid(
                    f"composite given for non-composable {self.arrows[g]!r}, {self.arrows[h]!r}")
        for g in range(n):
            if self.compose[(self.unit[self.tgt[g]], g)] != g or \
                    self.compose[(g, self.unit[self.src[g]])] != g:
                raise InvalidGroupoid(f"unit law fails at {self.arrows[g]!r}")
            i = self.inverse[g]
            if self.compose.get((i, g)) != self.unit[self.src[g]] or \
                    self.compose.get((g, i)) != self.unit[self.tgt[g]]:
                raise InvalidGroupoid(f"inverse law fails at {self.arrows[g]!r}")
        for g in range(n):
            for h in self.arrows_ending_at(self.src[g]):
                gh = self.compose[(g, h)]
                for k in self.arrows_ending_at(self.src[h]):
                    if self.compose[(gh, k)] != self.compose[(g, self.compose[(h, k)])]:
                        raise InvalidGroupoid(
                            "composition is not associative at "
                            f"{(self.arrows[g], self.arrows[h], self.arrows[k])}")

    def with_compose(self, compose, validate=False) -> "FiniteGroupoid":
        """Same objects, arrows, units and inverses, different composition table."""
        return FiniteGroupoid(self.objects, self.arrows, self.src, self.tgt, compose,
                              self.unit, self.inverse, validate=validate)

    def components(self):
        """Object index lists of the connected components, in order of first object."""
        seen, comps = set(), []
        for x in range(self.num_objects):
            if x in seen:
                continue
            comp, queue = [], deque([x])
            seen.add(x)
            while queue:
                y = queue.popleft()
                comp.append(y)
                for g in self.arrows_starting_at(y):
                    if self.tgt[g] not in seen:
                        seen.add(self.tgt[g])
                        queue.append(self.tgt[g])
            comps.append(sorted(comp))
        return comps

    def hom(self, x, y):
        return [g for g in self.arrows_starting_at(x) if self.tgt[g] == y]

    def object_index(self, label):
        try:
            return self.objects.index(label)
        except ValueError:
            raise InvalidGroupoid(f"unknown object {label!r}") from None

    def to_json(self) -> dict:
        return {
            "objects": list(self.objects),
            "arrows": [{"id": a, "src": self.objects[s], "tgt": self.objects[t]}
                       for a, s, t in zip(self.arrows, self.src, self.tgt)],
            "compose": [[self.arrows[g], self.arrows[h], self.arrows[gh]]
                        for (g, h), gh in sorted(self.compose.items())],
        }


def group_groupoid(group: FiniteGroup) -> FiniteGroupoid:
    n = group.order
    compose = {(a, b): group.table[a][b] for a in range(n) for b in range(n)}
    return FiniteGroupoid(("*",), group.labels, (0,) * n, (0,) * n, compose)


def action_groupoid(group: FiniteGroup, points, action) -> FiniteGroupoid:
    """G acting on a finite set; ``action[g][x]`` is the index of g.x.

    The arrow (g, x) goes from x to g.x, and (h, g.x)(g, x) = (hg, x).
    """
    points = tuple(points)
    m = len(points)
    act = [[int(y) for y in row] for row in action]
    if len(act) != group.order or any(len(r) != m for r in act):
        raise InvalidGroupoid("action table must have one row per group element, one entry per point")
    for x in range(m):
        if act[group.identity][x] != x:
            raise InvalidGroupoid("the identity must act trivially")
        for g, h in product(range(group.order), repeat=2):
            if act[group.table[h][g]][x] != act[h][act[g][x]]:
                raise InvalidGroupoid("action table is not compatible with the group law")
    arrows, src, tgt = [], [], []
    for g in range(group.order):
        for x in range(m):
            arrows.append(f"({group.labels[g]},{points[x]})")
            src.append(x)
            tgt.append(act[g][x])
    compose = {}
    for g in range(group.order):
        for x in range(m):
            for h in range(group.order):
                compose[(h * m + act[g][x], g * m + x)] = group.table[h][g] * m + x
    return FiniteGroupoid(points, arrows, src, tgt, compose)


def pair_groupoid(k: int) -> FiniteGroupoid:
    """One arrow (a, b) from a to b for every ordered pair of objects."""
    objs = tuple(str(i) for i in range(k))
    arrows = [(a, b) for a in range(k) for b in range(k)]
    idx = {p: i for i, p in enumerate(arrows)}
    compose = {(idx[(b, c)], idx[(a, b)]): idx[(a, c)]
               for a in range(k) for b in range(k) for c in range(k)}
    return FiniteGroupoid(objs, [f"({a},{b})" for a, b in arrows],
                          [a for a, _ in arrows], [b for _, b in arrows], compose)


def trivial_groupoid(objects) -> FiniteGroupoid:
    """M => M: only unit arrows."""
    objs = tuple(objects)
    n = len(objs)
    return FiniteGroupoid(objs, [f"1_{x}" for x in objs], range(n), range(n),
                          {(i, i): i for i in range(n)})


_GROUPOID_KEYS = {"objects", "arrows", "compose"}
_ACTION_KEYS = {"group", "set", "action"}


def groupoid_from_json(doc) -> FiniteGroupoid:
    """Read either groupoid data or finite-action data; unknown fields are rejected."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise SchemaError("groupoid description must be a JSON object")
    keys = set(doc)
    if "group" in keys:
        if keys - _ACTION_KEYS or not keys >= {"group", "set"}:
            raise SchemaError(f"action description fields must be {sorted(_ACTION_KEYS)}")
        group = parse_group(doc["group"])
        points = list(doc["set"])
        action = doc.get("action")
        if action is None:
            action = [list(range(len(points)))] * group.order
        elif action and not isinstance(action[0][0], int):
            index = {p: i for i, p in enumerate(points)}
            action = [[index[y] for y in row] for row in action]
        return action_groupoid(group, points, action)
    if keys != _GROUPOID_KEYS:
        raise SchemaError(f"groupoid description fields must be exactly {sorted(_GROUPOID_KEYS)}")
    objects = list(doc["objects"])
    oidx = {o: i for i, o in enumerate(objects)}
    arrows, src, tgt = [], [], []
    for a in doc["arrows"]:
        if not isinstance(a, dict) or set(a) != {"id", "src", "tgt"}:
            raise SchemaError("each arrow needs exactly the fields id, src, tgt")
        if a["src"] not in oidx or a["tgt"] not in oidx:
            raise InvalidGroupoid(f"arrow {a['id']!r} has an unknown endpoint")
        arrows.append(a["id"])
        src.append(oidx[a["src"]])
        tgt.append(oidx[a["tgt"]])
    aidx = {a: i for i, a in enumerate(arrows)}
    compose = {}
    for entry in doc["compose"]:
        if len(entry) != 3 or any(e not in aidx for e in entry):
            raise InvalidGroupoid(f"bad composition entry {entry!r}")
        g, h, gh = (aidx[e] for e in entry)
        if (g, h) in compose and compose[(g, h)] != gh:
            raise InvalidGroupoid(f"conflicting composites for {entry[0]!r}, {entry[1]!r}")
        compose[(g, h)] = gh
    return FiniteGroupoid(objects, arrows, src, tgt, compose)


# ---------------------------------------------------------------- nerve

def _level_tuples(G: FiniteGroupoid, n: int):
    if n == 0:
        return list(range(G.num_objects))
    chains = [(g,) for g in range(G.num_arrows)]
    for _ in range(n - 1):
        chains = [c + (h,) for c in chains for h in G.arrows_ending_at(G.src[c[-1]])]
    return chains


def face(G: FiniteGroupoid, n: int, i: int, simplex):
    """d^n_i; raises KeyError if a needed composite is missing."""
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range for level {n}")
    if n == 1:
        g = simplex[0]
        return G.src[g] if i == 0 else G.tgt[g]
    if i == 0:
        return simplex[1:]
    if i == n:
        return simplex[:-1]
    return simplex[:i - 1] + (G.compose[(simplex[i - 1], simplex[i])],) + simplex[i + 1:]


def degeneracy(G: FiniteGroupoid, n: int, i: int, simplex):
    """e^n_i from level n to level n + 1."""
    if not 0 <= i <= n:
        raise IndexError(f"degeneracy index {i} out of range for level {n}")
    if n == 0:
        return (G.unit[simplex],)
    if i == 0:
        return (G.unit[G.tgt[simplex[0]]],) + simplex
    return simplex[:i] + (G.unit[G.src[simplex[i - 1]]],) + simplex[i:]


@dataclass
class NerveLevel:
    groupoid: FiniteGroupoid
    n: int
    tuples: list

    def face(self, i, simplex):
        return face(self.groupoid, self.n, i, simplex)

    def degeneracy(self, i, simplex):
        return degeneracy(self.groupoid, self.n, i, simplex)

    def is_degenerate(self, simplex) -> bool:
        if self.n == 0:
            return False
        units = set(self.groupoid.unit)
        return any(g in units for g in simplex)

    def labels(self):
        G = self.groupoid
        if self.n == 0:
            return [G.objects[x] for x in self.tuples]
        return [[G.arrows[g] for g in t] for t in self.tuples]


def nerve_level(G: FiniteGroupoid, n: int) -> NerveLevel:
    if n < 0:
        raise ValueError("nerve level must be non-negative")
    if n > MAX_LEVEL:
        raise LevelTooLarge(f"nerve level {n} exceeds the size guard {MAX_LEVEL}")
    return NerveLevel(G, n, _level_tuples(G, n))


@dataclass
class SimplicialReport:
    ok: bool
    n_max: int
    checked: int
    violation: dict = None
    nondegenerate: list = field(default_factory=list)

    @property
    def all_degenerate(self) -> bool:
        return all(c == 0 for c in self.nondegenerate[1:])

    def to_json(self) -> dict:
        return {"ok": self.ok, "nMax": self.n_max, "checked": self.checked,
                "violation": self.violation, "nondegenerate": self.nondegenerate,
                "allDegenerate": self.all_degenerate}


def _safe(fn, *args):
    try:
        return fn(*args)
    except KeyError:
        return None


def check_simplicial_identities(G: FiniteGroupoid, n_max: int = 4) -> SimplicialReport:
    """Check every simplicial identity whose top level is at most ``n_max``.

    Level n covers d_i d_j on level n, d_i e_j from level n - 1 into level n,
    and e_i e_j from level n - 2 into level n.  Levels are scanned upward, so
    the first violation reported is one at the lowest possible level.
    """
    if n_max > MAX_CHECK_LEVEL:
        raise LevelTooLarge(f"identity checks are limited to level {MAX_CHECK_LEVEL}")
    levels = [set(_level_tuples(G, n)) for n in range(n_max + 1)]
    checked = 0
    nondeg = [len(levels[0])]
    units = set(G.unit)
    for n in range(1, n_max + 1):
        nondeg.append(sum(1 for t in levels[n] if not units.intersection(t)))

    def fail(n, identity, simplex, lhs, rhs):
        lab = (G.objects[simplex] if isinstance(simplex, int)
               else [G.arrows[g] for g in simplex])
        return SimplicialReport(False, n_max, checked, {
            "level": n, "identity": identity, "simplex": lab,
            "lhs": repr(lhs), "rhs": repr(rhs)}, nondeg)

    for n in range(1, n_max + 1):
        # faces land in the nerve
        for x in sorted(levels[n]):
            for i in range(n + 1):
                y = _safe(face, G, n, i, x)
                checked += 1
                if y is None or y not in levels[n - 1]:
                    return fail(n, f"d_{i} lands in level {n - 1}", x, y, "a simplex")
        if n >= 2:
            for x in sorted(levels[n]):
                for j in range(1, n + 1):
                    for i in range(j):
                        a = _safe(lambda: face(G, n - 1, i, face(G, n, j, x)))
                        b = _safe(lambda: face(G, n - 1, j - 1, face(G, n, i, x)))
                        checked += 1
                        if a is None or a != b:
                            return fail(n, f"d_{i} d_{j} = d_{j - 1} d_{i}", x, a, b)
        m = n - 1
        for x in sorted(levels[m]):
            for j in range(m + 1):
                y = degeneracy(G, m, j, x)
                checked += 1
                if y not in levels[n]:
                    return fail(n, f"e_{j} lands in level {n}", x, y, "a simplex")
                for i in range(n + 1):
                    got = _safe(face, G, n, i, y)
                    if i < j:
                        want = _safe(lambda: degeneracy(G, m - 1, j - 1, face(G, m, i, x)))
                        name = f"d_{i} e_{j} = e_{j - 1} d_{i}"
                    elif i in (j, j + 1):
                        want = x
                        name = f"d_{i} e_{j} = id"
                    else:
                        want = _safe(lambda: degeneracy(G, m - 1, j, face(G, m, i - 1, x)))
                        name = f"d_{i} e_{j} = e_{j} d_{i - 1}"
                    checked += 1
                    if got is None or got != want:
                        return fail(n, name, x, got, want)
        if n >= 2:
            m = n - 2
            for x in sorted(levels[m]):
                for j in range(m + 1):
                    for i in range(j + 1):
                        a = degeneracy(G, m + 1, i, degeneracy(G, m, j, x))
                        b = degeneracy(G, m + 1, j + 1, degeneracy(G, m, i, x))
                        checked += 1
                        if a != b:
                            return fail(n, f"e_{i} e_{j} = e_{j + 1} e_{i}", x, a, b)
    return SimplicialReport(True, n_max, checked, None, nondeg)


# ---------------------------------------------------------------- pi_1

@dataclass
class FinitePresentationResult:
    """pi_1 that is not stored as an abelian group: generators, relators and,
    when coset enumeration finished, order / exponent certificates."""
    generators: list
    relators: list
    order: int = None
    exponent: int = None
    abelian: bool = None

    def to_json(self) -> dict:
        return {"generators": self.generators, "relators": self.relators,
                "order": self.order, "exponent": self.exponent, "abelian": self.abelian}

    def __str__(self):
        if self.order is None:
            return f"<{', '.join(self.generators)} | {len(self.relators)} relators>"
        return f"non-abelian group of order {self.order}, exponent {self.exponent}"


def _word_str(word, names):
    return " ".join(names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in word) or "1"


def triangle_presentation(G: FiniteGroupoid, basepoint=0):
    """Edge-path presentation of pi_1(BG, basepoint) from the 2-skeleton.

    Returns (names, relators): generators are the non-unit arrows of the
    component outside a BFS spanning tree, one relator per composable pair.
    Relator words follow the path h, then g, then back along gh.
    """
    comp = next(c for c in G.components() if basepoint in c)
    comp_set = set(comp)
    units = set(G.unit)
    tree, seen, queue = set(), {basepoint}, deque([basepoint])
    while queue:
        x = queue.popleft()
        for g in G.arrows_starting_at(x) + G.arrows_ending_at(x):
            if g in units:
                continue
            y = G.tgt[g] if G.src[g] == x else G.src[g]
            if y not in seen:
                seen.add(y)
                tree.add(g)
                queue.append(y)
    arrows = [g for g in range(G.num_arrows)
              if G.src[g] in comp_set and g not in units and g not in tree]
    gen = {g: i + 1 for i, g in enumerate(arrows)}
    names = [str(G.arrows[g]) for g in arrows]

    def letter(g, sign=1):
        return [sign * gen[g]] if g in gen else []

    relators = []
    for g in range(G.num_arrows):
        if G.src[g] not in comp_set:
            continue
        for h in G.arrows_ending_at(G.src[g]):
            w = free_reduce(letter(h) + letter(g) + letter(G.compose[(g, h)], -1))
            if w:
                relators.append(w)
    return names, relators


def _simplify(ngens, relators):
    """Drop generators killed or identified by relators of length at most 2."""
    rels = [list(r) for r in relators]
    alive = list(range(1, ngens + 1))
    changed = True
    while changed:
        changed = False
        for r in rels:
            r[:] = _cyclic_reduce(free_reduce(r))
        rels = [r for r in rels if r]
        for r in rels:
            sub = None
            if len(r) == 1:
                sub = (abs(r[0]), [])
            elif len(r) == 2 and abs(r[0]) != abs(r[1]):
                # x^a y^b = 1 -> y = x^(-a b)
                x, y = r
                sub = (abs(y), [-x if y > 0 else x])
            if sub:
                var, repl = sub
                inv = [-v for v in reversed(repl)]
                rels = [sum(([v] if abs(v) != var else (repl if v > 0 else inv) for v in w), [])
                        for w in rels]
                alive.remove(var)
                changed = True
                break
    renum = {g: i + 1 for i, g in enumerate(alive)}
    out = []
    for r in rels:
        w = [renum[abs(v)] * (1 if v > 0 else -1) for v in r]
        if w:
            out.append(w)
    return alive, out


def _cyclic_reduce(w):
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def _apply(perms, word, c):
    for x in word:
        p = perms[abs(x) - 1]
        c = p[c] if x > 0 else p.index(c)
    return c


def _certificates(perms, order, max_exponent_order=20000):
    """Abelian flag and exponent of the group acting regularly on its cosets."""
    abelian = all(perms[a][perms[b][c]] == perms[b][perms[a][c]]
                  for a in range(len(perms)) for b in range(a) for c in range(order))
    if order > max_exponent_order:
        return abelian, None
    inverse = [[0] * order for _ in perms]
    for k, p in enumerate(perms):
        for c, d in enumerate(p):
            inverse[k][d] = c
    # BFS words from the base coset name the group elements
    words = {0: []}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for k, p in enumerate(perms):
            for d, step in ((p[c], k + 1), (inverse[k][c], -(k + 1))):
                if d not in words:
                    words[d] = words[c] + [step]
                    queue.append(d)
    exp = 1
    for c, w in words.items():
        m, x = 1, c
        while x != 0:
            for s in w:
                x = perms[s - 1][x] if s > 0 else inverse[-s - 1][x]
            m += 1
        exp = lcm(exp, m)
    return abelian, exp


def pi1_of_classifying_space(G: FiniteGroupoid, basepoint=0, max_cosets=DEFAULT_MAX_COSETS,
                             allow_presentation=False):
    """pi_1 of the basepoint's component of BG.

    Abelian answers come back as FgAbelianGroup; non-abelian ones as a
    FinitePresentationResult with order and exponent.  If coset enumeration
    exceeds ``max_cosets``, EnumerationBudgetExceeded is raised unless
    ``allow_presentation`` is set, in which case the bare presentation is
    returned.  ``basepoint`` is an object index or label.
    """
    if not isinstance(basepoint, int) or isinstance(basepoint, bool):
        basepoint = G.object_index(basepoint)
    names, relators = triangle_presentation(G, basepoint)
    alive, rels = _simplify(len(names), relators)
    names = [names[g - 1] for g in alive]
    if not names:
        return FgAbelianGroup()
    try:
        table = enumerate_cosets(len(names), rels, max_cosets=max_cosets)
    except EnumerationBudgetExceeded:
        if allow_presentation:
            return FinitePresentationResult(names, [_word_str(r, names) for r in rels])
        raise
    abelian, exp = _certificates(table.perms, table.index)
    if abelian:
        matrix = [[sum(1 if v == g + 1 else -1 if v == -(g + 1) else 0 for v in r)
                   for g in range(len(names))] for r in rels]
        return FgAbelianGroup.from_relations(matrix, len(names)) if matrix else \
            FgAbelianGroup(len(names))
    return FinitePresentationResult(names, [_word_str(r, names) for r in rels],
                                    table.index, exp, False)


def same_group(a, b) -> bool:
    """Abstract-group agreement: normal forms for abelian groups, order and
    exponent certificates otherwise."""
    if isinstance(a, FgAbelianGroup) and isinstance(b, FgAbelianGroup):
        return a == b
    if isinstance(a, FgAbelianGroup) or isinstance(b, FgAbelianGroup):
        return False
    return (a.order is not None and (a.order, a.exponent, a.abelian) == (b.order, b.exponent, b.abelian))


def group_invariant(group: FiniteGroup):
    """The same identification applied to a group given by its table."""
    if group.is_abelian:
        return abelian_invariants(group)
    return FinitePresentationResult([], [], group.order, group.exponent, False)


def _pi1_json(g):
    if isinstance(g, FgAbelianGroup):
        return {"group": str(g), "abelian": True, "order": g.order if g.is_finite else None}
    return {"group": str(g), **g.to_json()}


# ---------------------------------------------------------------- comparisons

@dataclass
class Functor:
    """Object and arrow maps, by index or by label."""
    on_objects: dict
    on_arrows: dict


def _resolve(G1, G2, functor):
    def idx(group, labels, key):
        if isinstance(key, int) and not isinstance(key, bool) and key < len(labels) \
                and key not in labels:
            return key
        try:
            return labels.index(key)
        except ValueError:
            raise NotAWeakEquivalence(f"functor refers to unknown {group} {key!r}") from None
    fo = {idx("object", G1.objects, k): idx("object", G2.objects, v)
          for k, v in functor.on_objects.items()}
    fa = {idx("arrow", G1.arrows, k): idx("arrow", G2.arrows, v)
          for k, v in functor.on_arrows.items()}
    return fo, fa


@dataclass
class MoritaReport:
    agree: bool
    components: list

    def to_json(self):
        return {"agree": self.agree, "components": self.components}


def morita_pi1_check(G1: FiniteGroupoid, G2: FiniteGroupoid, functor: Functor) -> MoritaReport:
    """Check that ``functor`` is a weak equivalence (functorial, fully faithful,
    essentially surjective) and compare pi_1 on matching components."""
    fo, fa = _resolve(G1, G2, functor)
    if set(fo) != set(range(G1.num_objects)) or set(fa) != set(range(G1.num_arrows)):
        raise NotAWeakEquivalence("functor must be defined on every object and arrow")
    for g in range(G1.num_arrows):
        if G2.src[fa[g]] != fo[G1.src[g]] or G2.tgt[fa[g]] != fo[G1.tgt[g]]:
            raise NotAWeakEquivalence(f"arrow {G1.arrows[g]!r} is sent to a mismatched arrow")
    for (g, h), gh in G1.compose.items():
        if G2.compose[(fa[g], fa[h])] != fa[gh]:
            raise NotAWeakEquivalence("functor does not preserve composition")
    for x in range(G1.num_objects):
        if fa[G1.unit[x]] != G2.unit[fo[x]]:
            raise NotAWeakEquivalence("functor does not preserve units")
    for x in range(G1.num_objects):
        for y in range(G1.num_objects):
            img = sorted(fa[g] for g in G1.hom(x, y))
            if img != sorted(G2.hom(fo[x], fo[y])):
                raise NotAWeakEquivalence(
                    f"not fully faithful on {G1.objects[x]!r} -> {G1.objects[y]!r}")
    comp2 = G2.components()
    hit = set(fo.values())
    for c in comp2:
        if not hit.intersection(c):
            raise NotAWeakEquivalence(f"object {G2.objects[c[0]]!r} is not in the essential image")
    rows, agree = [], True
    for c in G1.components():
        x = c[0]
        a = pi1_of_classifying_space(G1, x)
        b = pi1_of_classifying_space(G2, fo[x])
        same = same_group(a, b)
        agree = agree and same
        rows.append({"object": G1.objects[x], "image": G2.objects[fo[x]],
                     "pi1": _pi1_json(a), "pi1Image": _pi1_json(b), "agree": same})
    return MoritaReport(agree, rows)


@dataclass
class BorelReport:
    agree: bool
    obj: object
    stabilizer_order: int
    pi1: object
    stabilizer: object

    def to_json(self):
        return {"agree": self.agree, "object": self.obj, "stabilizerOrder": self.stabilizer_order,
                "pi1": _pi1_json(self.pi1), "stabilizer": _pi1_json(self.stabilizer)}


def borel_stabilizer_check(group, points, action, obj) -> BorelReport:
    """Compare pi_1 of the component of B(G x| X) through ``obj`` with the
    stabilizer of ``obj``.

    For a finite set the Borel construction's component through x is
    EG x_G (G.x), which is B(Stab x), so the two must agree.  The stabilizer
    side is identified from the group table alone (element-order counts),
    independently of the presentation used for pi_1.
    """
    if isinstance(group, (str, list)):
        group = parse_group(group)
    points = list(points)
    if isinstance(action, int):
        raise TypeError("action must be a table")
    G = action_groupoid(group, points, action)
    x = obj if isinstance(obj, int) and obj not in points else points.index(obj)
    stab = [g for g in range(group.order) if action[g][x] == x]
    stab_inv = group_invariant(group.subgroup(stab))
    pi1 = pi1_of_classifying_space(G, x)
    return BorelReport(same_group(pi1, stab_inv), points[x], len(stab), pi1, stab_inv)


def z_n_groupoid(n: int) -> FiniteGroupoid:
    return group_groupoid(cyclic_group(n))
