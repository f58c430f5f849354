"""Circle-invariant monomials and the Hilbert (Schwarz) embedding of C^n / S^1.

The monomial ``z^a zbar^b`` is invariant iff ``sum a_i (a_i - b_i) = 0``, so the
invariant exponents form the monoid of nonnegative solutions of one
homogeneous linear Diophantine equation in 2n unknowns.  Its Hilbert basis
is computed with the Contejean-Devie completion procedure.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from math import pi
from typing import Optional

import numpy as np

from .errors import DegreeCapTooLow, SeparationFailure
from .weights import WeightVector

SEPARATION_VALUE_TOL = 1e-9
SEPARATION_MATCH_TOL = 1e-6
ORBIT_GRID = 2048


@dataclass(frozen=True)
class MonomialExponent:
    a: tuple
    b: tuple

    @property
    def degree(self) -> int:
        return sum(self.a) + sum(self.b)

    @property
    def vector(self) -> tuple:
        return self.a + self.b

    def conjugate(self) -> "MonomialExponent":
        return MonomialExponent(self.b, self.a)

    @property
    def self_conjugate(self) -> bool:
        return self.a == self.b

    def charge(self, w) -> int:
        return sum(x * (p - q) for x, p, q in zip(w, self.a, self.b))

    def label(self) -> str:
        def mono(exps, bar):
            parts = []
            for i, e in enumerate(exps, start=1):
                if e:
                    v = f"{'zbar' if bar else 'z'}{i}"
                    parts.append(v if e == 1 else f"{v}^{e}")
            return " ".join(parts)
        return " ".join(p for p in (mono(self.a, False), mono(self.b, True)) if p) or "1"

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}


def grlex_key(e: MonomialExponent):
    # graded, then lexicographic with z1 > z2 > ... > zbar1 > ...
    return (e.degree, tuple(-x for x in e.vector))


@dataclass(frozen=True)
class HilbertBasis:
    weights: WeightVector
    generators: tuple
    complete: bool
    degree_cap: int

    @property
    def k(self) -> int:
        """Number of real generators of the invariant ring."""
        conj_pairs = sum(1 for g in self.generators if not g.self_conjugate)
        return sum(1 for g in self.generators if g.self_conjugate) + conj_pairs

    def to_json(self) -> dict:
        return {"generators": [g.to_json() for g in self.generators],
                "k": self.k, "complete": self.complete}

    def vectors(self) -> set:
        return {g.vector for g in self.generators}


def default_degree_cap(w: WeightVector) -> int:
    return 2 * sum(abs(a) for a in w) + 2


def _dominates(x, y) -> bool:
    return all(p >= q for p, q in zip(x, y))


def _solve_hilbert(coeffs, cap):
    """Contejean-Devie completion for ``coeffs . x = 0`` over N^d.

    Breadth-first by total degree: a candidate ``x`` with defect ``c . x``
    is only extended along unit vectors ``e_j`` with ``(c . x) * c_j < 0``,
    and any vector above a known solution is discarded.  Returns the minimal
    solutions and whether the frontier was exhausted within ``cap``.
    """
    d = len(coeffs)
    units = [tuple(int(i == j) for i in range(d)) for j in range(d)]
    basis = []
    frontier = set(units)
    degree = 1
    while frontier and degree <= cap:
        solved = sorted(x for x in frontier if sum(c * v for c, v in zip(coeffs, x)) == 0)
        # same-degree solutions are pairwise incomparable
        basis.extend(solved)
        next_frontier = set()
        for x in frontier:
            defect = sum(c * v for c, v in zip(coeffs, x))
            if defect == 0:
                continue
            for j in range(d):
                if defect * coeffs[j] >= 0:
                    continue
                y = list(x)
                y[j] += 1
                y = tuple(y)
                if not any(_dominates(y, s) for s in basis):
                    next_frontier.add(y)
        frontier = next_frontier
        degree += 1
    return basis, not frontier


def invariant_monoid_basis(w: WeightVector, degree_cap: Optional[int] = None,
                           strict: bool = False) -> HilbertBasis:
    """Hilbert basis of the invariant exponent monoid of the linear action.

    If the frontier is not exhausted by ``degree_cap`` the partial basis is
    returned with ``complete=False`` and a DegreeCapTooLow warning (raised
    instead when ``strict``).
    """
    cap = default_degree_cap(w) if degree_cap is None else int(degree_cap)
    n = w.n
    coeffs = tuple(w) + tuple(-a for a in w)
    vecs, complete = _solve_hilbert(coeffs, cap)
    if not complete:
        msg = f"Hilbert basis frontier not exhausted at degree cap {cap} for weights {list(w)}"
        if strict:
            raise DegreeCapTooLow(msg)
        warnings.warn(msg, DegreeCapTooLow, stacklevel=2)
    gens = sorted((MonomialExponent(v[:n], v[n:]) for v in vecs), key=grlex_key)
    return HilbertBasis(w, tuple(gens), complete, cap)


def is_generated_by(vector, basis_vectors) -> bool:
    """Whether ``vector`` is a nonnegative integer combination of ``basis_vectors``."""
    memo = {}

    def go(v):
        if not any(v):
            return True
        if v in memo:
            return memo[v]
        ok = False
        for g in basis_vectors:
            if _dominates(v, g):
                if go(tuple(p - q for p, q in zip(v, g))):
                    ok = True
                    break
        memo[v] = ok
        return ok

    return go(tuple(vector))


@dataclass(frozen=True)
class RealGenerator:
    """One real coordinate of the Hilbert map.

    ``part`` is ``"abs"`` for a self-conjugate monomial (real valued), or
    ``"re"``/``"im"`` for the real/imaginary part of ``z^a zbar^b``.
    """

    part: str
    exponent: MonomialExponent

    @property
    def name(self) -> str:
        e = self.exponent
        if self.part == "abs":
            body = " ".join(
                (f"|z{i}|^2" if p == 1 else f"|z{i}|^{2 * p}")
                for i, p in enumerate(e.a, start=1) if p)
            return body
        return f"{'Re' if self.part == 're' else 'Im'}({e.label()})"

    def evaluate(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        e = self.exponent
        value = np.prod(z ** np.asarray(e.a) * np.conj(z) ** np.asarray(e.b), axis=-1)
        if self.part == "abs":
            return value.real
        return value.real if self.part == "re" else value.imag

    def to_json(self) -> dict:
        return {"part": self.part, "name": self.name, **self.exponent.to_json()}


def real_generators(h: HilbertBasis) -> list:
    """Real generators: ``|z|^{2a}`` for each (a;a), Re/Im for each conjugate pair."""
    selfconj = [g for g in h.generators if g.self_conjugate]
    # representative of a pair {(a;b), (b;a)}: the one with a > b lexicographically
    reps = [g for g in h.generators if not g.self_conjugate and g.a > g.b]
    out = [RealGenerator("abs", g) for g in selfconj]
    for g in reps:
        out.append(RealGenerator("re", g))
        out.append(RealGenerator("im", g))
    return out


def evaluate_generators(gens, z) -> np.ndarray:
    """Stack generator values; shape (..., len(gens))."""
    return np.stack([g.evaluate(z) for g in gens], axis=-1)


def act(w: WeightVector, theta, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return z * np.exp(1j * np.asarray(w.entries) * theta)


def orbit_distance(w: WeightVector, z, z_other, grid: int = ORBIT_GRID) -> float:
    """min over a grid of angles of ``|e^{it} . z - z_other|``."""
    thetas = 2 * pi * np.arange(grid) / grid
    rotated = np.asarray(z, dtype=complex)[None, :] * np.exp(
        1j * np.outer(thetas, np.asarray(w.entries)))
    return float(np.min(np.linalg.norm(rotated - np.asarray(z_other)[None, :], axis=1)))


@dataclass
class SeparationReport:
    trials: int
    orbit_pairs: int
    matched_pairs: int
    max_orbit_value_gap: float
    max_orbit_distance_when_matched: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _unit_points(rng, count, n):
    x = rng.standard_normal((count, 2 * n))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    return x[:, :n] + 1j * x[:, n:]


def embedding_separation_check(w: WeightVector, gens, trials: int = 200,
                               seed: int = 0) -> SeparationReport:
    """Numerically test that the generators are invariant and separate orbits.

    Each trial draws a unit point ``z`` and three partners: a point on its
    orbit, a point with the same moduli but random phases, and an independent
    point.  Orbit partners must have equal values (1e-9); any partner with
    values equal to 1e-6 must lie on the same orbit up to the angular grid
    resolution.  Raises SeparationFailure with the offending pair.
    """
    rng = np.random.default_rng(seed)
    n = w.n
    amax = max(abs(a) for a in w)
    grid_slack = amax * pi / ORBIT_GRID * 1.01 + 1e-9
    z = _unit_points(rng, trials, n)
    theta = rng.uniform(0, 2 * pi, size=trials)
    partners = {
        "orbit": act(w, theta[:, None], z),
        "phase": np.abs(z) * np.exp(1j * rng.uniform(0, 2 * pi, size=(trials, n))),
        "independent": _unit_points(rng, trials, n),
    }
    fz = evaluate_generators(gens, z)
    max_gap = 0.0
    max_dist = 0.0
    matched = 0
    for kind, zz in partners.items():
        fzz = evaluate_generators(gens, zz)
        gaps = np.max(np.abs(fz - fzz), axis=1) if len(gens) else np.zeros(trials)
        if kind == "orbit":
            max_gap = float(np.max(gaps))
            bad = np.flatnonzero(gaps > SEPARATION_VALUE_TOL)
            if len(bad):
                i = bad[0]
                raise SeparationFailure(
                    "generators differ on a single orbit", witness=(z[i], zz[i]))
        for i in np.flatnonzero(gaps <= SEPARATION_MATCH_TOL):
            matched += 1
            dist = orbit_distance(w, z[i], zz[i])
            max_dist = max(max_dist, dist)
            if dist > grid_slack:
                raise SeparationFailure(
                    f"generators agree on points from different orbits "
                    f"(orbit distance {dist:.3g})", witness=(z[i], zz[i]))
    return SeparationReport(trials, trials, matched, max_gap, max_dist)


def basis_to_json(h: HilbertBasis) -> str:
    return json.dumps(h.to_json())


def basis_from_json(w: WeightVector, doc) -> HilbertBasis:
    if isinstance(doc, str):
        doc = json.loads(doc)
    unknown = set(doc) - {"generators", "k", "complete"}
    if unknown:
        raise ValueError(f"unknown fields in basis document: {sorted(unknown)}")
    gens = tuple(MonomialExponent(tuple(g["a"]), tuple(g["b"])) for g in doc["generators"])
    h = HilbertBasis(w, gens, bool(doc["complete"]), default_degree_cap(w))
    if h.k != doc["k"]:
        raise ValueError(f"k={doc['k']} does not match {h.k} derived from generators")
    return h
