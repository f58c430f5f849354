"""Quadratic momentum map of a linear circle action and its zero fiber."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EmptyLevelSet
from .weights import WeightVector, classify_signs

FIBER_TOL = 1e-9

POINT_FIBER = "POINT_FIBER"
FLAT_FIBER = "FLAT_FIBER"
CONE = "CONE"


def momentum(w: WeightVector, z) -> float | np.ndarray:
    """``1/2 sum a_i |z_i|^2``.

    ``z`` may be a single point (length n) or an array of points with the
    coordinate axis last; the result then has the leading shape.
    """
    z = np.asarray(z, dtype=complex)
    if z.shape[-1:] != (w.n,):
        raise DimensionMismatch(f"point has {z.shape[-1:]} coordinates, weights have {w.n}")
    alpha = np.asarray(w.entries, dtype=float)
    out = 0.5 * (np.abs(z) ** 2 @ alpha)
    return float(out) if out.ndim == 0 else out


def is_regular_value(w: WeightVector, a: float) -> bool:
    # The fixed set {z_i = 0 whenever a_i != 0} lies inside the zero fiber.
    return a != 0


@dataclass(frozen=True)
class ConeLinkDecomposition:
    """Shape of the zero fiber: a cone over (S^lMinus x S^lPlus) times a flat factor.

    ``l_minus``/``l_plus`` are the dimensions of the spheres the two ellipsoids
    are diffeomorphic to; an empty side is recorded as the (-1)-sphere.
    """

    kind: str
    m: int
    j: int
    l_minus: int
    l_plus: int
    flat_factor_dim: int

    @property
    def link_description(self) -> str:
        if self.kind != CONE:
            return "(empty link)"
        return f"(S^{self.l_minus} x S^{self.l_plus})/S^1"

    @property
    def fiber_dimension(self) -> int:
        """Real dimension of the zero fiber."""
        if self.kind == CONE:
            return self.l_minus + self.l_plus + 1 + self.flat_factor_dim
        return self.flat_factor_dim

    def to_json(self) -> dict:
        return {"kind": self.kind, "m": self.m, "lMinus": self.l_minus,
                "lPlus": self.l_plus, "flatFactorDim": self.flat_factor_dim}

    @classmethod
    def from_json(cls, doc) -> "ConeLinkDecomposition":
        if isinstance(doc, str):
            doc = json.loads(doc)
        m, lm, lp = doc["m"], doc["lMinus"], doc["lPlus"]
        j = m + (lp + 1) // 2
        return cls(doc["kind"], m, j, lm, lp, doc["flatFactorDim"])


def cone_link_decomposition(w: WeightVector) -> ConeLinkDecomposition:
    signs = classify_signs(w)
    m, j, n = signs.num_negative, signs.num_nonzero, signs.n
    if signs.mixed:
        kind = CONE
    elif j == n:
        kind = POINT_FIBER
    else:
        kind = FLAT_FIBER
    return ConeLinkDecomposition(kind, m, j, 2 * m - 1, 2 * (j - m) - 1, 2 * (n - j))


def reduced_dimension(w: WeightVector, a: float = 0) -> int:
    """Real dimension of the symplectic quotient at level ``a``."""
    signs = classify_signs(w)
    n, j = signs.n, signs.num_nonzero
    if a > 0 and signs.num_positive == 0 or a < 0 and signs.num_negative == 0:
        raise EmptyLevelSet(f"level {a} is not attained by weights {list(w)}")
    if a != 0 or signs.mixed:
        return 2 * n - 2
    # one-sided: the fiber is the flat factor, on which the circle acts trivially
    return 2 * (n - j)


def _unit_sphere(rng, count, real_dim):
    x = rng.standard_normal((count, real_dim))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _onto_ellipsoid(rng, count, abs_weights):
    # scale a uniform sphere sample onto sum |a_i| |z_i|^2 = 1
    k = len(abs_weights)
    x = _unit_sphere(rng, count, 2 * k)
    z = x[:, :k] + 1j * x[:, k:]
    scale = np.sqrt(np.abs(z) ** 2 @ np.asarray(abs_weights, dtype=float))
    return z / scale[:, None]


def sample_zero_fiber(w: WeightVector, count: int, seed: int = 0,
                      max_radius: float = 2.0) -> np.ndarray:
    """Deterministic sample of ``count`` points of the zero fiber, shape (count, n).

    Cone points are ``t * (e_minus, e_plus)`` with ``e_minus``, ``e_plus`` on
    the two ellipsoids and ``t`` uniform in [0, max_radius]; zero-weight
    coordinates are filled with standard complex normals.
    """
    rng = np.random.default_rng(seed)
    alpha = np.asarray(w.entries)
    out = np.zeros((count, w.n), dtype=complex)
    zero = np.flatnonzero(alpha == 0)
    decomposition = cone_link_decomposition(w)
    if decomposition.kind == CONE:
        neg = np.flatnonzero(alpha < 0)
        pos = np.flatnonzero(alpha > 0)
        t = rng.uniform(0.0, max_radius, size=count)
        out[:, neg] = t[:, None] * _onto_ellipsoid(rng, count, -alpha[neg])
        out[:, pos] = t[:, None] * _onto_ellipsoid(rng, count, alpha[pos])
    if len(zero):
        out[:, zero] = (rng.standard_normal((count, len(zero)))
                        + 1j * rng.standard_normal((count, len(zero))))
    return out


def point_to_json(z) -> list:
    return [[float(c.real), float(c.imag)] for c in np.asarray(z, dtype=complex)]


def point_from_json(doc) -> np.ndarray:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return np.array([complex(re, im) for re, im in doc])
