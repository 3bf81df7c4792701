"""Discrete Herglotz measures and the Caratheodory class.

A function p with p(0) = 1 and positive real part on the unit disk is the
Herglotz transform of a probability measure on the circle.  This module
works with finitely supported measures

    p(z) = sum_k lam_k (1 + z e^{-i theta_k}) / (1 - z e^{-i theta_k}),

whose Taylor coefficients are the moments p_n = 2 sum_k lam_k e^{-i n theta_k}.
Finite supports are dense in the coefficient bodies at any fixed truncation
order, so nothing is lost for the degree-7 functionals computed here.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .series import DEFAULT_ORDER, TruncatedSeries

MAX_ATOMS = 8

WEIGHT_TOL = 1e-12


class CaratheodoryMargins(NamedTuple):
    """Slack in the three classical coefficient inequalities.

    m1 = 2 - max_n |p_n|, m2 = 2 - |p_2 - p_1^2|, m3 = 2 - |p_3 - p_1 p_2|.
    All three are nonnegative for genuine Caratheodory functions.
    """

    m1: float
    m2: float
    m3: float


@dataclass(frozen=True)
class HerglotzMeasure:
    """Probability measure on the circle with finitely many atoms.

    ``atoms`` is a tuple of (weight, angle) pairs; weights are nonnegative
    and sum to 1 within WEIGHT_TOL.
    """

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "atoms", tuple((float(w), float(t)) for w, t in self.atoms)
        )
        if not 1 <= len(self.atoms) <= MAX_ATOMS:
            raise ValueError(f"need between 1 and {MAX_ATOMS} atoms, got {len(self.atoms)}")
        if any(w < 0 for w, _ in self.atoms):
            raise ValueError("atom weights must be nonnegative")
        total = sum(w for w, _ in self.atoms)
        if abs(total - 1.0) > WEIGHT_TOL:
            raise ValueError(f"atom weights sum to {total}, expected 1")

    def coefficient(self, n: int) -> complex:
        """Taylor coefficient p_n = 2 sum_k lam_k e^{-i n theta_k} (n >= 1)."""
        if n < 1:
            raise ValueError("coefficients are indexed from 1")
        return 2 * sum(w * cmath.exp(-1j * n * t) for w, t in self.atoms)

    def series(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        """The truncated Taylor series of p, with constant term 1."""
        return TruncatedSeries(
            (1 + 0j,) + tuple(self.coefficient(n) for n in range(1, order + 1))
        )

    def evaluate(self, zeta: complex) -> complex:
        """Exact rational evaluation of p(zeta) on the open disk."""
        acc = 0j
        for w, t in self.atoms:
            u = zeta * cmath.exp(-1j * t)
            acc += w * (1 + u) / (1 - u)
        return acc

    def rotated(self, phi: float) -> "HerglotzMeasure":
        """Shift every atom angle by ``phi`` (rotates f(z) to e^{-i phi} f(e^{i phi} z))."""
        return HerglotzMeasure(tuple((w, t + phi) for w, t in self.atoms))

    def margins(self, order: int = DEFAULT_ORDER) -> CaratheodoryMargins:
        """Margins of the coefficient inequalities |p_n| <= 2,
        |p_2 - p_1^2| <= 2 and |p_3 - p_1 p_2| <= 2."""
        p = [self.coefficient(n) for n in range(1, max(order, 3) + 1)]
        m1 = 2.0 - max(abs(pn) for pn in p[:order])
        m2 = 2.0 - abs(p[1] - p[0] ** 2)
        m3 = 2.0 - abs(p[2] - p[0] * p[1])
        return CaratheodoryMargins(m1, m2, m3)

    def to_json(self) -> dict:
        return {"atoms": [[w, t] for w, t in self.atoms]}

    @classmethod
    def from_json(cls, obj: dict) -> "HerglotzMeasure":
        return cls(tuple((w, t) for w, t in obj["atoms"]))


def sample_measure(seed: int, max_atoms: int = MAX_ATOMS) -> HerglotzMeasure:
    """Deterministic pseudo-random measure keyed entirely by ``seed``.

    Atom count uniform in [1, max_atoms]; weights flat on the simplex
    (normalized iid exponentials); angles uniform in [0, 2 pi).
    """
    if max_atoms < 1:
        raise ValueError("max_atoms must be >= 1")
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_atoms + 1))
    raw = rng.exponential(1.0, n)
    weights = raw / raw.sum()
    angles = rng.uniform(0.0, 2.0 * np.pi, n)
    return HerglotzMeasure(tuple(zip(weights.tolist(), angles.tolist())))
