"""Service quality of a point of interest and how users perceive it."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# A visitor's perception deviates from true quality by up to +/-25%.
PERCEPTION_SPREAD = 0.25


def clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


@dataclass
class QualityProcess:
    """Bounded random walk: quality drifts by a uniform step each hour.

    Subclass and override :meth:`initial` / :meth:`step` to model a
    different quality dynamic; the engine only calls these two hooks.
    """

    step_sigma: float = 0.05

    def initial(self, rng: np.random.Generator) -> float:
        return float(rng.random())

    def step(self, quality: float, rng: np.random.Generator) -> float:
        delta = float(rng.uniform(-self.step_sigma, self.step_sigma))
        return clamp01(quality + delta)


def experience_of(quality: float, rng: np.random.Generator) -> float:
    """Experience a visitor takes away from a PoI of the given quality.

    The perceptive noise is multiplicative and deliberately not clamped,
    so a top-quality PoI can leave an experience above 1.
    """
    factor = 1.0 + float(rng.uniform(-PERCEPTION_SPREAD, PERCEPTION_SPREAD))
    return quality * factor
