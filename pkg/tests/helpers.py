"""Hand-built worlds used by the engine, metrics, and acceptance tests."""

from __future__ import annotations

import numpy as np

from vsnsim.core import Plan, Poi, TieTable, Vehicle
from vsnsim.engine import SimConfig, World
from vsnsim.quality import QualityProcess


def plain_vehicle(vid: int, plan: Plan, expectation: float = 0.5) -> Vehicle:
    return Vehicle(id=vid, home=0, expectation=expectation, plan=plan,
                   ties=TieTable(owner=vid))


def hand_world(pois: list[Poi], vehicles: list[Vehicle],
               config: SimConfig | None = None, seed: int = 0) -> World:
    """A world assembled from explicit parts instead of random setup."""
    config = config or SimConfig()
    return World(
        config=config,
        rng=np.random.default_rng(seed),
        quality_process=QualityProcess(step_sigma=config.step_sigma),
        pois=pois,
        poi_by_id={p.id: p for p in pois},
        homes=[(0, 0)],
        vehicles=vehicles,
        tie_tables={v.id: v.ties for v in vehicles},
        occupants={p.id: set() for p in pois},
    )
