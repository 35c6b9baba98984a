"""Per-tick observables of a running world and their per-run time series."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .core import PLAN_ROWS, Vehicle, VehicleState

_PRESENT = (VehicleState.AT_POI, VehicleState.COMMUNICATING)


def quality_index(vehicles: list[Vehicle]) -> float:
    """Mean experience over every plan cell of every vehicle.

    Suspended rows count too: the index measures what the population
    currently believes about the PoIs, not what it still intends to visit.
    """
    if not vehicles:
        raise ValueError("quality_index of an empty population is undefined")
    total = 0.0
    for v in vehicles:
        for row in v.plan.rows:
            total += row.experience
    return total / (PLAN_ROWS * len(vehicles))


def _occupant_counts(vehicles: list[Vehicle], poi_ids: Iterable[int]) -> dict[int, int]:
    counts = {pid: 0 for pid in poi_ids}
    for v in vehicles:
        if v.state in _PRESENT:
            counts[v.current_poi] += 1
    return counts


def connectivity_index(vehicles: list[Vehicle]) -> float:
    """Mean number of co-located peers per vehicle at this instant.

    A vehicle counts as present at its PoI while staying or communicating
    there; vehicles at home or on the road have no peers.
    """
    if not vehicles:
        raise ValueError("connectivity_index of an empty population is undefined")
    counts: dict[int, int] = {}
    for v in vehicles:
        if v.state in _PRESENT:
            counts[v.current_poi] = counts.get(v.current_poi, 0) + 1
    # each of the n occupants of a PoI sees n - 1 peers
    degree_sum = sum(n * (n - 1) for n in counts.values())
    return degree_sum / len(vehicles)


def poi_utilization_sd(vehicles: list[Vehicle], poi_ids: Iterable[int]) -> float:
    """Population standard deviation of the per-PoI occupant counts.

    Low values mean the visiting load spreads evenly over the PoIs.
    """
    counts = list(_occupant_counts(vehicles, poi_ids).values())
    if not counts:
        raise ValueError("poi_utilization_sd needs at least one PoI")
    mean = sum(counts) / len(counts)
    var = sum((c - mean) ** 2 for c in counts) / len(counts)
    return math.sqrt(var)


def weekly_no_visit(visit_counts: Iterable[int]) -> int:
    """How many vehicles completed no visit during the elapsed week."""
    return sum(1 for c in visit_counts if c == 0)


@dataclass
class MetricsSample:
    clock: int
    quality_index: float
    connectivity_index: float
    sdu: float


@dataclass
class RunSeries:
    """Everything one simulation run produces: hourly samples plus weekly counts."""

    samples: list[MetricsSample] = field(default_factory=list)
    weekly_no_visit: list[int] = field(default_factory=list)

    @property
    def quality(self) -> np.ndarray:
        return np.array([s.quality_index for s in self.samples])

    @property
    def connectivity(self) -> np.ndarray:
        return np.array([s.connectivity_index for s in self.samples])

    @property
    def sdu(self) -> np.ndarray:
        return np.array([s.sdu for s in self.samples])
