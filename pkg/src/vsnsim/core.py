"""Plan, tie, vehicle, and point-of-interest primitives.

Everything here is plain mutable state plus a handful of small helpers.
The hourly loop that advances this state lives in :mod:`vsnsim.engine`;
the visit-selection rules live in :mod:`vsnsim.strategy`.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

HOURS_PER_WEEK = 168
PLAN_ROWS = 3
MIN_DURATION = 1
MAX_DURATION = 5


class VehicleState(IntEnum):
    AT_HOME = 0
    OUTBOUND = 1
    AT_POI = 2
    COMMUNICATING = 3


@dataclass
class PlanRow:
    """One weekly appointment: visit ``poi_id`` at hour-of-week ``time``."""

    poi_id: int
    time: int  # hour of week, 0..167
    duration: int  # hours of stay, 1..5
    experience: float = 1.0  # starts optimistic so every row fires at least once
    suspended: bool = False

    def copy(self) -> PlanRow:
        return PlanRow(self.poi_id, self.time, self.duration,
                       self.experience, self.suspended)


@dataclass
class Plan:
    """A vehicle's weekly schedule: always exactly three rows."""

    rows: list[PlanRow]

    def has_suspended(self) -> bool:
        return any(row.suspended for row in self.rows)

    def copy(self) -> Plan:
        return Plan([row.copy() for row in self.rows])


def new_plan(rng: np.random.Generator, poi_ids: list[int]) -> Plan:
    """Draw a fresh plan: uniform PoI, hour of week, and stay duration per row."""
    if not poi_ids:
        raise ValueError("cannot build a plan without any points of interest")
    rows = [
        PlanRow(
            poi_id=int(poi_ids[rng.integers(len(poi_ids))]),
            time=int(rng.integers(HOURS_PER_WEEK)),
            duration=int(rng.integers(MIN_DURATION, MAX_DURATION + 1)),
        )
        for _ in range(PLAN_ROWS)
    ]
    return Plan(rows)


@dataclass
class TieRecord:
    """What one vehicle knows about one peer it has met."""

    peer: int
    last_encounter: int  # clock hour of the most recent meeting
    encounters: int = 1
    strong: bool = False


@dataclass
class TieTable:
    """Per-vehicle social memory, keyed by peer id.

    ``strong_ids`` mirrors the strong records in ascending order and is
    maintained on every promotion, so the donor-scan hot path never sorts.
    """

    owner: int
    records: dict[int, TieRecord] = field(default_factory=dict)
    strong_ids: list[int] = field(default_factory=list)


def record_encounter(table: TieTable, peer: int, now: int, threshold: int) -> None:
    """Note one meeting with ``peer`` at hour ``now``.

    A first meeting creates a weak record; repeat meetings bump the counter,
    and the tie turns strong once the counter reaches ``threshold``.  Strong
    ties never demote.
    """
    if peer == table.owner:
        raise ValueError(f"vehicle {table.owner} cannot record a tie to itself")
    rec = table.records.get(peer)
    if rec is None:
        rec = TieRecord(peer=peer, last_encounter=now)
        table.records[peer] = rec
        if rec.encounters >= threshold:
            rec.strong = True
            insort(table.strong_ids, peer)
    else:
        rec.encounters += 1
        rec.last_encounter = now
        if not rec.strong and rec.encounters >= threshold:
            rec.strong = True
            insort(table.strong_ids, peer)


def insert_strong(table: TieTable, peer: int, now: int, encounters: int) -> None:
    """Insert an already-strong record directly, bypassing the counter path."""
    if peer == table.owner:
        raise ValueError(f"vehicle {table.owner} cannot record a tie to itself")
    if peer in table.records:
        raise ValueError(f"vehicle {table.owner} already has a record for {peer}")
    table.records[peer] = TieRecord(peer=peer, last_encounter=now,
                                    encounters=encounters, strong=True)
    insort(table.strong_ids, peer)


def strong_friends(table: TieTable) -> list[int]:
    """Ids of all strong peers, ascending."""
    return list(table.strong_ids)


@dataclass
class Poi:
    id: int
    quality: float
    cell: tuple[int, int] = (0, 0)  # grid cell, informational only


@dataclass
class Vehicle:
    id: int
    home: int  # index of the home cell the vehicle parks at
    expectation: float  # minimum experience this user accepts
    plan: Plan
    ties: TieTable
    state: VehicleState = VehicleState.AT_HOME
    current_poi: int | None = None
    remaining_stay: int = 0
    visits_this_week: int = 0
    # destination bookkeeping between the outbound decision and the arrival
    pending_row: int = -1
    pending_duration: int = 0
