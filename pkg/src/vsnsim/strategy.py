"""Visit-selection strategies.

Four rules decide, for a vehicle parked at home, whether to head out this
hour and where to:

* ``AS_PLANNED`` follows the weekly plan blindly.
* ``BLACKLIST`` suspends a scheduled row whose last experience fell short of
  the vehicle's expectation and tries to reschedule an acceptable row into
  the freed hour.
* ``REPLACE`` additionally overwrites suspended rows with rows copied from
  strong friends before applying the blacklist rule.
* ``REPLACE_WITH_CLOSURE`` is ``REPLACE`` plus friend-of-a-friend tie
  creation while the vehicle communicates at a PoI.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import Plan, TieTable, insert_strong


class StrategyKind(Enum):
    AS_PLANNED = "asplanned"
    BLACKLIST = "blacklist"
    REPLACE = "replace"
    REPLACE_WITH_CLOSURE = "replace_closure"

    @property
    def uses_communication(self) -> bool:
        return self in (StrategyKind.REPLACE, StrategyKind.REPLACE_WITH_CLOSURE)

    @property
    def closure_enabled(self) -> bool:
        return self is StrategyKind.REPLACE_WITH_CLOSURE


@dataclass(frozen=True)
class OutboundDecision:
    """Which plan row fires now, and where it sends the vehicle."""

    row_index: int
    poi_id: int
    duration: int


def _decision(plan: Plan, row_index: int) -> OutboundDecision:
    row = plan.rows[row_index]
    return OutboundDecision(row_index=row_index, poi_id=row.poi_id,
                            duration=row.duration)


def check_outbound_as_planned(plan: Plan, hour_of_week: int) -> OutboundDecision | None:
    """First row scheduled at this hour, regardless of experience or suspension."""
    for i, row in enumerate(plan.rows):
        if row.time == hour_of_week:
            return _decision(plan, i)
    return None


def check_outbound_blacklist(plan: Plan, hour_of_week: int,
                             expectation: float) -> OutboundDecision | None:
    """Visit the scheduled row only if its last experience beat expectation.

    A disappointing scheduled row is suspended on the spot; the plan is then
    scanned top to bottom for the first live row whose experience is still
    acceptable, and that row is rescheduled into the current hour and
    visited instead.  A scheduled row that is already suspended blocks the
    hour entirely: no scan, no visit.
    """
    scheduled = None
    for i, row in enumerate(plan.rows):
        if row.time == hour_of_week:
            scheduled = i
            break
    if scheduled is None:
        return None
    row = plan.rows[scheduled]
    if row.suspended:
        return None
    if row.experience > expectation:
        return _decision(plan, scheduled)
    row.suspended = True
    for j, alt in enumerate(plan.rows):
        if not alt.suspended and alt.experience >= expectation:
            alt.time = hour_of_week  # reschedule the fallback into this hour
            return _decision(plan, j)
    return None


def replace_suspended(plan: Plan, friend_plans: list[Plan]) -> None:
    """Overwrite each suspended row with a friend's first live row.

    Friends are consulted in the order given (the engine passes them in
    ascending id order); the donor row is copied verbatim, donor plans are
    never modified.  Rows for which no friend has a live row are left
    suspended.
    """
    for i, row in enumerate(plan.rows):
        if not row.suspended:
            continue
        for fplan in friend_plans:
            donor = None
            for cand in fplan.rows:
                if not cand.suspended:
                    donor = cand
                    break
            if donor is not None:
                plan.rows[i] = donor.copy()
                break


def check_outbound_replace(plan: Plan, hour_of_week: int, expectation: float,
                           friend_plans: list[Plan]) -> OutboundDecision | None:
    """Refresh suspended rows from strong friends, then apply the blacklist rule."""
    replace_suspended(plan, friend_plans)
    return check_outbound_blacklist(plan, hour_of_week, expectation)


def triadic_closure(vehicle_id: int, tables: dict[int, TieTable],
                    rng: np.random.Generator, now: int, threshold: int,
                    require_both_strong: bool = False) -> None:
    """Introduce two randomly drawn acquaintances of ``vehicle_id`` to each other.

    One candidate pair is drawn per call.  The introduction only happens when
    the first draw is a strong friend of the introducer (and the second one
    too, if ``require_both_strong``); the new mutual records are created
    strong outright, with the encounter counter preset to ``threshold`` so
    the strong flag stays consistent with the counter.
    """
    table = tables[vehicle_id]
    peers = sorted(table.records)
    if len(peers) <= 1:
        return
    first_idx = int(rng.integers(len(peers)))
    second_idx = int(rng.integers(len(peers)))
    if first_idx == second_idx:
        return
    first, second = peers[first_idx], peers[second_idx]
    if not table.records[first].strong:
        return
    if require_both_strong and not table.records[second].strong:
        return
    first_table = tables[first]
    second_table = tables[second]
    if second not in first_table.records and first not in second_table.records:
        insert_strong(first_table, second, now, threshold)
        insert_strong(second_table, first, now, threshold)
    elif second not in first_table.records:
        insert_strong(first_table, second, now, threshold)
    elif first not in second_table.records:
        insert_strong(second_table, first, now, threshold)
