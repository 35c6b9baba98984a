"""World state and the hourly simulation loop.

One tick is one hour.  Within a tick every vehicle executes the handler for
its current state exactly once, in ascending id order so that random draws
are consumed in a reproducible sequence.  A vehicle that departs at hour t
arrives at its PoI at t + 1, stays ``duration`` hours, switches to the
communicating state when the stay runs out, and spends one more hour
communicating before it is back home.  After the vehicle pass, every PoI's
quality takes one random-walk step and the tick's metrics are sampled.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    HOURS_PER_WEEK,
    Poi,
    TieTable,
    Vehicle,
    VehicleState,
    new_plan,
    record_encounter,
)
from .metrics import (
    MetricsSample,
    RunSeries,
    connectivity_index,
    poi_utilization_sd,
    quality_index,
    weekly_no_visit,
)
from .quality import QualityProcess, experience_of
from .strategy import (
    StrategyKind,
    check_outbound_as_planned,
    check_outbound_blacklist,
    check_outbound_replace,
    triadic_closure,
)

EventLog = list  # (kind, clock, vehicle_id, ...) tuples, appended in tick order


class SetupError(ValueError):
    """The requested world cannot be placed on the grid."""


@dataclass(frozen=True)
class SimConfig:
    grid_size: int = 75
    poi_count: int = 15
    home_count: int = 500
    strong_tie_threshold: int = 5
    strategy: StrategyKind = StrategyKind.AS_PLANNED
    weeks: int = 20
    runs: int = 100
    step_sigma: float = 0.05
    seed: int = 0
    closure_requires_both_strong: bool = False

    def validate(self) -> None:
        for name in ("grid_size", "poi_count", "home_count",
                     "strong_tie_threshold", "weeks", "runs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.step_sigma < 0:
            raise ValueError(f"step_sigma must be non-negative, got {self.step_sigma}")


def vehicle_count_for(home_count: int) -> int:
    # ceil(1.1 * homes) in exact integer arithmetic
    return -(-11 * home_count // 10)


@dataclass
class World:
    config: SimConfig
    rng: np.random.Generator
    quality_process: QualityProcess
    pois: list[Poi]
    poi_by_id: dict[int, Poi]
    homes: list[tuple[int, int]]
    vehicles: list[Vehicle]
    tie_tables: dict[int, TieTable]
    # ids of vehicles currently staying or communicating, per PoI
    occupants: dict[int, set[int]]
    clock: int = 0
    event_log: EventLog | None = None

    @property
    def poi_ids(self) -> list[int]:
        return [p.id for p in self.pois]


def setup(config: SimConfig, seed) -> World:
    """Build a fresh world; equal (config, seed) pairs give identical worlds.

    All randomness flows from one generator in a fixed order: cell placement
    first, then PoI qualities, then per-vehicle home, expectation, and plan.
    """
    rng = np.random.default_rng(seed)
    cells_total = config.grid_size * config.grid_size
    needed = config.poi_count + config.home_count
    if needed > cells_total:
        raise SetupError(
            f"{config.poi_count} PoIs + {config.home_count} homes do not fit "
            f"on a {config.grid_size}x{config.grid_size} grid")

    # distinct cells for PoIs and homes
    picked = rng.choice(cells_total, size=needed, replace=False)
    cells = [(int(c) % config.grid_size, int(c) // config.grid_size) for c in picked]
    quality_process = QualityProcess(step_sigma=config.step_sigma)
    pois = [Poi(id=i, quality=quality_process.initial(rng), cell=cells[i])
            for i in range(config.poi_count)]
    homes = cells[config.poi_count:]

    poi_ids = [p.id for p in pois]
    vehicles = []
    for vid in range(vehicle_count_for(config.home_count)):
        vehicles.append(Vehicle(
            id=vid,
            home=int(rng.integers(config.home_count)),
            expectation=float(rng.random()),
            plan=new_plan(rng, poi_ids),
            ties=TieTable(owner=vid),
        ))

    return World(
        config=config,
        rng=rng,
        quality_process=quality_process,
        pois=pois,
        poi_by_id={p.id: p for p in pois},
        homes=homes,
        vehicles=vehicles,
        tie_tables={v.id: v.ties for v in vehicles},
        occupants={p.id: set() for p in pois},
    )


def _check_outbound(world: World, vehicle: Vehicle, hour: int):
    strat = world.config.strategy
    if strat is StrategyKind.AS_PLANNED:
        return check_outbound_as_planned(vehicle.plan, hour)
    if strat is StrategyKind.BLACKLIST:
        return check_outbound_blacklist(vehicle.plan, hour, vehicle.expectation)
    # Replace variants refresh suspended rows from strong friends first.
    # With nothing suspended or nobody to copy from that refresh is a no-op,
    # so the hot path skips straight to the blacklist rule.
    suspended_any = False
    for row in vehicle.plan.rows:
        if row.suspended:
            suspended_any = True
            break
    if suspended_any and vehicle.ties.strong_ids:
        friend_plans = [world.vehicles[f].plan for f in vehicle.ties.strong_ids]
        return check_outbound_replace(vehicle.plan, hour, vehicle.expectation,
                                      friend_plans)
    return check_outbound_blacklist(vehicle.plan, hour, vehicle.expectation)


def _handle_at_home(world: World, vehicle: Vehicle, hour: int) -> None:
    log = world.event_log
    before = vehicle.plan.rows[:] if log is not None else None
    decision = _check_outbound(world, vehicle, hour)
    if log is not None:
        for i, old in enumerate(before):
            if vehicle.plan.rows[i] is not old:
                log.append(("replace", world.clock, vehicle.id, i,
                            vehicle.plan.rows[i].experience))
    if decision is None:
        return
    vehicle.state = VehicleState.OUTBOUND
    vehicle.current_poi = decision.poi_id
    vehicle.pending_row = decision.row_index
    vehicle.pending_duration = decision.duration


def _handle_outbound(world: World, vehicle: Vehicle) -> None:
    poi = world.poi_by_id[vehicle.current_poi]
    exp = experience_of(poi.quality, world.rng)
    vehicle.plan.rows[vehicle.pending_row].experience = exp
    vehicle.remaining_stay = vehicle.pending_duration
    vehicle.state = VehicleState.AT_POI
    vehicle.visits_this_week += 1
    world.occupants[poi.id].add(vehicle.id)
    if world.event_log is not None:
        world.event_log.append(("arrive", world.clock, vehicle.id, poi.id,
                                vehicle.pending_row, exp))


def _handle_at_poi(world: World, vehicle: Vehicle) -> None:
    vehicle.remaining_stay -= 1
    if vehicle.remaining_stay == 0:
        vehicle.state = VehicleState.COMMUNICATING


def _handle_communicating(world: World, vehicle: Vehicle) -> None:
    config = world.config
    if config.strategy.uses_communication:
        # Both directions are written here because this vehicle goes home at
        # the end of the handler and would be invisible to the peers' own
        # communicate phase.
        threshold = config.strong_tie_threshold
        for other_id in sorted(world.occupants[vehicle.current_poi]):
            if other_id == vehicle.id:
                continue
            record_encounter(vehicle.ties, other_id, world.clock, threshold)
            record_encounter(world.tie_tables[other_id], vehicle.id,
                             world.clock, threshold)
        if config.strategy.closure_enabled:
            triadic_closure(vehicle.id, world.tie_tables, world.rng,
                            world.clock, threshold,
                            config.closure_requires_both_strong)
    world.occupants[vehicle.current_poi].discard(vehicle.id)
    if world.event_log is not None:
        world.event_log.append(("home", world.clock, vehicle.id, vehicle.current_poi))
    vehicle.state = VehicleState.AT_HOME
    vehicle.current_poi = None
    vehicle.remaining_stay = 0
    vehicle.pending_row = -1
    vehicle.pending_duration = 0


def tick(world: World) -> MetricsSample:
    """Advance the world one hour and return the tick's metrics sample."""
    hour = world.clock % HOURS_PER_WEEK
    for vehicle in world.vehicles:  # ascending id order by construction
        state = vehicle.state
        if state is VehicleState.AT_HOME:
            _handle_at_home(world, vehicle, hour)
        elif state is VehicleState.OUTBOUND:
            _handle_outbound(world, vehicle)
        elif state is VehicleState.AT_POI:
            _handle_at_poi(world, vehicle)
        else:
            _handle_communicating(world, vehicle)
    for poi in world.pois:
        poi.quality = world.quality_process.step(poi.quality, world.rng)
    sample = MetricsSample(
        clock=world.clock,
        quality_index=quality_index(world.vehicles),
        connectivity_index=connectivity_index(world.vehicles),
        sdu=poi_utilization_sd(world.vehicles, world.poi_by_id),
    )
    world.clock += 1
    return sample


def run(config: SimConfig, run_seed, event_log: EventLog | None = None) -> RunSeries:
    """Simulate ``config.weeks`` weeks from a fresh world and collect the series.

    The same (config, run_seed) pair always produces an identical series.
    """
    world = setup(config, run_seed)
    world.event_log = event_log
    series = RunSeries()
    for _ in range(config.weeks * HOURS_PER_WEEK):
        series.samples.append(tick(world))
        if world.clock % HOURS_PER_WEEK == 0:
            series.weekly_no_visit.append(
                weekly_no_visit(v.visits_this_week for v in world.vehicles))
            for v in world.vehicles:
                v.visits_this_week = 0
    return series
