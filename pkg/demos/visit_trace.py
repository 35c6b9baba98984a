#!/usr/bin/env python3
"""Hour-by-hour life of a single vehicle, then the moment a letdown
gets a destination struck from its weekly plan."""
import numpy as np

from vsnsim import (
    Plan,
    PlanRow,
    Poi,
    QualityProcess,
    SimConfig,
    StrategyKind,
    TieTable,
    Vehicle,
    VehicleState,
    World,
    check_outbound_blacklist,
    tick,
)

# a world small enough to assemble by hand: one vehicle, three places,
# quality frozen so the numbers stay legible
config = SimConfig(strategy=StrategyKind.AS_PLANNED, step_sigma=0.0)
pois = [Poi(10, 0.092), Poi(11, 0.600), Poi(12, 0.400)]
vehicle = Vehicle(
    id=0,
    home=0,
    expectation=0.46,
    plan=Plan([PlanRow(10, 17, 2), PlanRow(11, 122, 4), PlanRow(12, 50, 2)]),
    ties=TieTable(owner=0),
)
world = World(
    config=config,
    rng=np.random.default_rng(3),
    quality_process=QualityProcess(step_sigma=0.0),
    pois=pois,
    poi_by_id={p.id: p for p in pois},
    homes=[(0, 0)],
    vehicles=[vehicle],
    tie_tables={0: vehicle.ties},
    occupants={p.id: set() for p in pois},
)

print("plan: PoI 10 at hour 17 for 2h, PoI 11 at hour 122 for 4h, "
      "PoI 12 at hour 50 for 2h")
print()
print(" hour  state after the hour")
for _ in range(24):
    hour = world.clock
    tick(world)
    if 15 <= hour <= 22:
        print(f"  {hour:3d}  {vehicle.state.name}")

exp = vehicle.plan.rows[0].experience
print()
print(f"the stay at PoI 10 (quality 0.092) was rated {exp:.3f}, well under")
print(f"the vehicle's expectation of {vehicle.expectation}")

# the cautious planning rule reacts to that letdown when hour 17 next
# comes around: the row is suspended instead of visited
decision = check_outbound_blacklist(vehicle.plan, 17, vehicle.expectation)
print()
print(f"next week at hour 17: row for PoI 10 suspended: "
      f"{vehicle.plan.rows[0].suspended}")
print(f"the freed hour is given to the best remaining row instead: {decision}")
print(f"that row now fires at hour {vehicle.plan.rows[decision.row_index].time} "
      f"in later weeks")
