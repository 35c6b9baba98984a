#!/usr/bin/env python3
"""
Watching a social graph grow out of co-located stays.

A deliberately crowded little town: many vehicles, only three places to
go, so run-ins are frequent.  Vehicles on the introduction-making
strategy turn repeated run-ins into strong friendships and then
introduce their friends to each other.
"""
from vsnsim import HOURS_PER_WEEK, SimConfig, StrategyKind, setup, tick

WEEKS = 2
SEED = 21

config = SimConfig(
    grid_size=12,
    poi_count=3,
    home_count=30,
    weeks=WEEKS,
    strategy=StrategyKind.REPLACE_WITH_CLOSURE,
    strong_tie_threshold=2,
)
world = setup(config, SEED)
print(f"{len(world.vehicles)} vehicles, {len(world.pois)} places, "
      f"strong after {config.strong_tie_threshold} run-ins")
print()
print(" day  acquainted pairs  strong pairs")

for hour in range(WEEKS * HOURS_PER_WEEK):
    tick(world)
    if (hour + 1) % 24 == 0:
        # every tie is recorded in both directions, so halve the totals
        weak = sum(len(v.ties.records) for v in world.vehicles) // 2
        strong = sum(len(v.ties.strong_ids) for v in world.vehicles) // 2
        print(f"  {(hour + 1) // 24:2d}   {weak:10d}  {strong:12d}")

best = max(world.vehicles, key=lambda v: len(v.ties.strong_ids))
print()
print(f"best connected vehicle: #{best.id} with "
      f"{len(best.ties.strong_ids)} strong friends")
for peer in sorted(best.ties.records):
    rec = best.ties.records[peer]
    kind = "strong" if rec.strong else "weak"
    print(f"   knows #{peer:3d}  {kind:6s}  met {rec.encounters}x, "
          f"last at hour {rec.last_encounter}")
